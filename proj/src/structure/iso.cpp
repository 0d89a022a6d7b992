#include "jw/structure/iso.hpp"

namespace jw::structure {

AlgebraHom::AlgebraHom(witt::WittPtr src, witt::WittPtr dst, std::vector<TruncPoly> generator_images)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      images_(std::move(generator_images)),
      matrix_(src_->field(), dst_->truncated()->dim(), src_->truncated()->dim()) {
  if (!src_->field()->same_as(*dst_->field()) || src_->n() != dst_->n()) {
    throw Error(ErrorKind::ContextMismatch, "source and target algebras differ in field or n");
  }
  if (images_.size() != src_->n()) throw Error(ErrorKind::BadParam, "need one image per generator");
  const auto& dtrunc = dst_->truncated();
  const auto one = trunc::Monomial::one(dst_->n());
  for (const auto& g : images_) {
    if (!g.algebra()->compatible(*dtrunc)) throw Error(ErrorKind::ContextMismatch, "image outside the target");
    if (g.coeff(one).code != 0) throw Error(ErrorKind::BadParam, "generator image has a constant term");
  }
  const auto& strunc = src_->truncated();
  for (std::size_t key = 0; key < strunc->dim(); ++key) {
    const auto alpha = strunc->monomial(key);
    auto img = TruncPoly::constant(dtrunc, dtrunc->field()->one());
    for (std::size_t i = 0; i < alpha.arity(); ++i) img = img * trunc::pow(images_[i], alpha[i]);
    for (const auto& [m, c] : img.terms()) matrix_(m.key(dst_->p()), key) = c;
  }
  inverse_ = exactla::inverse(matrix_);
}

TruncPoly AlgebraHom::operator()(const TruncPoly& f) const {
  if (!f.algebra()->compatible(*src_->truncated())) throw Error(ErrorKind::ContextMismatch, "polynomial outside the source");
  const auto coords = f.to_coords();
  return TruncPoly::from_coords(dst_->truncated(), matrix_ * coords);
}

TruncPoly AlgebraHom::inverse(const TruncPoly& g) const {
  if (!inverse_) throw Error(ErrorKind::NotRegular, "algebra map is not invertible");
  if (!g.algebra()->compatible(*dst_->truncated())) throw Error(ErrorKind::ContextMismatch, "polynomial outside the target");
  const auto coords = g.to_coords();
  return TruncPoly::from_coords(src_->truncated(), *inverse_ * coords);
}

WittElement AlgebraHom::induced(const WittElement& e) const {
  if (!e.algebra()->compatible(*src_)) throw Error(ErrorKind::ContextMismatch, "element outside the source");
  WittElement out(dst_);
  for (std::size_t j = 1; j <= dst_->n(); ++j) {
    const auto pre = inverse(TruncPoly::variable(dst_->truncated(), j));
    out = out + WittElement::from_poly(dst_, (*this)(witt::apply(e, pre)), j);
  }
  return out;
}

AlgebraHom psi_iso(const WittPtr& alg, std::size_t k) {
  if (k < 1 || k > alg->n()) throw Error(ErrorKind::BadParam, "psi_k needs 1 <= k <= n");
  if (k >= 2 && alg->p() == 2) throw Error(ErrorKind::BadParam, "psi_k for k >= 2 needs p > 2");
  const auto& t = alg->truncated();
  const auto x1 = TruncPoly::variable(t, 1);
  std::vector<TruncPoly> images{x1};
  for (std::size_t i = 2; i <= alg->n(); ++i) {
    images.push_back(TruncPoly::variable(t, i) + (i == k ? x1 * x1 : x1));
  }
  return AlgebraHom(alg, alg, std::move(images));
}

AlgebraHom phi_iso(const WittPtr& alg, const WittPtr& target, std::span<const gf::Elem> c) {
  if (c.size() != alg->n()) throw Error(ErrorKind::BadParam, "phi needs n coefficients");
  if (c[0].code == 0) throw Error(ErrorKind::BadParam, "phi needs c_1 != 0");
  const auto& t = target->truncated();
  const auto y1 = TruncPoly::variable(t, 1);
  std::vector<TruncPoly> images;
  for (std::size_t i = 1; i <= alg->n(); ++i) {
    auto img = y1.scaled(c[i - 1]);
    if (i >= 2) img = img + TruncPoly::variable(t, i);
    images.push_back(std::move(img));
  }
  return AlgebraHom(alg, target, std::move(images));
}

WittElement phi_closed_form(const AlgebraHom& phi, std::span<const gf::Elem> c,
                            const trunc::Monomial& alpha, std::size_t i) {
  const auto& dst = phi.target();
  const auto& f = *dst->field();
  const auto g = phi(TruncPoly::term(phi.source()->truncated(), alpha, f.one()));
  if (i >= 2) return WittElement::from_poly(dst, g, i);
  const auto inv_c1 = f.inv(c[0]);
  auto out = WittElement::from_poly(dst, g.scaled(inv_c1), 1);
  for (std::size_t k = 2; k <= dst->n(); ++k) {
    out = out - WittElement::from_poly(dst, g.scaled(f.mul(c[k - 1], inv_c1)), k);
  }
  return out;
}

bool preserves_brackets(const AlgebraHom& h) {
  const auto& src = h.source();
  const auto dim = static_cast<std::uint32_t>(src->dim());
  std::vector<WittElement> basis, images;
  for (std::uint32_t a = 0; a < dim; ++a) {
    basis.push_back(WittElement::basis(src, a));
    images.push_back(h.induced(basis.back()));
  }
  for (std::uint32_t a = 0; a < dim; ++a) {
    for (std::uint32_t b = a + 1; b < dim; ++b) {
      WittElement lhs(h.target());
      const auto ab = witt::bracket(basis[a], basis[b]);
      for (const auto& [k, c] : ab.terms()) lhs = lhs + images[k].scaled(c);
      if (lhs != witt::bracket(images[a], images[b])) return false;
    }
  }
  return true;
}

CheckReport torus_cartan_check(const WittPtr& alg) {
  Stopwatch sw;
  CheckReport rep{.check = "torus-cartan", .params = params_of(*alg)};
  const auto torus = witt::torus_basis(alg);
  const std::size_t kmax = alg->p() == 2 ? 1 : alg->n();
  json ks = json::array();
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto tk = witt::t_k_basis(alg, k);
    const auto span_tk = span_of_elements(alg, tk);
    const bool self_centralizing = centralizer_of_set(alg, tk) == span_tk;
    const bool abelian = is_abelian(tk);
    const auto psi = psi_iso(alg, k);
    std::vector<WittElement> image;
    for (const auto& t : torus) image.push_back(psi.induced(t));
    const bool conjugate = psi.invertible() && span_of_elements(alg, image) == span_tk;
    const bool ok = self_centralizing && abelian && conjugate && span_tk.dim() == alg->n();
    ks.push_back({{"k", k},
                  {"dim", span_tk.dim()},
                  {"self_centralizing", self_centralizing},
                  {"abelian", abelian},
                  {"psi_image", conjugate}});
    if (!ok) rep.fail({{"k", k}, {"basis", [&] {
                         json j = json::array();
                         for (const auto& x : tk) j.push_back(io::terms_to_json(x));
                         return j;
                       }()}});
  }
  rep.dims["torus"] = torus.size();
  rep.result["k"] = std::move(ks);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace jw::structure
