#include "jw/structure/roots.hpp"

namespace jw::structure {
namespace {

void require_lambda(const WittPtr& alg, const gf::RegularVector& lambda) {
  if (!lambda.field()->same_as(*alg->field())) {
    throw Error(ErrorKind::DescriptorMismatch, "lambda lies in another field");
  }
  if (lambda.size() != alg->n()) throw Error(ErrorKind::BadParam, "lambda must have n entries");
}

json root_json(const Root& r) {
  json j = json::array();
  for (auto e : r) j.push_back(static_cast<unsigned>(e));
  return j;
}

}  // namespace

std::size_t RootDecomposition::total_dim() const {
  std::size_t d = torus.dim();
  for (const auto& [r, s] : parts) d += s.dim();
  return d;
}

Root root_of(const witt::WittAlgebra& alg, std::uint32_t index) {
  const auto& beta = alg.monomial_of(index);
  const auto j = alg.direction_of(index);
  Root r(alg.n());
  for (std::size_t i = 0; i < alg.n(); ++i) {
    const unsigned shift = (i + 1 == j) ? alg.p() - 1 : 0;
    r[i] = static_cast<std::uint8_t>((beta[i] + shift) % alg.p());
  }
  return r;
}

gf::Elem weight(const gf::RegularVector& lambda, const Root& r) {
  const auto& f = *lambda.field();
  gf::Elem w = f.zero();
  for (std::size_t i = 0; i < r.size(); ++i) w = f.add(w, f.mul(lambda[i], f.from_int(r[i])));
  return w;
}

RootDecomposition root_decomposition(const WittPtr& alg, const gf::RegularVector& lambda) {
  require_lambda(alg, lambda);
  const auto& f = *alg->field();
  std::map<Root, std::vector<exactla::Vec>> members;
  for (std::uint32_t idx = 0; idx < alg->dim(); ++idx) {
    exactla::Vec v(alg->dim());
    v[idx] = f.one();
    members[root_of(*alg, idx)].push_back(std::move(v));
  }
  const Root zero(alg->n(), 0);
  RootDecomposition out{.torus = SubspaceBasis(alg->field(), alg->dim()), .parts = {}};
  for (const auto& [r, vs] : members) {
    auto s = exactla::span_of(alg->field(), alg->dim(), vs);
    if (r == zero) {
      out.torus = std::move(s);
    } else {
      out.parts.emplace(r, std::move(s));
    }
  }
  return out;
}

SubspaceBasis eigenspace(const WittElement& x, gf::Elem mu) {
  auto m = witt::ad_matrix(x).matrix;
  const auto& f = *m.field();
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = f.sub(m(i, i), mu);
  return exactla::kernel(m);
}

CheckReport root_check(const WittPtr& alg, const gf::RegularVector& lambda) {
  Stopwatch sw;
  CheckReport rep{.check = "roots", .params = params_of(*alg)};
  const auto dec = root_decomposition(alg, lambda);
  const auto d = witt::d_lambda(alg, lambda.entries(), 1);
  const auto torus = witt::torus_basis(alg);
  if (dec.torus != span_of_elements(alg, torus)) rep.fail({{"reason", "0-part differs from T"}});
  if (dec.total_dim() != alg->dim()) rep.fail({{"reason", "part dimensions do not add to n p^n"}});
  for (const auto& [r, part] : dec.parts) {
    const auto mu = weight(lambda, r);
    for (const auto& v : elements_of(alg, part)) {
      if (witt::bracket(d, v) != v.scaled(mu)) {
        rep.fail({{"root", root_json(r)}, {"element", io::terms_to_json(v)}, {"reason", "not an eigenvector"}});
      }
      for (const auto& t : torus) {
        if (!part.contains(witt::bracket(t, v).to_coords())) {
          rep.fail({{"root", root_json(r)}, {"element", io::terms_to_json(v)}, {"reason", "not T-stable"}});
        }
      }
    }
    if (eigenspace(d, mu) != part) {
      rep.fail({{"root", root_json(r)}, {"reason", "part differs from the eigenspace of ad d_lambda"}});
    }
  }
  if (eigenspace(d, alg->field()->zero()) != dec.torus) rep.fail({{"reason", "kernel of ad d_lambda differs from T"}});
  rep.dims["total"] = dec.total_dim();
  rep.dims["torus"] = dec.torus.dim();
  rep.dims["roots"] = dec.parts.size();
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace jw::structure
