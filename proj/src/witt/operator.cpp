#include "jw/witt/operator.hpp"

namespace jw::witt {
namespace {

void require_truncated(const LinearOperator& op, const WittPtr& alg) {
  if (op.carrier != Carrier::Truncated || op.matrix.rows() != alg->truncated()->dim() ||
      op.matrix.cols() != alg->truncated()->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "operator does not act on A_n");
  }
}

}  // namespace

LinearOperator ad_matrix(const WittElement& x) {
  const auto& alg = x.algebra();
  alg->require_within_cap("ad_matrix");
  exactla::Matrix m(alg->field(), alg->dim(), alg->dim());
  for (std::uint32_t j = 0; j < alg->dim(); ++j) {
    const auto col = bracket(x, WittElement::basis(alg, j));
    for (const auto& [idx, c] : col.terms()) m(idx, j) = c;
  }
  return {Carrier::Witt, std::move(m)};
}

LinearOperator as_operator(const WittElement& x) {
  const auto& alg = x.algebra();
  alg->require_within_cap("as_operator");
  const auto& trunc = alg->truncated();
  const auto p = alg->p();
  exactla::Matrix m(alg->field(), trunc->dim(), trunc->dim());
  for (std::size_t key = 0; key < trunc->dim(); ++key) {
    const auto image = apply(x, TruncPoly::term(trunc, trunc->monomial(key), alg->field()->one()));
    for (const auto& [mono, c] : image.terms()) m(mono.key(p), key) = c;
  }
  return {Carrier::Truncated, std::move(m)};
}

LinearOperator operator_compose(const LinearOperator& a, const LinearOperator& b) {
  if (a.carrier != b.carrier) throw Error(ErrorKind::DimensionMismatch, "operators on different spaces");
  return {a.carrier, a.matrix * b.matrix};
}

LinearOperator operator_pow(const LinearOperator& a, std::uint64_t k) {
  if (a.matrix.rows() != a.matrix.cols()) throw Error(ErrorKind::DimensionMismatch, "non-square operator");
  LinearOperator result{a.carrier, exactla::Matrix::identity(a.matrix.field(), a.matrix.rows())};
  LinearOperator base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = operator_compose(result, base);
    if (k > 1) base = operator_compose(base, base);
  }
  return result;
}

bool is_derivation_operator(const LinearOperator& op, const WittPtr& alg) {
  require_truncated(op, alg);
  const auto& trunc = alg->truncated();
  const auto& f = *alg->field();
  const auto dim = trunc->dim();
  std::vector<TruncPoly> images;
  std::vector<TruncPoly> monos;
  images.reserve(dim);
  monos.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    images.push_back(TruncPoly::from_coords(trunc, op.matrix.column(k)));
    monos.push_back(TruncPoly::term(trunc, trunc->monomial(k), f.one()));
  }
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      const auto prod = monos[a] * monos[b];
      TruncPoly lhs(trunc);
      for (const auto& [m, c] : prod.terms()) lhs = lhs + images[m.key(alg->p())].scaled(c);
      if (lhs != images[a] * monos[b] + monos[a] * images[b]) return false;
    }
  }
  return true;
}

WittElement recover_element(const LinearOperator& op, const WittPtr& alg) {
  require_truncated(op, alg);
  if (!is_derivation_operator(op, alg)) {
    throw Error(ErrorKind::NotADerivation, "operator violates the Leibniz law on A_n");
  }
  const auto& trunc = alg->truncated();
  WittElement x(alg);
  for (std::size_t j = 1; j <= alg->n(); ++j) {
    const auto key = trunc::Monomial::unit(alg->n(), j).key(alg->p());
    x = x + WittElement::from_poly(alg, TruncPoly::from_coords(trunc, op.matrix.column(key)), j);
  }
  if (as_operator(x) != op) {
    throw Error(ErrorKind::NotADerivation, "operator is not determined by its generator images");
  }
  return x;
}

}  // namespace jw::witt
