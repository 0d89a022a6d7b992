#include "jw/witt/special.hpp"

namespace jw::witt {
namespace {

void check_index(const WittPtr& alg, std::size_t i, std::size_t lo, const char* what) {
  if (i < lo || i > alg->n()) {
    throw Error(ErrorKind::BadParam, std::string(what) + " index out of range");
  }
}

void require_odd(const WittPtr& alg, const char* what) {
  if (alg->p() == 2) {
    throw Error(ErrorKind::CharTwoUnsupported, std::string(what) + " needs p > 2");
  }
}

Monomial power_of_variable(std::size_t n, std::size_t i, unsigned e) {
  std::vector<std::uint8_t> exps(n, 0);
  exps[i - 1] = static_cast<std::uint8_t>(e);
  return Monomial(std::move(exps));
}

}  // namespace

WittElement d_lambda(const WittPtr& alg, std::span<const Elem> lambda, unsigned k) {
  if (lambda.size() != alg->n()) throw Error(ErrorKind::BadParam, "lambda must have n entries");
  if (k > alg->p() - 1) throw Error(ErrorKind::BadParam, "d_lambda needs 0 <= k <= p-1");
  WittElement x(alg);
  for (std::size_t i = 1; i <= alg->n(); ++i) {
    x.add_term(alg->index(power_of_variable(alg->n(), i, k), i), lambda[i - 1]);
  }
  return x;
}

WittElement script_d(const WittPtr& alg, std::size_t i) {
  check_index(alg, i, 1, "script_D");
  const auto n = alg->n();
  const Elem one = alg->field()->one();
  WittElement x = WittElement::term(alg, Monomial::one(n), i, one);
  std::vector<std::uint8_t> exps(n, 0);
  for (std::size_t j = i; j <= n - 1; ++j) {
    exps[j - 1] = static_cast<std::uint8_t>(alg->p() - 1);
    x.add_term(alg->index(Monomial(exps), j + 1), one);
  }
  return x;
}

std::vector<WittElement> torus_basis(const WittPtr& alg) {
  std::vector<WittElement> out;
  const Elem one = alg->field()->one();
  for (std::size_t i = 1; i <= alg->n(); ++i) {
    out.push_back(WittElement::term(alg, Monomial::unit(alg->n(), i), i, one));
  }
  return out;
}

WittElement i_k(const WittPtr& alg, std::size_t k) {
  check_index(alg, k, 1, "I_k");
  WittElement x(alg);
  for (const auto& t : torus_basis(alg)) x = x + t;
  if (k >= 2) {
    x.add_term(alg->index(Monomial::unit(alg->n(), k), k), alg->field()->one());
  }
  return x;
}

WittElement h_j(const WittPtr& alg, std::size_t j) {
  check_index(alg, j, 2, "h_j");
  const Elem one = alg->field()->one();
  const auto n = alg->n();
  return WittElement::term(alg, Monomial::unit(n, j), j, one) +
         WittElement::term(alg, Monomial::unit(n, 1), j, one);
}

WittElement hh_k(const WittPtr& alg, std::size_t k) {
  check_index(alg, k, 2, "hh_k");
  require_odd(alg, "hh_k");
  const Elem one = alg->field()->one();
  const auto n = alg->n();
  return WittElement::term(alg, Monomial::unit(n, k), k, one) +
         WittElement::term(alg, power_of_variable(n, 1, 2), k, one);
}

std::vector<WittElement> t_k_basis(const WittPtr& alg, std::size_t k) {
  check_index(alg, k, 1, "T_k");
  if (k >= 2) require_odd(alg, "T_k for k >= 2");
  std::vector<WittElement> out{i_k(alg, k)};
  for (std::size_t j = 2; j <= alg->n(); ++j) {
    if (j != k) out.push_back(h_j(alg, j));
  }
  if (k >= 2) out.push_back(hh_k(alg, k));
  return out;
}

WittElement sum_squares(const WittPtr& alg) {
  require_odd(alg, "sum of x_i^2 D_i");
  WittElement x(alg);
  const Elem one = alg->field()->one();
  for (std::size_t i = 1; i <= alg->n(); ++i) {
    x.add_term(alg->index(power_of_variable(alg->n(), i, 2), i), one);
  }
  return x;
}

WittElement tau_term(const WittPtr& alg, std::size_t j) {
  check_index(alg, j, 1, "tau_term");
  return WittElement::term(alg, alg->truncated()->tau(), j, alg->field()->one());
}

}  // namespace jw::witt
