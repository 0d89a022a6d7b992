#pragma once

#include "jw/exactla/matrix.hpp"
#include "jw/witt/witt.hpp"

namespace jw::witt {

/// Which coordinate space a LinearOperator acts on.
enum class Carrier {
  Truncated,  // A_n, p^n coordinates indexed by Monomial::key
  Witt,       // W_n, n p^n coordinates in the global basis order
};

struct LinearOperator {
  Carrier carrier;
  exactla::Matrix matrix;

  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

/// ad X; column j holds the coordinates of [X, e_j].
LinearOperator ad_matrix(const WittElement& x);

/// X acting on A_n.
LinearOperator as_operator(const WittElement& x);

/// a o b (apply b first).
LinearOperator operator_compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator_pow(const LinearOperator& a, std::uint64_t k);

/// Leibniz law on every pair of basis monomials of A_n.
bool is_derivation_operator(const LinearOperator& op, const WittPtr& alg);

/// Reads the images of x_1..x_n back into sum_j op(x_j) D_j. Throws
/// NotADerivation unless the operator is a derivation of A_n.
WittElement recover_element(const LinearOperator& op, const WittPtr& alg);

}  // namespace jw::witt
