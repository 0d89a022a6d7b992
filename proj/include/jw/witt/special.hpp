#pragma once

#include <span>
#include <vector>

#include "jw/witt/witt.hpp"

// Distinguished elements of W_n. Indices i, j, k are 1-based.
namespace jw::witt {

/// sum_i lambda_i x_i^k D_i, 0 <= k <= p-1.
WittElement d_lambda(const WittPtr& alg, std::span<const Elem> lambda, unsigned k);

/// D_i + sum_{j=i}^{n-1} (prod_{l=i}^{j} x_l^{p-1}) D_{j+1}
WittElement script_d(const WittPtr& alg, std::size_t i);

/// x_1 D_1, ..., x_n D_n
std::vector<WittElement> torus_basis(const WittPtr& alg);

/// I_1 = sum_i x_i D_i; I_k = x_k D_k + I_1 for k >= 2.
WittElement i_k(const WittPtr& alg, std::size_t k);
/// h_j = x_j D_j + x_1 D_j, 2 <= j <= n.
WittElement h_j(const WittPtr& alg, std::size_t j);
/// x_k D_k + x_1^2 D_k, 2 <= k <= n; needs p > 2.
WittElement hh_k(const WittPtr& alg, std::size_t k);

/// Spanning set of the Cartan subalgebra T_k:
///   k = 1:  I_1, h_2, ..., h_n
///   k >= 2 (p > 2):  I_k, h_j (j != k), hh_k
std::vector<WittElement> t_k_basis(const WittPtr& alg, std::size_t k);

/// sum_i x_i^2 D_i; needs p > 2.
WittElement sum_squares(const WittPtr& alg);

/// x^tau D_j with tau = (p-1, ..., p-1).
WittElement tau_term(const WittPtr& alg, std::size_t j);

}  // namespace jw::witt
