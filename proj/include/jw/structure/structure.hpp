#pragma once

#include <vector>

#include "jw/exactla/matrix.hpp"
#include "jw/structure/report.hpp"
#include "jw/witt/operator.hpp"
#include "jw/witt/special.hpp"

namespace jw::structure {

using exactla::SubspaceBasis;
using witt::WittElement;
using witt::WittPtr;

/// Subspace of W_n spanned by elements, in global basis coordinates.
SubspaceBasis span_of_elements(const WittPtr& alg, std::span<const WittElement> xs);
std::vector<WittElement> elements_of(const WittPtr& alg, const SubspaceBasis& s);

/// {y : [x, y] = 0}
SubspaceBasis centralizer(const WittElement& x);
/// Intersection of the centralizers; the whole algebra for an empty set.
SubspaceBasis centralizer_of_set(const WittPtr& alg, std::span<const WittElement> s);

/// Brackets of basis vectors stay inside the subspace.
bool is_subalgebra(const WittPtr& alg, const SubspaceBasis& s);
bool is_abelian(std::span<const WittElement> xs);

/// Structure constants: brackets[a][b] = [e_a, e_b].
std::vector<std::vector<WittElement>> structure_table(const WittPtr& alg);

/// Derivations of W_n as vectors of length dim^2; entry r*dim + s is the
/// coefficient of e_r in D(e_s).
SubspaceBasis derivation_space(const WittPtr& alg);
/// span{ad e_a} in the same flattening.
SubspaceBasis inner_space(const WittPtr& alg);
exactla::Matrix operator_of(const WittPtr& alg, std::span<const gf::Elem> flat);
/// Leibniz law on all basis pairs, evaluated through `bracket`.
bool satisfies_leibniz(const WittPtr& alg, const exactla::Matrix& d);

CheckReport der_equals_inn(const WittPtr& alg);

/// script_D_i == (-1)^{i-1} script_D_1^{p^{i-1}} as operators on A_n, and
/// script_D_n^p == 0.
CheckReport script_d_power_check(const WittPtr& alg);

/// Centralizer of sum x_i^2 D_i has no parts in degrees -1, 0; centralizer of
/// d_nu^{((p+1)/2)}, nu = (1..1), has no parts below (p-1)/2. Needs p > 2.
CheckReport graded_vanishing_check(const WittPtr& alg);

/// For each k: centralizer_of_set(T_k) == span(T_k), T_k abelian of dim n,
/// and span(T_k) == psi_k(T). k ranges over 1..n for p > 2, k = 1 for p = 2.
CheckReport torus_cartan_check(const WittPtr& alg);

/// For each lambda: centralizer(d_lambda) == T, (p > 2) centralizer(sum x_i^2 D_i)
/// meets T in 0, and centralizer(script_D_1) == span{script_D_i}.
CheckReport centralizer_check(const WittPtr& alg, std::span<const gf::RegularVector> lambdas);

}  // namespace jw::structure
