#pragma once

#include "jw/structure/random.hpp"
#include "jw/structure/structure.hpp"

namespace jw::structure {

/// Second element of a determining pair; the first is always d_lambda^{(1)}.
enum class PairKind {
  SumSquares,  // sum x_i^2 D_i, p > 2
  ScriptD,     // script_D_1, any p
};
std::string_view to_string(PairKind k);

struct DeterminingPair {
  WittElement d1;
  WittElement d2;
  PairKind kind;
};

/// SumSquares for p > 2, ScriptD for p = 2.
PairKind default_pair_kind(const witt::WittAlgebra& alg);
DeterminingPair determining_pair(const WittPtr& alg, const gf::RegularVector& lambda, PairKind kind);
DeterminingPair determining_pair(const WittPtr& alg, const gf::RegularVector& lambda);

/// The solver's particular solution a of [a, xs_i] = values_i for all i, or
/// empty when the system is inconsistent.
std::optional<WittElement> solve_inner(const WittPtr& alg, std::span<const WittElement> xs,
                                       std::span<const WittElement> values);

/// The unique a with [a, d_1] = v1 and [a, d_2] = v2, or empty.
std::optional<WittElement> recover_inner(const WittElement& v1, const WittElement& v2,
                                         const gf::RegularVector& lambda);

/// For each lambda: centralizer(d_1) meets centralizer(d_2) in 0 for every
/// applicable pair kind, and `samples` random a are recovered from ([a, d_1], [a, d_2]).
CheckReport determining_pair_check(const WittPtr& alg, std::span<const gf::RegularVector> lambdas,
                                   std::size_t samples, Rng& rng);

}  // namespace jw::structure
