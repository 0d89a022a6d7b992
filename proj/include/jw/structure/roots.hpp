#pragma once

#include <map>
#include <vector>

#include "jw/structure/structure.hpp"

namespace jw::structure {

/// A root in (F_p)^n, entries in 0..p-1.
using Root = std::vector<std::uint8_t>;

struct RootDecomposition {
  SubspaceBasis torus;
  /// Nonzero roots only. The part of a root r is spanned by every x^beta D_j
  /// with beta - eps_j = r mod p.
  std::map<Root, SubspaceBasis> parts;

  std::size_t total_dim() const;
};

/// (beta - eps_j) mod p for the basis element x^beta D_j.
Root root_of(const witt::WittAlgebra& alg, std::uint32_t index);
/// sum_i lambda_i r_i
gf::Elem weight(const gf::RegularVector& lambda, const Root& r);

RootDecomposition root_decomposition(const WittPtr& alg, const gf::RegularVector& lambda);

/// {y : [x, y] = mu y}
SubspaceBasis eigenspace(const WittElement& x, gf::Elem mu);

/// Dimensions add to n p^n; the 0-part is T; each part equals the mu-eigenspace
/// of ad d_lambda with mu = (lambda, r); each part is stable under ad T.
CheckReport root_check(const WittPtr& alg, const gf::RegularVector& lambda);

}  // namespace jw::structure
