#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jw/structure/report.hpp"
#include "jw/witt/witt.hpp"

namespace jw::twolocal {

using structure::CheckReport;
using witt::WittElement;
using witt::WittPtr;

/// A finite table x -> Delta(x). Domain entries are distinct.
class PointwiseMap {
 public:
  PointwiseMap(WittPtr alg, std::vector<WittElement> domain, std::vector<WittElement> images,
               std::optional<std::string> rule = std::nullopt);

  const WittPtr& algebra() const noexcept { return alg_; }
  const std::vector<WittElement>& domain() const noexcept { return domain_; }
  const std::vector<WittElement>& images() const noexcept { return images_; }
  const std::optional<std::string>& rule() const noexcept { return rule_; }
  std::size_t size() const noexcept { return domain_.size(); }

  /// Position of x in the domain, if present.
  std::optional<std::size_t> find(const WittElement& x) const;
  /// Delta(x); throws OutOfDomain.
  const WittElement& operator()(const WittElement& x) const;
  /// The domain is every element of the algebra.
  bool is_full() const;

 private:
  WittPtr alg_;
  std::vector<WittElement> domain_;
  std::vector<WittElement> images_;
  std::optional<std::string> rule_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

/// q^dim, or empty when it exceeds 2^20.
std::optional<std::uint64_t> algebra_size(const witt::WittAlgebra& alg);
/// Every element, the first basis coordinate varying fastest. Throws
/// DomainNotFull when the algebra has more than 2^20 elements.
std::vector<WittElement> all_elements(const WittPtr& alg);

/// The restriction of ad b to `domain`.
PointwiseMap restriction_of_ad(const WittElement& b, std::vector<WittElement> domain);

/// The particular solution a of [a, x] = Delta(x), [a, y] = Delta(y), or empty.
std::optional<WittElement> witness_for_pair(const PointwiseMap& delta, const WittElement& x,
                                            const WittElement& y);

/// W_1 over F_2 with e_{-1} = D_1, e_0 = x_1 D_1:
///   k_{-1} e_{-1} + k_0 e_0 -> k_0 e_{-1} if k_{-1} != 0, else 0.
PointwiseMap counterexample_map();

/// witness_for_pair on every ordered pair of the domain, (x, x) included.
CheckReport is_two_local(const PointwiseMap& delta);

/// Full domain: additivity, homogeneity and Leibniz on all pairs. Otherwise
/// the domain must span W_n; Delta is then extended linearly from a basis
/// chosen inside the domain, checked for agreement on the whole domain, and
/// the extension checked for Leibniz on all basis pairs. Throws DomainNotFull
/// when neither applies.
CheckReport is_derivation_map(const PointwiseMap& delta);

/// All 4^4 self-maps of W_1(F_2): counts 2-local maps and derivations, asserts
/// strict inclusion with counterexample_map in the difference, and that every
/// 2-local map fixes 0 and is homogeneous.
CheckReport exhaustive_scan_w1_p2();

}  // namespace jw::twolocal
