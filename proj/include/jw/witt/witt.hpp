#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jw/exactla/matrix.hpp"
#include "jw/trunc/trunc.hpp"

namespace jw::witt {

using gf::Elem;
using gf::FieldPtr;
using trunc::Monomial;
using trunc::TruncPoly;
using trunc::TruncPtr;

inline constexpr std::size_t kDefaultDimCap = 128;

class WittAlgebra;
using WittPtr = std::shared_ptr<const WittAlgebra>;

/// W_n = Der(A_n), a free A_n-module on D_1..D_n of dimension n p^n.
///
/// Basis order is fixed globally: alpha lexicographic ascending (alpha_1 most
/// significant), then direction ascending. Basis index = lexrank(alpha) * n + (i - 1).
class WittAlgebra : public std::enable_shared_from_this<WittAlgebra> {
 public:
  static WittPtr make(std::size_t n, FieldPtr field, char var = 'x',
                      std::size_t dim_cap = kDefaultDimCap);

  std::size_t n() const noexcept { return trunc_->n(); }
  std::uint32_t p() const noexcept { return trunc_->p(); }
  const FieldPtr& field() const noexcept { return trunc_->field(); }
  const TruncPtr& truncated() const noexcept { return trunc_; }
  char var() const noexcept { return trunc_->var(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t dim_cap() const noexcept { return dim_cap_; }

  /// Simple unless n = 1 and p = 2.
  bool is_simple() const noexcept { return !(n() == 1 && p() == 2); }

  std::uint32_t index(const Monomial& alpha, std::size_t dir) const;
  const Monomial& monomial_of(std::uint32_t index) const { return monos_[index / n()]; }
  /// 1-based direction of a basis index.
  std::size_t direction_of(std::uint32_t index) const noexcept { return index % n() + 1; }
  /// Z-degree |alpha| - 1 of a basis index.
  int degree_of(std::uint32_t index) const noexcept {
    return static_cast<int>(monomial_of(index).degree()) - 1;
  }

  bool compatible(const WittAlgebra& other) const noexcept;
  /// Throws Infeasible when n p^n exceeds the dense-matrix cap.
  void require_within_cap(const char* what) const;

 private:
  WittAlgebra(TruncPtr trunc, std::size_t dim_cap);

  TruncPtr trunc_;
  std::size_t dim_;
  std::size_t dim_cap_;
  std::vector<Monomial> monos_;  // by lexrank
};

/// sum a_{alpha,i} x^alpha D_i, stored sparsely by basis index (canonical order).
class WittElement {
 public:
  explicit WittElement(WittPtr alg) : alg_(std::move(alg)) {}

  static WittElement basis(WittPtr alg, std::uint32_t index);
  /// c x^alpha D_dir
  static WittElement term(WittPtr alg, const Monomial& alpha, std::size_t dir, Elem c);
  /// f D_dir
  static WittElement from_poly(WittPtr alg, const TruncPoly& f, std::size_t dir);
  static WittElement from_coords(WittPtr alg, std::span<const Elem> coords);

  const WittPtr& algebra() const noexcept { return alg_; }
  const std::map<std::uint32_t, Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Elem coeff(std::uint32_t index) const;
  Elem coeff(const Monomial& alpha, std::size_t dir) const { return coeff(alg_->index(alpha, dir)); }
  void add_term(std::uint32_t index, Elem c);

  /// The A_n-coefficient f_dir of D_dir.
  TruncPoly component(std::size_t dir) const;

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement operator-() const;
  WittElement scaled(Elem c) const;

  exactla::Vec to_coords() const;
  std::string to_string() const;

  friend bool operator==(const WittElement& a, const WittElement& b) {
    return a.alg_->compatible(*b.alg_) && a.terms_ == b.terms_;
  }

 private:
  void check_same(const WittElement& o) const;

  WittPtr alg_;
  std::map<std::uint32_t, Elem> terms_;
};

/// [f D_i, g D_j] = f D_i(g) D_j - g D_j(f) D_i, extended bilinearly.
WittElement bracket(const WittElement& x, const WittElement& y);

/// Parts keyed by Z-degree |alpha| - 1 in -1..n(p-1)-1; zero parts are omitted.
using GradedDecomposition = std::map<int, WittElement>;
GradedDecomposition graded_parts(const WittElement& x);

/// (alpha, direction) pairs with nonzero coefficient; direction is 1-based.
using SupportKey = std::pair<Monomial, std::size_t>;
std::set<SupportKey> support(const WittElement& x);

/// X acting on A_n as a derivation.
TruncPoly apply(const WittElement& x, const TruncPoly& f);

}  // namespace jw::witt
