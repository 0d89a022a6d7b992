#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jw/exactla/matrix.hpp"
#include "jw/gf/field.hpp"

namespace jw::trunc {

using gf::Elem;
using gf::FieldPtr;

/// Multi-index alpha = (alpha_1, ..., alpha_n); entries are 0-based in storage,
/// so exps()[0] is alpha_1. Ordering is lexicographic.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<std::uint8_t>(n, 0)); }
  /// epsilon_i, with i in 1..n.
  static Monomial unit(std::size_t n, std::size_t i);
  /// Inverse of key(): alpha_1 is the least significant base-p digit.
  static Monomial from_key(std::uint64_t key, std::size_t n, std::uint32_t p);

  std::size_t arity() const noexcept { return exps_.size(); }
  const std::vector<std::uint8_t>& exps() const noexcept { return exps_; }
  unsigned operator[](std::size_t k) const { return exps_[k]; }
  /// |alpha|
  unsigned degree() const noexcept;
  /// alpha_1 + alpha_2 p + ... + alpha_n p^{n-1}
  std::uint64_t key(std::uint32_t p) const noexcept;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint8_t> exps_;
};

/// x^alpha x^beta; empty when some alpha_i + beta_i >= p (the product is zero).
std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b, std::uint32_t p);

class TruncAlgebra;
using TruncPtr = std::shared_ptr<const TruncAlgebra>;

/// F[x_1..x_n]/(x_1^p..x_n^p). A second instance with another variable name
/// (the y-algebra used as a change-of-variables target) is a distinct context.
class TruncAlgebra {
 public:
  static TruncPtr make(std::size_t n, FieldPtr field, char var = 'x');

  std::size_t n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return field_->characteristic(); }
  const FieldPtr& field() const noexcept { return field_; }
  char var() const noexcept { return var_; }
  /// p^n
  std::size_t dim() const noexcept { return dim_; }
  Monomial monomial(std::size_t key) const { return Monomial::from_key(key, n_, p()); }
  /// (p-1, ..., p-1)
  Monomial tau() const;

  bool compatible(const TruncAlgebra& other) const noexcept;

 private:
  TruncAlgebra(std::size_t n, FieldPtr field, char var);
  std::size_t n_;
  FieldPtr field_;
  char var_;
  std::size_t dim_;
};

class TruncPoly {
 public:
  explicit TruncPoly(TruncPtr alg) : alg_(std::move(alg)) {}

  static TruncPoly constant(TruncPtr alg, Elem c);
  static TruncPoly term(TruncPtr alg, Monomial m, Elem c);
  /// x_i, i in 1..n
  static TruncPoly variable(TruncPtr alg, std::size_t i);
  static TruncPoly from_coords(TruncPtr alg, std::span<const Elem> coords);

  const TruncPtr& algebra() const noexcept { return alg_; }
  const std::map<Monomial, Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Elem coeff(const Monomial& m) const;
  /// Adds c x^m into the polynomial, keeping zero coefficients out of the map.
  void add_term(const Monomial& m, Elem c);

  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator-() const;
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly scaled(Elem c) const;

  /// Occupied grading degrees |alpha|.
  std::set<unsigned> degrees() const;
  /// Coordinates indexed by Monomial::key.
  exactla::Vec to_coords() const;

  std::string to_string() const;

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return a.alg_->compatible(*b.alg_) && a.terms_ == b.terms_;
  }

 private:
  void check_same(const TruncPoly& o) const;

  TruncPtr alg_;
  std::map<Monomial, Elem> terms_;
};

TruncPoly poly_mul(const TruncPoly& f, const TruncPoly& g);
TruncPoly pow(const TruncPoly& f, unsigned e);
/// Partial derivative D_i, i in 1..n: D_i(x^alpha) = alpha_i x^{alpha - eps_i}.
TruncPoly d_i(std::size_t i, const TruncPoly& f);

}  // namespace jw::trunc
