#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jw/error.hpp"

namespace jw::gf {

/// Raw element of some F_{p^m}: the ascending coefficient list c_0..c_{m-1}
/// packed as the base-p integer sum c_i p^i. Only meaningful together with
/// the Field that produced it; FieldElement pairs the two.
struct Elem {
  std::uint32_t code = 0;

  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in F_p[t]/(modulus). Immutable once built.
class Field {
 public:
  /// Largest supported field order (exclusive).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static FieldPtr prime(std::uint32_t p) { return make(p, 1); }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// m+1 ascending coefficients, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Descriptors are compatible for arithmetic iff p, m and modulus agree.
  bool same_as(const Field& other) const noexcept;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// The class of t. For m = 1 this is -c_0, so the placeholder modulus t gives 0.
  Elem generator() const;
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_code(std::uint64_t code) const;
  /// Accepts 1..m coefficients (missing high coefficients are zero), each in 0..p-1.
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  bool is_zero(Elem a) const noexcept { return a.code == 0; }
  bool in_prime_field(Elem a) const noexcept { return a.code < p_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (m_ == 1) {
      std::uint32_t s = a.code + b.code;
      return Elem{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return Elem{a.code ^ b.code};
    if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.code} * q_ + b.code]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (m_ == 1) return Elem{a.code == 0 ? 0 : p_ - a.code};
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return Elem{neg_table_[a.code]};
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.code == 0 || b.code == 0) return zero();
    if (m_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    if (!log_.empty()) {
      return Elem{exp_[std::size_t{log_[a.code]} + log_[b.code]]};
    }
    return mul_poly(a, b);
  }
  /// Throws DivisionByZero on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Human form in the generator t, e.g. "2+t^2".
  std::string to_string(Elem a) const;
  /// "F_9 = F_3[t]/(t^2+1)"
  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem neg_digits(Elem a) const noexcept;
  Elem mul_poly(Elem a, Elem b) const noexcept;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> inv_table_;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t p) noexcept;

/// Irreducibility over F_p of a monic polynomial (ascending coefficients),
/// by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree m, scanning
/// (c_0, ..., c_{m-1}) in ascending order with c_0 most significant.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

/// An element together with its descriptor; arithmetic checks compatibility.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_.code == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->to_string(value_); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// lambda = (lambda_1..lambda_n) whose entries are linearly independent over F_p.
class RegularVector {
 public:
  /// Throws NotRegular when the entries are F_p-dependent.
  RegularVector(FieldPtr field, std::vector<Elem> entries);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }

 private:
  FieldPtr field_;
  std::vector<Elem> entries_;
};

/// True iff the m x n matrix over F_p of coefficient columns has rank n.
bool is_regular(const Field& field, std::span<const Elem> lambda);
/// Throws DescriptorMismatch when entries live in different fields.
bool is_regular(std::span<const FieldElement> lambda);

/// (1, t, ..., t^{n-1}); throws FieldTooSmall when m < n.
RegularVector default_regular(const FieldPtr& field, std::size_t n);

}  // namespace jw::gf
