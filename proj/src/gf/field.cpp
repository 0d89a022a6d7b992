#include "jw/gf/field.hpp"

#include <algorithm>
#include <sstream>

namespace jw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::CharTwoUnsupported: return "CharTwoUnsupported";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DomainNotFull: return "DomainNotFull";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace jw

namespace jw::gf {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^{p-2}
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo the nonzero polynomial b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d: (c_0..c_{d-1}, 1)
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  Poly f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return f;
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of the scan
    std::uint64_t rest = idx;
    for (std::size_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::BadModulus, "no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorKind::BadModulus, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q >= kMaxOrder) {
      throw Error(ErrorKind::Infeasible, "field order p^m exceeds 2^31");
    }
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1) {
      throw Error(ErrorKind::BadModulus, "modulus must have m+1 = " + std::to_string(m + 1) +
                                             " coefficients");
    }
    if (std::any_of(mod.begin(), mod.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw Error(ErrorKind::BadModulus, "modulus coefficients must lie in 0..p-1");
    }
    if (mod.back() != 1) throw Error(ErrorKind::BadModulus, "modulus must be monic");
    if (!is_irreducible(mod, p)) throw Error(ErrorKind::BadModulus, "modulus is reducible");
  } else {
    mod = default_modulus(p, m);
  }
  return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
  build_tables();
}

void Field::build_tables() {
  if (q_ > (1u << 16)) return;
  inv_table_.assign(q_, 0);
  if (m_ == 1) {
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = inv_mod_prime(a, p_);
    return;
  }
  if (p_ != 2) {
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = neg_digits(Elem{a}).code;
    if (q_ <= 256) {
      add_table_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_table_[std::size_t{a} * q_ + b] = add_digits(Elem{a}, Elem{b}).code;
        }
      }
    }
  }
  // Find a primitive element by walking powers of each candidate.
  std::vector<std::uint32_t> powers;
  powers.reserve(q_ - 1);
  for (std::uint32_t g = 2; g < q_; ++g) {
    powers.clear();
    Elem x = one();
    do {
      powers.push_back(x.code);
      x = mul_poly(x, Elem{g});
    } while (x.code != 1 && powers.size() < q_);
    if (powers.size() == q_ - 1) break;
  }
  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{q_}, 0);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = powers[i];
    exp_[i + q_ - 1] = powers[i];
    log_[powers[i]] = i;
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    inv_table_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

Elem Field::generator() const {
  if (m_ == 1) return neg(Elem{modulus_[0]});
  return Elem{p_};
}

Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_code(std::uint64_t code) const {
  if (code >= q_) throw Error(ErrorKind::BadParam, "element code out of range");
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.empty() || coeffs.size() > m_) {
    throw Error(ErrorKind::BadParam,
                "coefficient list must have 1.." + std::to_string(m_) + " entries");
  }
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorKind::BadParam, "coefficient out of range 0..p-1");
    code = code * p_ + coeffs[i];
  }
  return Elem{code};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  std::uint32_t rest = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::neg_digits(Elem a) const noexcept {
  std::uint32_t x = a.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return Elem{out};
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
  }
  // reduce using t^m = -(c_0 + ... + c_{m-1} t^{m-1})
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t f = prod[k];
    if (f == 0) continue;
    prod[k] = 0;
    const std::size_t shift = k - m_;
    for (std::uint32_t i = 0; i < m_; ++i) {
      prod[shift + i] = (prod[shift + i] + (p_ - modulus_[i]) % p_ * f) % p_;
    }
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = m_; i-- > 0;) code = code * p_ + static_cast<std::uint32_t>(prod[i]);
  return Elem{code};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!inv_table_.empty()) return Elem{inv_table_[a.code]};
  if (m_ == 1) return Elem{inv_mod_prime(a.code, p_)};
  return pow(a, std::uint64_t{q_} - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string Field::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a.code);
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (m_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i > 0 && modulus_[i] != 1) os << '*';
      if (i > 0) os << 't';
      if (i > 1) os << '^' << i;
    }
    os << ')';
  }
  return os.str();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) {
    throw Error(ErrorKind::DescriptorMismatch,
                "operands live in " + field_->describe() + " and " + o.field_->describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_as(*o.field_) && value_ == o.value_;
}

bool is_regular(const Field& field, std::span<const Elem> lambda) {
  const std::uint32_t p = field.characteristic();
  const std::size_t rows = field.degree();
  const std::size_t cols = lambda.size();
  if (cols == 0) throw Error(ErrorKind::BadParam, "regular vector needs n >= 1 entries");
  if (cols > rows) return false;
  // m x n coefficient matrix over F_p; columns are the lambda_i
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    const auto c = field.coeffs(lambda[j]);
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = c[i];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = inv_mod_prime(a[rank][col], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col] * inv % p;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = static_cast<std::uint32_t>((a[r][c] + p - f * a[rank][c] % p) % p);
      }
    }
    ++rank;
  }
  return rank == cols;
}

bool is_regular(std::span<const FieldElement> lambda) {
  if (lambda.empty()) throw Error(ErrorKind::BadParam, "regular vector needs n >= 1 entries");
  std::vector<Elem> raw;
  raw.reserve(lambda.size());
  for (const auto& x : lambda) {
    if (!x.field()->same_as(*lambda.front().field())) {
      throw Error(ErrorKind::DescriptorMismatch, "entries of lambda live in different fields");
    }
    raw.push_back(x.value());
  }
  return is_regular(*lambda.front().field(), raw);
}

RegularVector::RegularVector(FieldPtr field, std::vector<Elem> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  if (!is_regular(*field_, entries_)) {
    throw Error(ErrorKind::NotRegular, "entries are linearly dependent over F_p");
  }
}

RegularVector default_regular(const FieldPtr& field, std::size_t n) {
  if (field->degree() < n) {
    throw Error(ErrorKind::FieldTooSmall, "regular vectors in F^" + std::to_string(n) +
                                              " need extension degree >= " + std::to_string(n));
  }
  std::vector<Elem> entries;
  entries.reserve(n);
  // t^i has code p^i for i < m
  std::uint32_t code = 1;
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back(Elem{code});
    code *= field->characteristic();
  }
  return RegularVector(field, std::move(entries));
}

}  // namespace jw::gf
