#include "jw/trunc/trunc.hpp"

#include <sstream>

namespace jw::trunc {

Monomial Monomial::unit(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "variable index out of 1..n");
  std::vector<std::uint8_t> e(n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_key(std::uint64_t key, std::size_t n, std::uint32_t p) {
  std::vector<std::uint8_t> e(n);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = static_cast<std::uint8_t>(key % p);
    key /= p;
  }
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::uint64_t Monomial::key(std::uint32_t p) const noexcept {
  std::uint64_t k = 0;
  for (std::size_t i = exps_.size(); i-- > 0;) k = k * p + exps_[i];
  return k;
}

std::string Monomial::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (exps_[i] > 1) os << '^' << unsigned{exps_[i]};
  }
  if (first) os << '1';
  return os.str();
}

std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b, std::uint32_t p) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "monomials of different arity");
  std::vector<std::uint8_t> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const unsigned s = a[i] + b[i];
    if (s >= p) return std::nullopt;
    e[i] = static_cast<std::uint8_t>(s);
  }
  return Monomial(std::move(e));
}

TruncAlgebra::TruncAlgebra(std::size_t n, FieldPtr field, char var)
    : n_(n), field_(std::move(field)), var_(var), dim_(1) {
  for (std::size_t i = 0; i < n_; ++i) dim_ *= field_->characteristic();
}

TruncPtr TruncAlgebra::make(std::size_t n, FieldPtr field, char var) {
  if (n < 1) throw Error(ErrorKind::BadParam, "need at least one variable");
  if (field->characteristic() > 255) throw Error(ErrorKind::BadParam, "p must be < 256");
  return TruncPtr(new TruncAlgebra(n, std::move(field), var));
}

Monomial TruncAlgebra::tau() const {
  return Monomial(std::vector<std::uint8_t>(n_, static_cast<std::uint8_t>(p() - 1)));
}

bool TruncAlgebra::compatible(const TruncAlgebra& other) const noexcept {
  return this == &other ||
         (n_ == other.n_ && var_ == other.var_ && field_->same_as(*other.field_));
}

TruncPoly TruncPoly::constant(TruncPtr alg, Elem c) {
  const auto n = alg->n();
  return term(std::move(alg), Monomial::one(n), c);
}

TruncPoly TruncPoly::term(TruncPtr alg, Monomial m, Elem c) {
  if (m.arity() != alg->n()) throw Error(ErrorKind::ArityMismatch, "monomial arity");
  for (auto e : m.exps()) {
    if (e >= alg->p()) throw Error(ErrorKind::BadParam, "exponent must be < p");
  }
  TruncPoly f(std::move(alg));
  f.add_term(m, c);
  return f;
}

TruncPoly TruncPoly::variable(TruncPtr alg, std::size_t i) {
  const auto n = alg->n();
  const auto one = alg->field()->one();
  return term(std::move(alg), Monomial::unit(n, i), one);
}

TruncPoly TruncPoly::from_coords(TruncPtr alg, std::span<const Elem> coords) {
  if (coords.size() != alg->dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate length");
  TruncPoly f(alg);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].code != 0) f.terms_.emplace(alg->monomial(k), coords[k]);
  }
  return f;
}

Elem TruncPoly::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Elem{} : it->second;
}

void TruncPoly::add_term(const Monomial& m, Elem c) {
  if (c.code == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = alg_->field()->add(it->second, c);
  if (it->second.code == 0) terms_.erase(it);
}

void TruncPoly::check_same(const TruncPoly& o) const {
  if (!alg_->compatible(*o.alg_)) {
    throw Error(ErrorKind::DescriptorMismatch, "polynomials from different truncated algebras");
  }
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  check_same(o);
  TruncPoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const { return *this + (-o); }

TruncPoly TruncPoly::operator-() const {
  TruncPoly r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, alg_->field()->neg(c));
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const { return poly_mul(*this, o); }

TruncPoly TruncPoly::scaled(Elem c) const {
  TruncPoly r(alg_);
  if (c.code == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, alg_->field()->mul(v, c));
  return r;
}

std::set<unsigned> TruncPoly::degrees() const {
  std::set<unsigned> out;
  for (const auto& [m, c] : terms_) out.insert(m.degree());
  return out;
}

exactla::Vec TruncPoly::to_coords() const {
  exactla::Vec v(alg_->dim());
  for (const auto& [m, c] : terms_) v[m.key(alg_->p())] = c;
  return v;
}

std::string TruncPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = *alg_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool is_one = m.degree() == 0;
    if (c != f.one() || is_one) {
      const auto s = f.to_string(c);
      if (f.degree() > 1 && s.find('+') != std::string::npos) {
        os << '(' << s << ')';
      } else {
        os << s;
      }
      if (!is_one) os << '*';
    }
    if (!is_one) os << m.to_string(alg_->var());
  }
  return os.str();
}

TruncPoly poly_mul(const TruncPoly& f, const TruncPoly& g) {
  if (!f.algebra()->compatible(*g.algebra())) {
    throw Error(ErrorKind::DescriptorMismatch, "polynomials from different truncated algebras");
  }
  const auto& field = *f.algebra()->field();
  const auto p = f.algebra()->p();
  TruncPoly r(f.algebra());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      if (auto m = mono_mul(a, b, p)) r.add_term(*m, field.mul(ca, cb));
    }
  }
  return r;
}

TruncPoly pow(const TruncPoly& f, unsigned e) {
  TruncPoly r = TruncPoly::constant(f.algebra(), f.algebra()->field()->one());
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

TruncPoly d_i(std::size_t i, const TruncPoly& f) {
  const auto& alg = f.algebra();
  if (i < 1 || i > alg->n()) throw Error(ErrorKind::IndexOutOfRange, "D_i needs 1 <= i <= n");
  const auto& field = *alg->field();
  TruncPoly r(alg);
  for (const auto& [m, c] : f.terms()) {
    const unsigned a = m[i - 1];
    if (a == 0) continue;
    auto e = m.exps();
    --e[i - 1];
    r.add_term(Monomial(std::move(e)), field.mul(c, field.from_int(a)));
  }
  return r;
}

}  // namespace jw::trunc
