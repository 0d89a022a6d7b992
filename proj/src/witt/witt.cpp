#include "jw/witt/witt.hpp"

#include <sstream>

namespace jw::witt {
namespace {

/// lexrank of alpha + beta - eps_{minus} (minus 0-based), or -1 when it leaves A_n.
long long shifted_lexrank(const Monomial& a, const Monomial& b, std::size_t minus, std::uint32_t p) {
  long long rank = 0;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    long long e = static_cast<long long>(a[k]) + b[k] - (k == minus ? 1 : 0);
    if (e < 0 || e >= p) return -1;
    rank = rank * p + e;
  }
  return rank;
}

}  // namespace

WittAlgebra::WittAlgebra(TruncPtr trunc, std::size_t dim_cap)
    : trunc_(std::move(trunc)), dim_(trunc_->n() * trunc_->dim()), dim_cap_(dim_cap) {
  const auto n = trunc_->n();
  const auto p = trunc_->p();
  monos_.reserve(trunc_->dim());
  for (std::size_t r = 0; r < trunc_->dim(); ++r) {
    std::vector<std::uint8_t> e(n);
    std::size_t rest = r;
    for (std::size_t k = n; k-- > 0;) {
      e[k] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    monos_.emplace_back(std::move(e));
  }
}

WittPtr WittAlgebra::make(std::size_t n, FieldPtr field, char var, std::size_t dim_cap) {
  auto trunc = trunc::TruncAlgebra::make(n, std::move(field), var);
  if (trunc->dim() > (std::size_t{1} << 24) / n) {
    throw Error(ErrorKind::Infeasible, "W_n basis too large to index");
  }
  return WittPtr(new WittAlgebra(std::move(trunc), dim_cap));
}

std::uint32_t WittAlgebra::index(const Monomial& alpha, std::size_t dir) const {
  if (alpha.arity() != n()) throw Error(ErrorKind::ArityMismatch, "monomial arity differs from n");
  if (dir < 1 || dir > n()) throw Error(ErrorKind::IndexOutOfRange, "direction must lie in 1..n");
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n(); ++k) {
    if (alpha[k] >= p()) throw Error(ErrorKind::BadParam, "exponent must be < p");
    rank = rank * p() + alpha[k];
  }
  return static_cast<std::uint32_t>(rank * n() + dir - 1);
}

bool WittAlgebra::compatible(const WittAlgebra& other) const noexcept {
  return this == &other || trunc_->compatible(*other.trunc_);
}

void WittAlgebra::require_within_cap(const char* what) const {
  if (dim_ > dim_cap_) {
    throw Error(ErrorKind::Infeasible, std::string(what) + ": dim W_n = " + std::to_string(dim_) +
                                           " exceeds the cap " + std::to_string(dim_cap_));
  }
}

WittElement WittElement::basis(WittPtr alg, std::uint32_t index) {
  if (index >= alg->dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  const Elem one = alg->field()->one();
  WittElement x(std::move(alg));
  x.terms_.emplace(index, one);
  return x;
}

WittElement WittElement::term(WittPtr alg, const Monomial& alpha, std::size_t dir, Elem c) {
  const auto idx = alg->index(alpha, dir);
  WittElement x(std::move(alg));
  x.add_term(idx, c);
  return x;
}

WittElement WittElement::from_poly(WittPtr alg, const TruncPoly& f, std::size_t dir) {
  if (!f.algebra()->compatible(*alg->truncated())) {
    throw Error(ErrorKind::ContextMismatch, "coefficient polynomial from another algebra");
  }
  WittElement x(alg);
  for (const auto& [m, c] : f.terms()) x.add_term(alg->index(m, dir), c);
  return x;
}

WittElement WittElement::from_coords(WittPtr alg, std::span<const Elem> coords) {
  if (coords.size() != alg->dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate length");
  WittElement x(std::move(alg));
  for (std::uint32_t k = 0; k < coords.size(); ++k) {
    if (coords[k].code != 0) x.terms_.emplace_hint(x.terms_.end(), k, coords[k]);
  }
  return x;
}

Elem WittElement::coeff(std::uint32_t index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Elem{} : it->second;
}

void WittElement::add_term(std::uint32_t index, Elem c) {
  if (c.code == 0) return;
  if (index >= alg_->dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second = alg_->field()->add(it->second, c);
  if (it->second.code == 0) terms_.erase(it);
}

TruncPoly WittElement::component(std::size_t dir) const {
  if (dir < 1 || dir > alg_->n()) throw Error(ErrorKind::IndexOutOfRange, "direction out of range");
  TruncPoly f(alg_->truncated());
  for (const auto& [idx, c] : terms_) {
    if (alg_->direction_of(idx) == dir) f.add_term(alg_->monomial_of(idx), c);
  }
  return f;
}

void WittElement::check_same(const WittElement& o) const {
  if (!alg_->compatible(*o.alg_)) {
    throw Error(ErrorKind::ContextMismatch, "elements of different Witt algebras");
  }
}

WittElement WittElement::operator+(const WittElement& o) const {
  check_same(o);
  WittElement r(*this);
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
  return r;
}

WittElement WittElement::operator-(const WittElement& o) const { return *this + (-o); }

WittElement WittElement::operator-() const {
  WittElement r(alg_);
  for (const auto& [idx, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), idx, alg_->field()->neg(c));
  return r;
}

WittElement WittElement::scaled(Elem c) const {
  WittElement r(alg_);
  if (c.code == 0) return r;
  for (const auto& [idx, v] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), idx, alg_->field()->mul(v, c));
  }
  return r;
}

exactla::Vec WittElement::to_coords() const {
  exactla::Vec v(alg_->dim());
  for (const auto& [idx, c] : terms_) v[idx] = c;
  return v;
}

std::string WittElement::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = *alg_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != f.one()) {
      const auto s = f.to_string(c);
      if (s.find('+') != std::string::npos) {
        os << '(' << s << ")*";
      } else {
        os << s << '*';
      }
    }
    const auto& m = alg_->monomial_of(idx);
    if (m.degree() > 0) os << m.to_string(alg_->var()) << '*';
    os << 'D' << alg_->direction_of(idx);
  }
  return os.str();
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  const auto& alg = x.algebra();
  if (!alg->compatible(*y.algebra())) {
    throw Error(ErrorKind::ContextMismatch, "bracket of elements of different Witt algebras");
  }
  const auto& f = *alg->field();
  const auto n = alg->n();
  const auto p = alg->p();
  std::map<std::uint32_t, Elem> acc;
  auto accumulate = [&](long long rank, std::size_t dir, Elem c) {
    if (rank < 0 || c.code == 0) return;
    const auto idx = static_cast<std::uint32_t>(rank * n + dir - 1);
    auto [it, inserted] = acc.try_emplace(idx, c);
    if (!inserted) it->second = f.add(it->second, c);
  };
  for (const auto& [ia, ca] : x.terms()) {
    const auto& alpha = alg->monomial_of(ia);
    const auto i = alg->direction_of(ia);
    for (const auto& [ib, cb] : y.terms()) {
      const auto& beta = alg->monomial_of(ib);
      const auto j = alg->direction_of(ib);
      const Elem cc = f.mul(ca, cb);
      // f D_i(g) D_j with f = x^alpha, g = x^beta
      if (beta[i - 1] != 0) {
        accumulate(shifted_lexrank(alpha, beta, i - 1, p), j, f.mul(cc, f.from_int(beta[i - 1])));
      }
      // - g D_j(f) D_i
      if (alpha[j - 1] != 0) {
        accumulate(shifted_lexrank(alpha, beta, j - 1, p), i,
                   f.neg(f.mul(cc, f.from_int(alpha[j - 1]))));
      }
    }
  }
  WittElement r(alg);
  for (const auto& [idx, c] : acc) r.add_term(idx, c);
  return r;
}

GradedDecomposition graded_parts(const WittElement& x) {
  GradedDecomposition parts;
  const auto& alg = x.algebra();
  for (const auto& [idx, c] : x.terms()) {
    auto [it, inserted] = parts.try_emplace(alg->degree_of(idx), alg);
    it->second.add_term(idx, c);
  }
  return parts;
}

std::set<SupportKey> support(const WittElement& x) {
  std::set<SupportKey> out;
  const auto& alg = x.algebra();
  for (const auto& [idx, c] : x.terms()) out.emplace(alg->monomial_of(idx), alg->direction_of(idx));
  return out;
}

TruncPoly apply(const WittElement& x, const TruncPoly& g) {
  const auto& alg = x.algebra();
  if (!g.algebra()->compatible(*alg->truncated())) {
    throw Error(ErrorKind::ContextMismatch, "polynomial from another truncated algebra");
  }
  TruncPoly r(alg->truncated());
  for (std::size_t i = 1; i <= alg->n(); ++i) {
    const auto fi = x.component(i);
    if (fi.is_zero()) continue;
    r = r + fi * trunc::d_i(i, g);
  }
  return r;
}

}  // namespace jw::witt
