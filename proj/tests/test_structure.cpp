#include <doctest.h>

#include <random>

#include "jw/structure/iso.hpp"
#include "jw/structure/random.hpp"
#include "jw/structure/recover.hpp"
#include "jw/structure/roots.hpp"
#include "jw/structure/structure.hpp"
#include "jw/witt/operator.hpp"
#include "jw/witt/special.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace jw;
using namespace jw::structure;
using jw::witt::bracket;
using testing::expect_error;
using testing::mono;
using testing::term;

namespace {

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

oracle::DenseWitt dense_from_code(int n, int p, std::uint64_t code, std::size_t dim) {
  oracle::DenseWitt x(n, p);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const int c = static_cast<int>(code % p);
    code /= p;
    if (c == 0) continue;
    const auto b = oracle::basis(n, p, idx);
    for (int j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < x.size(); ++k) x.f[j][k] = (x.f[j][k] + c * b.f[j][k]) % p;
    }
  }
  return x;
}

/// Size of the centralizer of x by enumerating every element of W_n(F_p).
std::uint64_t brute_centralizer_size(int n, int p, const oracle::DenseWitt& x) {
  const std::size_t dim = n * x.size();
  const oracle::DenseWitt zero(n, p);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < power(p, dim); ++code) {
    count += oracle::bracket(x, dense_from_code(n, p, code, dim)) == zero;
  }
  return count;
}

oracle::DenseWitt to_dense(const witt::WittElement& x) {
  const auto& w = *x.algebra();
  oracle::DenseWitt d(static_cast<int>(w.n()), static_cast<int>(w.p()));
  for (const auto& [idx, c] : x.terms()) {
    d.f[w.direction_of(idx) - 1][w.monomial_of(idx).key(w.p())] = static_cast<int>(c.code);
  }
  return d;
}

gf::RegularVector regular(const witt::WittPtr& w, std::vector<std::uint32_t> codes) {
  std::vector<gf::Elem> e;
  for (auto c : codes) e.push_back(gf::Elem{c});
  return gf::RegularVector(w->field(), std::move(e));
}

}  // namespace

TEST_CASE("derivation counts match exhaustive enumeration") {
  for (auto [n, p] : {std::pair{1, 2}, {1, 3}}) {
    const auto w = testing::witt(n, static_cast<std::uint32_t>(p));
    const auto der = derivation_space(w);
    CHECK(power(p, der.dim()) == oracle::count_derivations(n, p));
  }
}

TEST_CASE("every derivation is inner on small algebras") {
  for (auto [n, p, m] : {std::tuple{1u, 2u, 1u}, {1u, 2u, 2u}, {1u, 3u, 1u}, {2u, 2u, 1u}, {2u, 3u, 1u}, {1u, 5u, 1u}, {3u, 2u, 1u}}) {
    const auto w = testing::witt(n, p, m);
    const auto rep = der_equals_inn(w);
    CHECK(rep.passed());
    CHECK(rep.dims["der"] == w->dim());
    CHECK(rep.result["leibniz_recheck"] == true);
  }
}

TEST_CASE("the dense cap is enforced") {
  const auto w = witt::WittAlgebra::make(2, testing::field(5), 'x', 40);
  expect_error(ErrorKind::Infeasible, [&] { derivation_space(w); });
}

TEST_CASE("centralizer sizes match brute force") {
  std::mt19937_64 rng(41);
  for (auto [n, p] : {std::pair{1, 3}, {2, 2}, {1, 5}}) {
    const auto w = testing::witt(n, static_cast<std::uint32_t>(p));
    for (int it = 0; it < 6; ++it) {
      const auto x = random_element(w, rng);
      const auto z = centralizer(x);
      CHECK(power(p, z.dim()) == brute_centralizer_size(n, p, to_dense(x)));
      CHECK(z.contains(x.to_coords()));
      CHECK(is_subalgebra(w, z));
    }
  }
}

TEST_CASE("root weights") {
  const auto w = testing::witt(2, 3, 2);
  const auto lambda = regular(w, {1, 3});
  const auto idx = w->index(mono({1, 1}), 2);
  CHECK(root_of(*w, idx) == Root{1, 0});
  CHECK(weight(lambda, root_of(*w, idx)) == lambda[0]);
  // D_1 has root -epsilon_1
  CHECK(root_of(*w, w->index(mono({0, 0}), 1)) == Root{2, 0});
  const auto dec = root_decomposition(w, lambda);
  CHECK(dec.total_dim() == w->dim());
  CHECK(dec.torus == span_of_elements(w, witt::torus_basis(w)));
  const auto d = witt::d_lambda(w, lambda.entries(), 1);
  for (const auto& [r, part] : dec.parts) {
    CHECK(part == eigenspace(d, weight(lambda, r)));
  }
}

TEST_CASE("root check passes") {
  for (auto [n, p, m] : {std::tuple{1u, 3u, 1u}, {2u, 3u, 2u}, {2u, 2u, 2u}, {1u, 5u, 1u}}) {
    const auto w = testing::witt(n, p, m);
    CHECK(root_check(w, gf::default_regular(w->field(), n)).passed());
  }
}

TEST_CASE("psi isomorphisms") {
  const auto w = testing::witt(2, 3);
  const auto psi = psi_iso(w, 1);
  const auto x1 = trunc::TruncPoly::variable(w->truncated(), 1);
  const auto x2 = trunc::TruncPoly::variable(w->truncated(), 2);
  CHECK(psi(x2) == x2 + x1);
  CHECK(psi.inverse(x2) == x2 - x1);
  CHECK(psi.induced(term(w, {0, 1}, 2)) == witt::h_j(w, 2));
  CHECK(preserves_brackets(psi));

  const auto w3 = testing::witt(3, 3);
  const auto x1d1 = term(w3, {1, 0, 0}, 1);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto pk = psi_iso(w3, k);
    auto expect = x1d1;
    for (std::size_t j = 2; j <= 3; ++j) {
      expect = expect - (j == k ? term(w3, {2, 0, 0}, j, 2) : term(w3, {1, 0, 0}, j));
    }
    CHECK(pk.induced(x1d1) == expect);
    CHECK(pk.invertible());
  }
  CHECK(preserves_brackets(psi_iso(w3, 2)));
  expect_error(ErrorKind::BadParam, [] { psi_iso(testing::witt(2, 2), 2); });
}

TEST_CASE("algebra maps reject generator images with constant terms") {
  const auto w = testing::witt(1, 3);
  const auto t = w->truncated();
  expect_error(ErrorKind::BadParam, [&] {
    AlgebraHom(w, w, {trunc::TruncPoly::variable(t, 1) + trunc::TruncPoly::constant(t, t->field()->one())});
  });
  const AlgebraHom zero(w, w, {trunc::TruncPoly(t)});
  CHECK_FALSE(zero.invertible());
  expect_error(ErrorKind::NotRegular, [&] { zero.inverse(trunc::TruncPoly::variable(t, 1)); });
}

TEST_CASE("phi relabelling and closed form") {
  const auto w = testing::witt(2, 3);
  const auto y = witt::WittAlgebra::make(2, w->field(), 'y');
  const std::vector<gf::Elem> id{gf::Elem{1}, gf::Elem{0}};
  const auto relabel = phi_iso(w, y, id);
  CHECK(relabel.matrix() == exactla::Matrix::identity(w->field(), 9));
  const std::vector<gf::Elem> c{gf::Elem{1}, gf::Elem{1}};
  const auto phi = phi_iso(w, y, c);
  for (std::uint32_t idx = 0; idx < w->dim(); ++idx) {
    const auto e = witt::WittElement::basis(w, idx);
    CHECK(phi.induced(e) == phi_closed_form(phi, c, w->monomial_of(idx), w->direction_of(idx)));
  }
  CHECK(preserves_brackets(phi));
  const std::vector<gf::Elem> bad{gf::Elem{0}, gf::Elem{1}};
  expect_error(ErrorKind::BadParam, [&] { phi_iso(w, y, bad); });
}

TEST_CASE("phi closed form over an extension field") {
  const auto w = testing::witt(2, 2, 2);
  const auto y = witt::WittAlgebra::make(2, w->field(), 'y');
  const std::vector<gf::Elem> c{gf::Elem{2}, gf::Elem{3}};
  const auto phi = phi_iso(w, y, c);
  for (std::uint32_t idx = 0; idx < w->dim(); ++idx) {
    CHECK(phi.induced(witt::WittElement::basis(w, idx)) ==
          phi_closed_form(phi, c, w->monomial_of(idx), w->direction_of(idx)));
  }
  CHECK(preserves_brackets(phi));
}

TEST_CASE("recovering an inner derivation from two values") {
  const auto w = testing::witt(1, 3);
  const auto lambda = regular(w, {1});
  const auto none = recover_inner(witt::WittElement(w), witt::WittElement(w), lambda);
  REQUIRE(none);
  CHECK(none->is_zero());
  const auto a = recover_inner(term(w, {2}, 1, 2), witt::WittElement(w), lambda);
  REQUIRE(a);
  CHECK(*a == term(w, {2}, 1));

  std::mt19937_64 rng(43);
  for (auto [n, p, m] : {std::tuple{2u, 2u, 2u}, {2u, 3u, 2u}, {3u, 2u, 3u}}) {
    const auto wn = testing::witt(n, p, m);
    for (int it = 0; it < 20; ++it) {
      const auto l = random_regular(wn->field(), n, rng);
      const auto pair = determining_pair(wn, l);
      const auto x = random_element(wn, rng);
      const auto got = recover_inner(bracket(x, pair.d1), bracket(x, pair.d2), l);
      REQUIRE(got);
      CHECK(*got == x);
    }
  }
}

TEST_CASE("values outside the inner image have no solution") {
  const auto w = testing::witt(1, 3);
  const auto lambda = regular(w, {1});
  // [a, x D] has no x D component
  CHECK_FALSE(recover_inner(term(w, {1}, 1), term(w, {0}, 1), lambda));
}

TEST_CASE("graded vanishing and centralizer checks") {
  for (auto [n, p, m] : {std::tuple{1u, 3u, 1u}, {2u, 3u, 1u}, {1u, 5u, 1u}, {1u, 7u, 1u}}) {
    CHECK(graded_vanishing_check(testing::witt(n, p, m)).passed());
  }
  expect_error(ErrorKind::CharTwoUnsupported, [] { graded_vanishing_check(testing::witt(2, 2)); });
  std::mt19937_64 rng(47);
  for (auto [n, p, m] : {std::tuple{2u, 3u, 2u}, {2u, 2u, 2u}, {1u, 5u, 1u}}) {
    const auto w = testing::witt(n, p, m);
    std::vector<gf::RegularVector> ls;
    for (int i = 0; i < 4; ++i) ls.push_back(random_regular(w->field(), n, rng));
    CHECK(centralizer_check(w, ls).passed());
    CHECK(determining_pair_check(w, ls, 10, rng).passed());
  }
}

TEST_CASE("script D powers and Cartan subalgebras") {
  for (auto [n, p] : {std::pair{1u, 2u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 5u}}) {
    CHECK(script_d_power_check(testing::witt(n, p)).passed());
  }
  for (auto [n, p] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const auto rep = torus_cartan_check(testing::witt(n, p));
    CHECK(rep.passed());
    CHECK(rep.result["k"].size() == (p == 2 ? 1u : n));
  }
}

TEST_CASE("reports serialise the documented keys") {
  const auto rep = der_equals_inn(testing::witt(1, 3));
  const auto j = rep.to_json();
  CHECK(j["check"] == "der-inn");
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["p"] == 3);
  CHECK(j["witness"].is_null());
  CHECK(j.contains("elapsed_ms"));
  CheckReport r{.check = "x"};
  r.fail({{"first", 1}});
  r.fail({{"second", 2}});
  CHECK(r.to_json()["witness"]["first"] == 1);
  CHECK_FALSE(r.to_json().contains("result"));
}
