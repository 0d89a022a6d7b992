#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace jw;
using namespace jw::gf;
using testing::expect_error;

TEST_CASE("prime field construction uses the degree-one placeholder modulus") {
  const auto f2 = Field::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(f2->generator() == f2->zero());
  CHECK(Field::make(3, 1)->order() == 3);
}

TEST_CASE("default modulus of F_4 is t^2+t+1") {
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2)->describe() == "F_9 = F_3[t]/(t^2+1)");
}

TEST_CASE("default modulus is the first irreducible in scan order") {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    const auto mod = default_modulus(p, m);
    oracle::Poly monic(mod.begin(), mod.end());
    CHECK(oracle::irreducible_by_products(monic, p));
    // every tuple earlier in the scan (c_0 most significant) is reducible
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      oracle::Poly c(m + 1, 0);
      std::uint64_t rest = r;
      for (std::uint32_t i = m; i-- > 0;) {
        c[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      c[m] = 1;
      if (c == monic) break;
      CHECK_FALSE(oracle::irreducible_by_products(c, p));
    }
  }
}

TEST_CASE("irreducibility test agrees with the product oracle") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < m; ++i) count *= p;
      for (std::uint64_t r = 0; r < count; ++r) {
        std::vector<std::uint32_t> c(m + 1, 1);
        std::uint64_t rest = r;
        for (std::uint32_t i = 0; i < m; ++i) {
          c[i] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        oracle::Poly o(c.begin(), c.end());
        CHECK(is_irreducible(c, p) == oracle::irreducible_by_products(o, p));
      }
    }
  }
}

TEST_CASE("construction errors") {
  expect_error(ErrorKind::NonPrime, [] { Field::make(4, 1); });
  expect_error(ErrorKind::NonPrime, [] { Field::make(1, 1); });
  expect_error(ErrorKind::BadModulus, [] { Field::make(2, 2, std::vector<std::uint32_t>{0, 1, 1}); });
  expect_error(ErrorKind::BadModulus, [] { Field::make(2, 2, std::vector<std::uint32_t>{1, 1}); });
  expect_error(ErrorKind::BadModulus, [] { Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}); });
  expect_error(ErrorKind::BadModulus, [] { Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 3}); });
  expect_error(ErrorKind::Infeasible, [] { Field::make(2, 31); });
  CHECK(Field::make(3, 2, std::vector<std::uint32_t>{2, 2, 1})->order() == 9);
}

TEST_CASE("arithmetic examples") {
  const auto f4 = Field::make(2, 2);
  const auto t = f4->generator();
  CHECK(f4->mul(t, t) == f4->from_coeffs(std::vector<std::uint32_t>{1, 1}));
  CHECK(f4->pow(t, 3) == f4->one());
  const auto f3 = Field::make(3, 1);
  CHECK(f3->inv(f3->from_int(2)) == f3->from_int(2));
  CHECK(f3->from_int(-1) == f3->from_int(2));
  expect_error(ErrorKind::DivisionByZero, [&] { f3->inv(f3->zero()); });
  CHECK(f4->to_string(f4->from_coeffs(std::vector<std::uint32_t>{1, 1})) == "1+t");
}

TEST_CASE("multiplication matches the schoolbook oracle on every pair") {
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 5u}, {3u, 3u}}) {
    const auto f = Field::make(p, m);
    const oracle::Poly mod(f->modulus().begin(), f->modulus().end());
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      for (std::uint32_t b = 0; b < f->order(); ++b) {
        REQUIRE(f->mul(Elem{a}, Elem{b}).code == oracle::field_mul(a, b, mod, p));
        REQUIRE(f->add(Elem{a}, Elem{b}).code == oracle::field_add(a, b, p, m));
      }
    }
  }
}

TEST_CASE("large fields without tables agree with the oracle") {
  const auto f = Field::make(3, 11);  // 177147 > 65536, polynomial path
  const oracle::Poly mod(f->modulus().begin(), f->modulus().end());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto a = static_cast<std::uint32_t>(rng() % f->order());
    const auto b = static_cast<std::uint32_t>(rng() % f->order());
    REQUIRE(f->mul(Elem{a}, Elem{b}).code == oracle::field_mul(a, b, mod, 3));
    REQUIRE(f->add(Elem{a}, Elem{b}).code == oracle::field_add(a, b, 3, 11));
    if (a != 0) REQUIRE(f->mul(Elem{a}, f->inv(Elem{a})) == f->one());
  }
}

TEST_CASE("Frobenius is additive and nonzero elements have order dividing q-1") {
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const auto f = Field::make(p, m);
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      if (a != 0) CHECK(f->pow(Elem{a}, f->order() - 1) == f->one());
      for (std::uint32_t b = 0; b < f->order(); b += 3) {
        CHECK(f->pow(f->add(Elem{a}, Elem{b}), p) == f->add(f->pow(Elem{a}, p), f->pow(Elem{b}, p)));
      }
    }
  }
}

TEST_CASE("coefficient round trip") {
  const auto f = Field::make(3, 3);
  for (std::uint32_t a = 0; a < f->order(); ++a) {
    const auto c = f->coeffs(Elem{a});
    CHECK(c.size() == 3);
    CHECK(f->from_coeffs(c) == Elem{a});
  }
  CHECK(f->from_coeffs(std::vector<std::uint32_t>{2}) == f->from_int(2));
  expect_error(ErrorKind::BadParam, [&] { f->from_coeffs(std::vector<std::uint32_t>{1, 1, 1, 1}); });
}

TEST_CASE("FieldElement rejects mixed descriptors") {
  const auto a = FieldElement(Field::make(2, 2), Elem{2});
  const auto b = FieldElement(Field::make(2, 3), Elem{2});
  expect_error(ErrorKind::DescriptorMismatch, [&] { (void)(a + b); });
  CHECK((a * a).value() == Elem{3});
  CHECK((a / a).value() == Elem{1});
  // identical descriptors built separately are compatible
  const auto c = FieldElement(Field::make(2, 2), Elem{3});
  CHECK((a + c).value() == Elem{1});
}

TEST_CASE("regular vectors") {
  const auto f4 = Field::make(2, 2);
  const auto f9 = Field::make(3, 2);
  CHECK(is_regular(*f4, std::vector<Elem>{f4->one(), f4->generator()}));
  CHECK_FALSE(is_regular(*f9, std::vector<Elem>{f9->one(), f9->one()}));
  CHECK_FALSE(is_regular(*f4, std::vector<Elem>{f4->one(), f4->one()}));
  CHECK(is_regular(*Field::make(3, 1), std::vector<Elem>{Elem{2}}));
  CHECK_FALSE(is_regular(*Field::make(3, 1), std::vector<Elem>{Elem{0}}));
  CHECK(default_regular(f9, 2).entries() == std::vector<Elem>{f9->one(), f9->generator()});
  CHECK(default_regular(Field::make(2, 1), 1).entries() == std::vector<Elem>{Elem{1}});
  CHECK(default_regular(f4, 2).entries() == std::vector<Elem>{f4->one(), f4->generator()});
  expect_error(ErrorKind::FieldTooSmall, [] { default_regular(Field::make(3, 1), 2); });
  expect_error(ErrorKind::NotRegular, [&] { RegularVector(f9, {f9->one(), f9->from_int(2)}); });
}

TEST_CASE("regularity is invariant under prime-field scaling") {
  const auto f = Field::make(5, 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<Elem> l(2);
    for (auto& e : l) e = Elem{static_cast<std::uint32_t>(rng() % f->order())};
    const auto s = f->from_int(1 + static_cast<std::int64_t>(rng() % 4));
    std::vector<Elem> scaled{f->mul(l[0], s), f->mul(l[1], s)};
    CHECK(is_regular(*f, l) == is_regular(*f, scaled));
  }
}
