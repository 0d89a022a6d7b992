#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>

#include "jw/gf/field.hpp"
#include "jw/witt/witt.hpp"

namespace testing {

using jw::gf::Elem;
using jw::gf::FieldPtr;
using jw::witt::WittElement;
using jw::witt::WittPtr;

inline FieldPtr field(std::uint32_t p, std::uint32_t m = 1) { return jw::gf::Field::make(p, m); }

inline WittPtr witt(std::size_t n, std::uint32_t p, std::uint32_t m = 1) {
  return jw::witt::WittAlgebra::make(n, field(p, m));
}

inline jw::trunc::Monomial mono(std::initializer_list<int> e) {
  std::vector<std::uint8_t> v;
  for (int x : e) v.push_back(static_cast<std::uint8_t>(x));
  return jw::trunc::Monomial(std::move(v));
}

/// c x^alpha D_dir with an integer coefficient.
inline WittElement term(const WittPtr& alg, std::initializer_list<int> alpha, std::size_t dir, std::int64_t c = 1) {
  return WittElement::term(alg, mono(alpha), dir, alg->field()->from_int(c));
}

template <class Fn>
void expect_error(jw::ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL("expected an exception");
  } catch (const jw::Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace testing
