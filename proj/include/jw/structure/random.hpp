#pragma once

#include <random>

#include "jw/witt/witt.hpp"

namespace jw::structure {

/// Draws use `rng() % bound` so sequences match across standard libraries.
using Rng = std::mt19937_64;

gf::Elem random_elem(const gf::Field& f, Rng& rng);
witt::WittElement random_element(const witt::WittPtr& alg, Rng& rng);
/// Rejection-samples n field elements until they are regular.
gf::RegularVector random_regular(const gf::FieldPtr& field, std::size_t n, Rng& rng);

}  // namespace jw::structure
