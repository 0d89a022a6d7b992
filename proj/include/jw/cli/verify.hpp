#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jw/structure/report.hpp"
#include "jw/witt/witt.hpp"

namespace jw::cli {

struct AlgebraConfig {
  std::size_t n = 1;
  std::uint32_t p = 3;
  std::uint32_t deg = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::size_t dim_cap = witt::kDefaultDimCap;
};

witt::WittPtr build_algebra(const AlgebraConfig& c);

/// Canonical check order; "all" expands to the applicable subset of it.
const std::vector<std::string>& check_names();

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random regular vectors for the centralizer check.
  std::size_t lambdas = 20;
  /// Random regular vectors for the determining-pair roundtrip.
  std::size_t pair_lambdas = 3;
  /// Roundtrip samples per regular vector.
  std::size_t samples = 100;
  unsigned threads = 1;
};

/// Why `check` cannot run on this configuration, or empty when it can.
std::optional<std::string> refusal(const AlgebraConfig& c, const std::string& check);

/// One report per check in canonical order. A refused or oversized check
/// yields a report with Status::Infeasible.
std::vector<structure::CheckReport> run_verify(const AlgebraConfig& c, const std::string& check,
                                               const VerifyOptions& opts);

}  // namespace jw::cli
