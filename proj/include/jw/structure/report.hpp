#pragma once

#include <chrono>
#include <string>

#include "jw/io/json.hpp"

namespace jw::structure {

using io::json;

enum class Status { Pass, Fail, Infeasible };
std::string_view to_string(Status s);

/// Outcome of one named check. `status == Pass` iff every asserted identity held.
struct CheckReport {
  std::string check;
  json params = json::object();
  Status status = Status::Pass;
  json dims = json::object();
  json witness = nullptr;
  json result = json::object();
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return status == Status::Pass; }
  /// Records a failed assertion; the first witness is kept.
  void fail(json w);
  json to_json() const;
};

/// {"n", "p", "deg", "modulus"} of an algebra.
json params_of(const witt::WittAlgebra& alg);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace jw::structure
