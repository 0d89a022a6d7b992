#include "jw/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "jw/structure/iso.hpp"
#include "jw/structure/random.hpp"
#include "jw/structure/recover.hpp"
#include "jw/structure/roots.hpp"
#include "jw/structure/structure.hpp"
#include "jw/twolocal/twolocal.hpp"

namespace jw::cli {
namespace {

using structure::CheckReport;
using structure::Rng;
using structure::Status;

bool is_counterexample_config(const AlgebraConfig& c) { return c.n == 1 && c.p == 2 && c.deg == 1; }

bool needs_regular(const std::string& check) {
  return check == "centralizers" || check == "determining-pair" || check == "roots";
}

std::vector<gf::RegularVector> regular_vectors(const witt::WittPtr& alg, std::size_t count, Rng& rng) {
  std::vector<gf::RegularVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(structure::random_regular(alg->field(), alg->n(), rng));
  return out;
}

CheckReport counterexample_report() {
  structure::Stopwatch sw;
  const auto delta = twolocal::counterexample_map();
  CheckReport rep{.check = "counterexample", .params = structure::params_of(*delta.algebra())};
  const auto two_local = twolocal::is_two_local(delta);
  const auto derivation = twolocal::is_derivation_map(delta);
  const auto scan = twolocal::exhaustive_scan_w1_p2();
  rep.dims["pairs"] = two_local.dims["pairs"];
  rep.dims["two_local_maps"] = scan.dims["two_local"];
  rep.dims["derivations"] = scan.dims["derivations"];
  rep.result["two_local"] = two_local.passed();
  rep.result["derivation"] = derivation.passed();
  rep.result["derivation_witness"] = derivation.witness;
  rep.result["strict_inclusion"] = scan.result["strict_inclusion"];
  if (!two_local.passed()) rep.fail({{"reason", "map is not 2-local"}, {"pair", two_local.witness}});
  if (derivation.passed()) rep.fail({{"reason", "map is a derivation"}});
  if (!scan.passed()) rep.fail(scan.witness);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

CheckReport run_one(const AlgebraConfig& c, const std::string& check, const VerifyOptions& opts,
                    std::size_t ordinal) {
  if (const auto why = refusal(c, check)) {
    CheckReport rep{.check = check, .status = Status::Infeasible};
    rep.params = {{"n", c.n}, {"p", c.p}, {"deg", c.deg}};
    rep.witness = {{"reason", *why}};
    return rep;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                   static_cast<std::uint32_t>(ordinal)};
  Rng rng(seq);
  try {
    if (check == "counterexample") return counterexample_report();
    const auto alg = build_algebra(c);
    alg->require_within_cap(check.c_str());
    if (check == "der-inn") return structure::der_equals_inn(alg);
    if (check == "script-d") return structure::script_d_power_check(alg);
    if (check == "graded-vanishing") return structure::graded_vanishing_check(alg);
    if (check == "torus-cartan") return structure::torus_cartan_check(alg);
    if (check == "centralizers") {
      const auto ls = regular_vectors(alg, opts.lambdas, rng);
      return structure::centralizer_check(alg, ls);
    }
    if (check == "determining-pair") {
      const auto ls = regular_vectors(alg, opts.pair_lambdas, rng);
      return structure::determining_pair_check(alg, ls, opts.samples, rng);
    }
    if (check == "roots") return structure::root_check(alg, regular_vectors(alg, 1, rng).front());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    CheckReport rep{.check = check, .status = Status::Infeasible};
    rep.params = {{"n", c.n}, {"p", c.p}, {"deg", c.deg}};
    rep.witness = {{"reason", e.what()}};
    return rep;
  }
  throw Error(ErrorKind::BadParam, "unknown check " + check);
}

}  // namespace

witt::WittPtr build_algebra(const AlgebraConfig& c) {
  if (c.n == 0) throw Error(ErrorKind::BadParam, "n must be positive");
  if (c.n > 16) throw Error(ErrorKind::Infeasible, "n above 16 is not supported");
  if (c.deg == 0) throw Error(ErrorKind::BadParam, "deg must be positive");
  return witt::WittAlgebra::make(c.n, gf::Field::make(c.p, c.deg, c.modulus), 'x', c.dim_cap);
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"der-inn",          "script-d",       "centralizers",
                                              "torus-cartan",     "graded-vanishing", "determining-pair",
                                              "counterexample",   "roots"};
  return names;
}

std::optional<std::string> refusal(const AlgebraConfig& c, const std::string& check) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end()) {
    throw Error(ErrorKind::BadParam, "unknown check " + check);
  }
  if (check == "counterexample") {
    if (!is_counterexample_config(c)) return "the counterexample is fixed to n=1, p=2, deg=1";
    return std::nullopt;
  }
  if (c.n == 1 && c.p == 2 && check != "der-inn") return "W_1 at p=2 is not simple; only der-inn and counterexample apply";
  if (check == "graded-vanishing" && c.p == 2) return "graded-vanishing needs p > 2";
  if (needs_regular(check) && c.deg < c.n) return check + " needs regular vectors, so deg >= n";
  return std::nullopt;
}

std::vector<CheckReport> run_verify(const AlgebraConfig& c, const std::string& check,
                                    const VerifyOptions& opts) {
  std::vector<std::pair<std::string, std::size_t>> todo;
  const auto& names = check_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (check == "all" ? !refusal(c, names[i]) : names[i] == check) todo.emplace_back(names[i], i);
  }
  if (todo.empty()) {
    if (check != "all") throw Error(ErrorKind::BadParam, "unknown check " + check);
    todo.emplace_back("der-inn", 0);
  }
  std::vector<CheckReport> out;
  out.reserve(todo.size());
  if (opts.threads <= 1 || todo.size() == 1) {
    for (const auto& [name, ord] : todo) out.push_back(run_one(c, name, opts, ord));
    return out;
  }
  // Batches of `threads` checks; results are collected in canonical order.
  for (std::size_t start = 0; start < todo.size(); start += opts.threads) {
    std::vector<std::future<CheckReport>> batch;
    for (std::size_t i = start; i < std::min(todo.size(), start + opts.threads); ++i) {
      batch.push_back(std::async(std::launch::async, run_one, std::cref(c), todo[i].first,
                                 std::cref(opts), todo[i].second));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace jw::cli
