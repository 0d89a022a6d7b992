// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when all pass.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "jw/cli/verify.hpp"
#include "jw/exactla/matrix.hpp"
#include "jw/structure/random.hpp"
#include "jw/twolocal/twolocal.hpp"
#include "jw/witt/special.hpp"

using namespace jw;
using structure::CheckReport;
using structure::Rng;
using witt::WittElement;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Config {
  std::size_t n;
  std::uint32_t p;
  std::uint32_t deg = 1;
};

std::string name(const Config& c) {
  std::ostringstream os;
  os << "(n=" << c.n << ",p=" << c.p;
  if (c.deg > 1) os << ",deg=" << c.deg;
  os << ")";
  return os.str();
}

std::size_t witt_dim(const Config& c) {
  std::size_t d = c.n;
  for (std::size_t i = 0; i < c.n; ++i) d *= c.p;
  return d;
}

cli::AlgebraConfig algebra_config(const Config& c) {
  cli::AlgebraConfig a;
  a.n = c.n;
  a.p = c.p;
  a.deg = c.deg;
  return a;
}

/// Runs one verify check and enforces its status and per-configuration time bound.
CheckReport run_check(Outcome& o, const Config& c, const std::string& check, const cli::VerifyOptions& opts,
                      std::int64_t bound_ms) {
  const auto reports = cli::run_verify(algebra_config(c), check, opts);
  const auto& rep = reports.front();
  o.require(rep.passed(), check + " " + name(c) + " status " + std::string(structure::to_string(rep.status)) +
                              " witness " + rep.witness.dump());
  o.require(rep.elapsed_ms < bound_ms, check + " " + name(c) + " took " + std::to_string(rep.elapsed_ms) + " ms");
  return rep;
}

Rng suite_rng(std::uint64_t seed, std::uint32_t ordinal) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), ordinal};
  return Rng(seq);
}

const std::vector<Config> kCentralizerConfigs{{1, 3, 1}, {2, 2, 2}, {2, 3, 2}, {1, 5, 1}, {2, 5, 2}, {3, 2, 3}};

Outcome criterion_der_inn(const cli::VerifyOptions& opts) {
  Outcome o;
  for (const Config c : std::vector<Config>{{1, 3}, {1, 5}, {1, 7}, {2, 2}, {2, 3}, {3, 2}, {2, 5}, {1, 2}}) {
    const auto dim = witt_dim(c);
    const auto rep = run_check(o, c, "der-inn", opts, dim <= 24 ? 1000 : 60000);
    o.require(rep.dims["der"] == dim && rep.dims["inn"] == dim, "der-inn " + name(c) + " dims " + rep.dims.dump());
  }
  return o;
}

Outcome criterion_script_d(const cli::VerifyOptions& opts) {
  Outcome o;
  for (const Config c : std::vector<Config>{{2, 2}, {3, 2}, {2, 3}, {2, 5}}) {
    const auto rep = run_check(o, c, "script-d", opts, 5000);
    o.require(rep.result["identities"].size() == c.n, "script-d " + name(c) + " identity count");
    o.require(rep.result["last_power_p_is_zero"] == true, "script-d " + name(c) + " nilpotency");
  }
  return o;
}

Outcome criterion_centralizers(cli::VerifyOptions opts) {
  Outcome o;
  opts.lambdas = std::max<std::size_t>(opts.lambdas, 20);
  for (const auto& c : kCentralizerConfigs) {
    const auto rep = run_check(o, c, "centralizers", opts, 10000);
    o.require(rep.result["lambdas"] == opts.lambdas, "centralizers " + name(c) + " lambda count");
    if (c.p > 2) o.require(rep.dims["sum_squares_meet_torus"] == 0, "centralizers " + name(c) + " sum of squares");
  }
  return o;
}

Outcome criterion_graded(const cli::VerifyOptions& opts) {
  Outcome o;
  for (const Config c : std::vector<Config>{{1, 3}, {2, 3}, {1, 5}, {2, 5}, {1, 7}}) {
    run_check(o, c, "graded-vanishing", opts, 10000);
  }
  return o;
}

Outcome criterion_cartan(const cli::VerifyOptions& opts) {
  Outcome o;
  for (const Config c : std::vector<Config>{{2, 3}, {2, 5}, {3, 2}, {2, 2}}) {
    const auto rep = run_check(o, c, "torus-cartan", opts, 10000);
    const std::size_t expected_k = c.p == 2 ? 1 : c.n;
    o.require(rep.result["k"].size() == expected_k, "torus-cartan " + name(c) + " k range");
    for (const auto& k : rep.result["k"]) {
      o.require(k["self_centralizing"] == true && k["abelian"] == true && k["psi_image"] == true,
                "torus-cartan " + name(c) + " " + k.dump());
    }
  }
  return o;
}

Outcome criterion_pairs(cli::VerifyOptions opts) {
  Outcome o;
  opts.pair_lambdas = 1;
  opts.samples = std::max<std::size_t>(opts.samples, 100);
  for (const auto& c : kCentralizerConfigs) {
    const auto rep = run_check(o, c, "determining-pair", opts, 30000);
    o.require(rep.dims["recovered"] == opts.samples, "determining-pair " + name(c) + " recovered " + rep.dims.dump());
  }
  return o;
}

Outcome criterion_counterexample() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto ce = twolocal::counterexample_map();
  const auto& w = ce.algebra();
  const auto em = WittElement::basis(w, 0), e0 = WittElement::basis(w, 1);
  const auto two = twolocal::is_two_local(ce);
  o.require(two.passed() && two.dims["pairs"] == 16 && two.dims["solvable"] == 16, "is-two-local " + two.dims.dump());
  const auto der = twolocal::is_derivation_map(ce);
  o.require(!der.passed(), "counterexample passed is-derivation");
  const auto& wit = der.witness;
  o.require(wit.is_object() && wit["x"] == io::terms_to_json(em) && wit["y"] == io::terms_to_json(e0),
            "witness pair " + wit.dump());
  o.require(wit.is_object() && wit["delta_of_sum"] == io::terms_to_json(em) &&
                wit["sum_of_deltas"] == io::terms_to_json(WittElement(w)),
            "witness values " + wit.dump());
  o.require(ce(em + e0) == em && (ce(em) + ce(e0)).is_zero(), "counterexample values");
  const auto scan = twolocal::exhaustive_scan_w1_p2();
  o.require(scan.passed() && scan.dims["maps"] == 256 && scan.result["strict_inclusion"] == true,
            "exhaustive scan " + scan.dims.dump());
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  o.require(ms < 1000, "counterexample took " + std::to_string(ms) + " ms");
  return o;
}

Outcome criterion_roots(const cli::VerifyOptions& opts) {
  Outcome o;
  for (const Config c : std::vector<Config>{{2, 3, 2}, {2, 5, 2}}) {
    const auto rep = run_check(o, c, "roots", opts, 5000);
    o.require(rep.dims["total"] == witt_dim(c), "roots " + name(c) + " dims " + rep.dims.dump());
  }
  return o;
}

// Property suites. Each runs `cases` randomized cases cycling over a few configurations.

Outcome suite_field(Rng& rng, std::size_t cases) {
  Outcome o;
  const std::vector<gf::FieldPtr> fields{gf::Field::make(2, 1), gf::Field::make(3, 2), gf::Field::make(5, 3),
                                         gf::Field::make(2, 8), gf::Field::make(7, 2), gf::Field::make(3, 11)};
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& f = *fields[i % fields.size()];
    const auto a = structure::random_elem(f, rng), b = structure::random_elem(f, rng), c = structure::random_elem(f, rng);
    o.require(f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a), "commutativity");
    o.require(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "additive associativity");
    o.require(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), "multiplicative associativity");
    o.require(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributivity");
    o.require(f.add(a, f.zero()) == a && f.mul(a, f.one()) == a, "identities");
    o.require(f.add(a, f.neg(a)) == f.zero() && f.sub(a, b) == f.add(a, f.neg(b)), "negation");
    if (a != f.zero()) o.require(f.mul(a, f.inv(a)) == f.one(), "inverse");
    o.require(f.pow(f.add(a, b), f.characteristic()) == f.add(f.pow(a, f.characteristic()), f.pow(b, f.characteristic())),
              "Frobenius");
  }
  return o;
}

const std::vector<Config> kAlgebraConfigs{{1, 5, 1}, {2, 2, 2}, {2, 3, 1}, {3, 2, 1}, {1, 7, 2}, {2, 5, 1}};

std::vector<witt::WittPtr> algebras() {
  std::vector<witt::WittPtr> out;
  for (const auto& c : kAlgebraConfigs) out.push_back(cli::build_algebra(algebra_config(c)));
  return out;
}

Outcome suite_jacobi(Rng& rng, std::size_t cases) {
  Outcome o;
  const auto ws = algebras();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& w = ws[i % ws.size()];
    const auto x = structure::random_element(w, rng), y = structure::random_element(w, rng),
               z = structure::random_element(w, rng);
    using witt::bracket;
    o.require((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero(),
              "Jacobi fails on " + x.to_string());
    o.require(bracket(x, x).is_zero(), "[x, x] != 0");
  }
  return o;
}

trunc::TruncPoly random_poly(const trunc::TruncPtr& a, Rng& rng) {
  std::vector<gf::Elem> c(a->dim());
  for (auto& e : c) e = structure::random_elem(*a->field(), rng);
  return trunc::TruncPoly::from_coords(a, c);
}

Outcome suite_leibniz(Rng& rng, std::size_t cases) {
  Outcome o;
  const auto ws = algebras();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& w = ws[i % ws.size()];
    const auto x = structure::random_element(w, rng);
    const auto f = random_poly(w->truncated(), rng), g = random_poly(w->truncated(), rng);
    o.require(witt::apply(x, f * g) == witt::apply(x, f) * g + f * witt::apply(x, g), "Leibniz fails on " + x.to_string());
  }
  return o;
}

Outcome suite_grading(Rng& rng, std::size_t cases) {
  Outcome o;
  const auto ws = algebras();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& w = ws[i % ws.size()];
    const auto xs = witt::graded_parts(structure::random_element(w, rng));
    const auto ys = witt::graded_parts(structure::random_element(w, rng));
    if (xs.empty() || ys.empty()) continue;
    auto xi = xs.begin(), yj = ys.begin();
    std::advance(xi, rng() % xs.size());
    std::advance(yj, rng() % ys.size());
    for (const auto& [k, part] : witt::graded_parts(witt::bracket(xi->second, yj->second))) {
      o.require(k == xi->first + yj->first, "bracket leaves degree " + std::to_string(xi->first + yj->first));
    }
  }
  return o;
}

Outcome suite_torus(Rng& rng, std::size_t cases) {
  Outcome o;
  const auto ws = algebras();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& w = ws[i % ws.size()];
    const auto& f = *w->field();
    const auto torus = witt::torus_basis(w);
    std::vector<gf::Elem> c(w->n());
    WittElement t(w);
    for (std::size_t k = 0; k < w->n(); ++k) {
      c[k] = structure::random_elem(f, rng);
      t = t + torus[k].scaled(c[k]);
    }
    const auto idx = static_cast<std::uint32_t>(rng() % w->dim());
    const auto e = WittElement::basis(w, idx);
    const auto& beta = w->monomial_of(idx);
    const auto j = w->direction_of(idx);
    // [sum c_k x_k D_k, x^beta D_j] = (sum_k c_k (beta_k - delta_kj)) x^beta D_j
    gf::Elem mu = f.zero();
    for (std::size_t k = 0; k < w->n(); ++k) {
      mu = f.add(mu, f.mul(c[k], f.from_int(static_cast<std::int64_t>(beta[k]) - (k + 1 == j ? 1 : 0))));
    }
    o.require(witt::bracket(t, e) == e.scaled(mu), "monomial line not T-stable at index " + std::to_string(idx));
  }
  return o;
}

Outcome suite_rank_nullity(Rng& rng, std::size_t cases) {
  Outcome o;
  const std::vector<gf::FieldPtr> fields{gf::Field::make(2, 1), gf::Field::make(3, 1), gf::Field::make(5, 2),
                                         gf::Field::make(2, 4)};
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& f = fields[i % fields.size()];
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const unsigned density = 10 + rng() % 91;
    exactla::Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 100 < density) m(r, c) = structure::random_elem(*f, rng);
      }
    }
    const auto k = exactla::kernel(m);
    o.require(exactla::rank(m) + k.dim() == cols, "rank + nullity != cols");
    for (const auto& v : k.vectors()) {
      const auto mv = m * v;
      o.require(std::all_of(mv.begin(), mv.end(), [](gf::Elem e) { return e.code == 0; }), "kernel vector not in kernel");
    }
    o.require(exactla::kernel_sparse(exactla::SparseMatrix::from_dense(m)) == k, "sparse and dense kernels differ");
  }
  return o;
}

Outcome criterion_properties(std::uint64_t seed, std::size_t cases) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome(Rng&, std::size_t)>>> suites{
      {"field axioms", suite_field},   {"Jacobi", suite_jacobi},
      {"Leibniz", suite_leibniz},      {"grading", suite_grading},
      {"T-stability", suite_torus},    {"rank-nullity", suite_rank_nullity}};
  for (std::uint32_t s = 0; s < suites.size(); ++s) {
    auto rng = suite_rng(seed, s);
    const auto r = suites[s].second(rng, cases);
    o.require(r.ok, suites[s].first + ": " + r.detail);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  o.require(ms < 60000, "property suites took " + std::to_string(ms) + " ms");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--cases", cases, "cases per property suite")->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 24));
  CLI11_PARSE(app, argc, argv);

  cli::VerifyOptions opts;
  opts.seed = seed;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Der = Inn", [&] { return criterion_der_inn(opts); }},
      {"operator-power identity", [&] { return criterion_script_d(opts); }},
      {"centralizer identities", [&] { return criterion_centralizers(opts); }},
      {"graded vanishing", [&] { return criterion_graded(opts); }},
      {"Cartan subalgebras", [&] { return criterion_cartan(opts); }},
      {"determining-pair roundtrip", [&] { return criterion_pairs(opts); }},
      {"2-local counterexample", [&] { return criterion_counterexample(); }},
      {"root decomposition", [&] { return criterion_roots(opts); }},
      {"property suites", [&] { return criterion_properties(seed, cases); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.ok) std::cout << "  (" << o.detail << ")";
    std::cout << '\n';
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
