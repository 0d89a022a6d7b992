#include "jw/cli/cli.hpp"

#include <CLI11.hpp>

#include "jw/cli/verify.hpp"
#include "jw/io/map.hpp"
#include "jw/structure/random.hpp"
#include "jw/structure/recover.hpp"
#include "jw/structure/structure.hpp"
#include "jw/twolocal/twolocal.hpp"

namespace jw::cli {
namespace {

using structure::CheckReport;
using structure::json;
using structure::Status;

struct Options {
  std::optional<std::size_t> n;
  std::optional<std::uint32_t> p;
  std::uint32_t deg = 1;
  std::vector<std::uint32_t> modulus;
  std::size_t dim_cap = witt::kDefaultDimCap;
  std::string format = "machine";
  bool no_timing = false;
  VerifyOptions verify;
  std::string check;
  std::string file_x, file_y;
  std::string lambda;
};

AlgebraConfig config_of(const Options& o) {
  if (!o.n || !o.p) throw Error(ErrorKind::BadParam, "--n and --p are required");
  AlgebraConfig c;
  c.n = *o.n;
  c.p = *o.p;
  c.deg = o.deg;
  if (!o.modulus.empty()) c.modulus = o.modulus;
  c.dim_cap = o.dim_cap;
  return c;
}

/// The configured algebra when --n/--p were given, checked against `doc`;
/// otherwise the algebra described by `doc` itself.
witt::WittElement load_element(const Options& o, const std::string& path,
                               const witt::WittPtr& alg) {
  const auto doc = io::read_file(path);
  if (alg) return io::element_from_json(alg, doc);
  return io::element_from_json(doc, o.dim_cap);
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Infeasible:
    case ErrorKind::DomainNotFull:
    case ErrorKind::CharTwoUnsupported:
    case ErrorKind::FieldTooSmall:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

void print_report(std::ostream& out, const CheckReport& r, const Options& o) {
  auto j = r.to_json();
  if (o.no_timing) j["elapsed_ms"] = 0;
  if (o.format == "machine") {
    out << j.dump() << '\n';
    return;
  }
  std::string status(structure::to_string(r.status));
  for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  out << '[' << status << "] " << r.check << "  params=" << r.params.dump() << "  dims=" << r.dims.dump();
  if (!o.no_timing) out << "  " << r.elapsed_ms << " ms";
  out << '\n';
  if (!r.witness.is_null()) out << "  witness: " << r.witness.dump() << '\n';
  if (!r.result.empty()) out << "  result: " << r.result.dump() << '\n';
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  bool infeasible = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return kExitFail;
    if (r.status == Status::Infeasible) infeasible = true;
  }
  return infeasible ? kExitInfeasible : kExitPass;
}

int emit(std::ostream& out, const std::vector<CheckReport>& reports, const Options& o) {
  for (const auto& r : reports) print_report(out, r, o);
  return exit_code_for(reports);
}

void print_element(std::ostream& out, const witt::WittElement& x, const Options& o) {
  if (o.format == "machine") {
    out << io::element_to_json(x).dump() << '\n';
  } else {
    out << x.to_string() << '\n';
  }
}

int cmd_bracket(const Options& o, std::ostream& out) {
  witt::WittPtr alg;
  if (o.n || o.p) alg = build_algebra(config_of(o));
  const auto x = load_element(o, o.file_x, alg);
  const auto y = load_element(o, o.file_y, x.algebra());
  print_element(out, witt::bracket(x, y), o);
  return kExitPass;
}

int cmd_centralizer(const Options& o, std::ostream& out) {
  witt::WittPtr configured;
  if (o.n || o.p) configured = build_algebra(config_of(o));
  const auto x = load_element(o, o.file_x, configured);
  const auto& alg = x.algebra();
  structure::Stopwatch sw;
  CheckReport rep{.check = "centralizer", .params = structure::params_of(*alg)};
  const auto z = structure::centralizer(x);
  rep.dims["centralizer"] = z.dim();
  json basis = json::array();
  for (const auto& y : structure::elements_of(alg, z)) basis.push_back(io::terms_to_json(y));
  rep.result["element"] = io::terms_to_json(x);
  rep.result["basis"] = std::move(basis);
  const bool contains_x = z.contains(x.to_coords());
  const bool closed = structure::is_subalgebra(alg, z);
  rep.result["contains_element"] = contains_x;
  rep.result["subalgebra"] = closed;
  if (!contains_x || !closed) rep.fail({{"reason", "centralizer invariants violated"}});
  rep.elapsed_ms = sw.elapsed_ms();
  return emit(out, {rep}, o);
}

int cmd_derivations(const Options& o, std::ostream& out) {
  const auto alg = build_algebra(config_of(o));
  alg->require_within_cap("derivations");
  return emit(out, {structure::der_equals_inn(alg)}, o);
}

gf::RegularVector lambda_of(const Options& o, const witt::WittPtr& alg) {
  if (o.lambda.empty()) {
    return gf::default_regular(alg->field(), alg->n());
  }
  const auto j = io::parse_text(o.lambda);
  if (!j.is_array()) throw Error(ErrorKind::Parse, "--lambda must be a JSON array of coefficient lists");
  std::vector<gf::Elem> v;
  for (const auto& e : j) v.push_back(io::elem_from_json(*alg->field(), e));
  if (v.size() != alg->n()) throw Error(ErrorKind::BadParam, "--lambda needs n entries");
  return gf::RegularVector(alg->field(), std::move(v));
}

int cmd_recover(const Options& o, std::ostream& out) {
  const auto alg = build_algebra(config_of(o));
  alg->require_within_cap("recover");
  const auto v1 = load_element(o, o.file_x, alg);
  const auto v2 = load_element(o, o.file_y, alg);
  const auto lambda = lambda_of(o, alg);
  structure::Stopwatch sw;
  CheckReport rep{.check = "recover", .params = structure::params_of(*alg)};
  const auto kind = structure::default_pair_kind(*alg);
  rep.result["pair"] = std::string(structure::to_string(kind));
  const auto a = structure::recover_inner(v1, v2, lambda);
  if (a) {
    rep.result["a"] = io::terms_to_json(*a);
    const auto pair = structure::determining_pair(alg, lambda);
    if (witt::bracket(*a, pair.d1) != v1 || witt::bracket(*a, pair.d2) != v2) {
      rep.fail({{"reason", "solution does not reproduce the images"}});
    }
  } else {
    rep.result["a"] = nullptr;
    rep.fail({{"reason", "unsolvable"}});
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return emit(out, {rep}, o);
}

int cmd_twolocal(const Options& o, std::ostream& out) {
  const auto map = io::map_from_json(io::read_file(o.file_x), o.dim_cap);
  if (o.n || o.p) {
    const auto alg = build_algebra(config_of(o));
    if (!alg->compatible(*map.algebra())) throw Error(ErrorKind::DescriptorMismatch, "map does not match --n/--p/--deg");
  }
  map.algebra()->require_within_cap("twolocal-check");
  return emit(out, {twolocal::is_two_local(map), twolocal::is_derivation_map(map)}, o);
}

int cmd_counterexample_map(const Options& o, std::ostream& out) {
  const auto j = io::map_to_json(twolocal::counterexample_map());
  out << (o.format == "machine" ? j.dump() : j.dump(2)) << '\n';
  return kExitPass;
}

void add_config(CLI::App* cmd, Options& o, bool required) {
  auto* n = cmd->add_option("--n", o.n, "number of variables")->check(CLI::Range(1, 16));
  auto* p = cmd->add_option("--p", o.p, "characteristic (prime)");
  if (required) {
    n->required();
    p->required();
  }
  cmd->add_option("--deg", o.deg, "degree of the coefficient field over F_p")->check(CLI::Range(1, 64));
  cmd->add_option("--modulus", o.modulus, "ascending coefficients of the field modulus")->delimiter(',');
  cmd->add_option("--dim-cap", o.dim_cap, "largest dim W_n handled by dense matrices");
  cmd->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  cmd->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Jacobson-Witt algebras W_n over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto* bracket = app.add_subcommand("bracket", "print [X, Y]");
  add_config(bracket, o, false);
  bracket->add_option("x", o.file_x, "element file")->required();
  bracket->add_option("y", o.file_y, "element file")->required();

  auto* verify = app.add_subcommand("verify", "run certificate checks");
  add_config(verify, o, true);
  std::vector<std::string> choices = check_names();
  choices.push_back("all");
  verify->add_option("check", o.check, "check name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--seed", o.verify.seed, "seed for randomized checks");
  verify->add_option("--lambdas", o.verify.lambdas, "random regular vectors for centralizers");
  verify->add_option("--pair-lambdas", o.verify.pair_lambdas, "random regular vectors for determining-pair");
  verify->add_option("--samples", o.verify.samples, "roundtrip samples per regular vector");
  verify->add_option("--threads", o.verify.threads, "checks run concurrently")->check(CLI::Range(1, 64));

  auto* central = app.add_subcommand("centralizer", "centralizer of an element");
  add_config(central, o, false);
  central->add_option("x", o.file_x, "element file")->required();

  auto* der = app.add_subcommand("derivations", "compare Der(W_n) and Inn(W_n)");
  add_config(der, o, true);

  auto* recover = app.add_subcommand("recover", "solve [a, d_1] = v1, [a, d_2] = v2");
  add_config(recover, o, true);
  recover->add_option("v1", o.file_x, "element file")->required();
  recover->add_option("v2", o.file_y, "element file")->required();
  recover->add_option("--lambda", o.lambda, "regular vector as a JSON list of coefficient lists");

  auto* twolocal = app.add_subcommand("twolocal-check", "2-local and derivation tests of a map file");
  add_config(twolocal, o, false);
  twolocal->add_option("map", o.file_x, "map file")->required();

  auto* ce = app.add_subcommand("counterexample-map", "print the 2-local non-derivation of W_1 over F_2");
  ce->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*bracket) return cmd_bracket(o, out);
    if (*central) return cmd_centralizer(o, out);
    if (*der) return cmd_derivations(o, out);
    if (*recover) return cmd_recover(o, out);
    if (*twolocal) return cmd_twolocal(o, out);
    if (*ce) return cmd_counterexample_map(o, out);
    const auto config = config_of(o);
    build_algebra(config);
    return emit(out, run_verify(config, o.check, o.verify), o);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: Parse: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace jw::cli
