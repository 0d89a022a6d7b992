#include "jw/io/json.hpp"

#include <fstream>
#include <sstream>

namespace jw::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) parse_error("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) parse_error(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint32_t> uint_list(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    const auto u = as_uint(v, what);
    if (u > 0xffffffffu) parse_error(std::string(what) + " entry too large");
    out.push_back(static_cast<std::uint32_t>(u));
  }
  return out;
}

trunc::Monomial monomial_from_json(const json& j, std::size_t n, std::uint32_t p) {
  const auto exps = uint_list(j, "alpha");
  if (exps.size() != n) parse_error("alpha must have n entries");
  std::vector<std::uint8_t> e;
  e.reserve(n);
  for (auto v : exps) {
    if (v >= p) parse_error("alpha entries must be < p");
    e.push_back(static_cast<std::uint8_t>(v));
  }
  return trunc::Monomial(std::move(e));
}

json monomial_to_json(const trunc::Monomial& m) {
  json a = json::array();
  for (auto e : m.exps()) a.push_back(static_cast<unsigned>(e));
  return a;
}

}  // namespace

json field_to_json(const gf::Field& f) {
  json j;
  j["p"] = f.characteristic();
  j["deg"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

gf::FieldPtr field_from_json(const json& j) {
  const auto p = as_uint(member(j, "p"), "p");
  const auto deg = as_uint(member(j, "deg"), "deg");
  if (p > 0xffffffffu || deg == 0 || deg > 64) parse_error("field p/deg out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (const auto it = j.find("modulus"); it != j.end() && !it->is_null()) {
    modulus = uint_list(*it, "modulus");
  }
  return gf::Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(deg), modulus);
}

json elem_to_json(const gf::Field& f, gf::Elem a) { return f.coeffs(a); }

gf::Elem elem_from_json(const gf::Field& f, const json& j) {
  const auto c = uint_list(j, "coefficient");
  if (c.empty() || c.size() > f.degree()) parse_error("coefficient list must have 1..deg entries");
  for (auto v : c) {
    if (v >= f.characteristic()) parse_error("coefficient entries must be < p");
  }
  return f.from_coeffs(c);
}

json poly_to_json(const trunc::TruncPoly& f) {
  json out = json::array();
  const auto& field = *f.algebra()->field();
  for (const auto& [m, c] : f.terms()) {
    json t;
    t["alpha"] = monomial_to_json(m);
    t["c"] = elem_to_json(field, c);
    out.push_back(std::move(t));
  }
  return out;
}

trunc::TruncPoly poly_from_json(const trunc::TruncPtr& alg, const json& j) {
  if (!j.is_array()) parse_error("polynomial must be an array of terms");
  trunc::TruncPoly f(alg);
  std::set<trunc::Monomial> seen;
  for (const auto& t : j) {
    auto m = monomial_from_json(member(t, "alpha"), alg->n(), alg->p());
    if (!seen.insert(m).second) parse_error("duplicate monomial " + m.to_string(alg->var()));
    f.add_term(m, elem_from_json(*alg->field(), member(t, "c")));
  }
  return f;
}

json terms_to_json(const WittElement& x) {
  const auto& alg = *x.algebra();
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) {
    json t;
    t["alpha"] = monomial_to_json(alg.monomial_of(idx));
    t["d"] = alg.direction_of(idx);
    t["c"] = elem_to_json(*alg.field(), c);
    terms.push_back(std::move(t));
  }
  return terms;
}

json element_to_json(const WittElement& x) {
  json j;
  j["field"] = field_to_json(*x.algebra()->field());
  j["n"] = x.algebra()->n();
  j["terms"] = terms_to_json(x);
  return j;
}

WittElement element_from_json(const WittPtr& alg, const json& j) {
  const auto field = field_from_json(member(j, "field"));
  if (!field->same_as(*alg->field())) {
    throw Error(ErrorKind::DescriptorMismatch,
                "element over " + field->describe() + ", expected " + alg->field()->describe());
  }
  if (as_uint(member(j, "n"), "n") != alg->n()) {
    throw Error(ErrorKind::DescriptorMismatch, "element has a different number of variables");
  }
  const auto& terms = member(j, "terms");
  if (!terms.is_array()) parse_error("terms must be an array");
  WittElement x(alg);
  std::set<std::uint32_t> seen;
  for (const auto& t : terms) {
    const auto m = monomial_from_json(member(t, "alpha"), alg->n(), alg->p());
    const auto d = as_uint(member(t, "d"), "d");
    if (d < 1 || d > alg->n()) parse_error("d must lie in 1..n");
    const auto idx = alg->index(m, d);
    if (!seen.insert(idx).second) parse_error("duplicate term " + m.to_string(alg->var()) + "*D" + std::to_string(d));
    x.add_term(idx, elem_from_json(*alg->field(), member(t, "c")));
  }
  return x;
}

WittElement element_from_json(const json& j, std::size_t dim_cap) {
  const auto field = field_from_json(member(j, "field"));
  const auto n = as_uint(member(j, "n"), "n");
  if (n == 0 || n > 16) parse_error("n must lie in 1..16");
  return element_from_json(witt::WittAlgebra::make(n, field, 'x', dim_cap), j);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

}  // namespace jw::io
