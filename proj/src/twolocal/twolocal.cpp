#include "jw/twolocal/twolocal.hpp"

#include "jw/structure/recover.hpp"
#include "jw/structure/structure.hpp"

namespace jw::twolocal {
namespace {

using structure::json;
using structure::Status;

constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 20;

std::vector<std::uint32_t> key_of(const WittElement& x) {
  std::vector<std::uint32_t> k;
  k.reserve(2 * x.terms().size());
  for (const auto& [idx, c] : x.terms()) {
    k.push_back(idx);
    k.push_back(c.code);
  }
  return k;
}

json el(const WittElement& x) { return io::terms_to_json(x); }

struct FullChecks {
  bool additive = true;
  bool homogeneous = true;
  bool leibniz = true;
  json witness = nullptr;

  bool all() const { return additive && homogeneous && leibniz; }
};

/// Exhaustive checks on a map whose domain is the whole algebra.
FullChecks check_full(const PointwiseMap& delta, bool stop_at_first) {
  FullChecks out;
  const auto& dom = delta.domain();
  const auto& img = delta.images();
  const auto& f = *delta.algebra()->field();
  auto record = [&](bool& flag, json w) {
    if (out.witness.is_null()) out.witness = std::move(w);
    flag = false;
  };
  for (std::size_t i = 0; i < dom.size() && !(stop_at_first && !out.all()); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const auto& lhs = delta(dom[i] + dom[j]);
      const auto rhs = img[i] + img[j];
      if (lhs != rhs) {
        record(out.additive, {{"property", "additivity"}, {"x", el(dom[i])}, {"y", el(dom[j])},
                              {"delta_of_sum", el(lhs)}, {"sum_of_deltas", el(rhs)}});
        if (stop_at_first) break;
      }
    }
  }
  for (std::uint32_t code = 0; code < f.order() && !(stop_at_first && !out.all()); ++code) {
    const auto k = f.from_code(code);
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (delta(dom[i].scaled(k)) != img[i].scaled(k)) {
        record(out.homogeneous, {{"property", "homogeneity"}, {"x", el(dom[i])},
                                 {"k", io::elem_to_json(f, k)}});
        if (stop_at_first) break;
      }
    }
  }
  for (std::size_t i = 0; i < dom.size() && !(stop_at_first && !out.all()); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const auto& lhs = delta(witt::bracket(dom[i], dom[j]));
      const auto rhs = witt::bracket(img[i], dom[j]) + witt::bracket(dom[i], img[j]);
      if (lhs != rhs) {
        record(out.leibniz, {{"property", "leibniz"}, {"x", el(dom[i])}, {"y", el(dom[j])},
                             {"delta_of_bracket", el(lhs)}, {"expected", el(rhs)}});
        if (stop_at_first) break;
      }
    }
  }
  return out;
}

bool two_local_fast(const PointwiseMap& delta) {
  const auto& dom = delta.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (!witness_for_pair(delta, dom[i], dom[j])) return false;
    }
  }
  return true;
}

}  // namespace

PointwiseMap::PointwiseMap(WittPtr alg, std::vector<WittElement> domain,
                           std::vector<WittElement> images, std::optional<std::string> rule)
    : alg_(std::move(alg)), domain_(std::move(domain)), images_(std::move(images)), rule_(std::move(rule)) {
  if (domain_.size() != images_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "domain and images differ in length");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!domain_[i].algebra()->compatible(*alg_) || !images_[i].algebra()->compatible(*alg_)) {
      throw Error(ErrorKind::ContextMismatch, "map entry from another algebra");
    }
    if (!index_.emplace(key_of(domain_[i]), i).second) {
      throw Error(ErrorKind::BadParam, "duplicate domain entry " + domain_[i].to_string());
    }
  }
}

std::optional<std::size_t> PointwiseMap::find(const WittElement& x) const {
  const auto it = index_.find(key_of(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const WittElement& PointwiseMap::operator()(const WittElement& x) const {
  const auto i = find(x);
  if (!i) throw Error(ErrorKind::OutOfDomain, x.to_string() + " is outside the domain");
  return images_[*i];
}

bool PointwiseMap::is_full() const {
  const auto size = algebra_size(*alg_);
  return size && *size == domain_.size();
}

std::optional<std::uint64_t> algebra_size(const witt::WittAlgebra& alg) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    size *= alg.field()->order();
    if (size > kMaxEnumerated) return std::nullopt;
  }
  return size;
}

std::vector<WittElement> all_elements(const WittPtr& alg) {
  const auto size = algebra_size(*alg);
  if (!size) throw Error(ErrorKind::DomainNotFull, "algebra too large to enumerate");
  const auto& f = *alg->field();
  std::vector<WittElement> out;
  out.reserve(*size);
  std::vector<gf::Elem> coords(alg->dim());
  for (std::uint64_t k = 0; k < *size; ++k) {
    std::uint64_t rest = k;
    for (auto& c : coords) {
      c = f.from_code(rest % f.order());
      rest /= f.order();
    }
    out.push_back(WittElement::from_coords(alg, coords));
  }
  return out;
}

PointwiseMap restriction_of_ad(const WittElement& b, std::vector<WittElement> domain) {
  std::vector<WittElement> images;
  images.reserve(domain.size());
  for (const auto& x : domain) images.push_back(witt::bracket(b, x));
  return PointwiseMap(b.algebra(), std::move(domain), std::move(images), "ad " + b.to_string());
}

std::optional<WittElement> witness_for_pair(const PointwiseMap& delta, const WittElement& x,
                                            const WittElement& y) {
  const std::vector<WittElement> xs{x, y};
  const std::vector<WittElement> vs{delta(x), delta(y)};
  return structure::solve_inner(delta.algebra(), xs, vs);
}

PointwiseMap counterexample_map() {
  auto alg = witt::WittAlgebra::make(1, gf::Field::prime(2));
  auto domain = all_elements(alg);
  const auto e_minus = WittElement::basis(alg, 0);
  std::vector<WittElement> images;
  for (const auto& x : domain) {
    const bool k_minus = x.coeff(0).code != 0;
    const bool k_zero = x.coeff(1).code != 0;
    images.push_back(k_minus && k_zero ? e_minus : WittElement(alg));
  }
  return PointwiseMap(alg, std::move(domain), std::move(images),
                      "k_{-1} e_{-1} + k_0 e_0 -> k_0 e_{-1} if k_{-1} != 0, else 0");
}

CheckReport is_two_local(const PointwiseMap& delta) {
  structure::Stopwatch sw;
  CheckReport rep{.check = "is-two-local", .params = structure::params_of(*delta.algebra())};
  const auto& dom = delta.domain();
  json witnesses = json::array();
  std::size_t solvable = 0;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const auto a = witness_for_pair(delta, dom[i], dom[j]);
      if (a) {
        ++solvable;
        witnesses.push_back({{"x", el(dom[i])}, {"y", el(dom[j])}, {"a", el(*a)}});
      } else {
        rep.fail({{"x", el(dom[i])}, {"y", el(dom[j])}, {"fx", el(delta.images()[i])},
                  {"fy", el(delta.images()[j])}});
      }
    }
  }
  rep.dims["pairs"] = dom.size() * dom.size();
  rep.dims["solvable"] = solvable;
  if (delta.rule()) rep.result["rule"] = *delta.rule();
  rep.result["witnesses"] = std::move(witnesses);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

CheckReport is_derivation_map(const PointwiseMap& delta) {
  structure::Stopwatch sw;
  const auto& alg = delta.algebra();
  CheckReport rep{.check = "is-derivation", .params = structure::params_of(*alg)};
  if (delta.rule()) rep.result["rule"] = *delta.rule();
  if (delta.is_full()) {
    const auto c = check_full(delta, false);
    rep.result["mode"] = "exhaustive";
    rep.result["additive"] = c.additive;
    rep.result["homogeneous"] = c.homogeneous;
    rep.result["leibniz"] = c.leibniz;
    if (!c.all()) rep.fail(c.witness);
    rep.dims["domain"] = delta.size();
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
  }
  alg->require_within_cap("is_derivation_map");
  const auto dim = alg->dim();
  std::vector<exactla::Vec> chosen;
  std::vector<exactla::Vec> chosen_images;
  exactla::SubspaceBasis span(alg->field(), dim);
  for (std::size_t i = 0; i < delta.size() && span.dim() < dim; ++i) {
    const auto v = delta.domain()[i].to_coords();
    if (span.contains(v)) continue;
    chosen.push_back(v);
    chosen_images.push_back(delta.images()[i].to_coords());
    span = exactla::span_of(alg->field(), dim, chosen);
  }
  if (span.dim() < dim) {
    throw Error(ErrorKind::DomainNotFull, "domain neither covers nor spans the algebra");
  }
  // L B = I with B, I holding the chosen points and images as columns.
  exactla::Matrix b(alg->field(), dim, dim), im(alg->field(), dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      b(r, c) = chosen[c][r];
      im(r, c) = chosen_images[c][r];
    }
  }
  const auto l = im * *exactla::inverse(b);
  bool agrees = true;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto v = delta.domain()[i].to_coords();
    if (WittElement::from_coords(alg, l * v) != delta.images()[i]) {
      agrees = false;
      rep.fail({{"property", "linearity"}, {"x", el(delta.domain()[i])}, {"fx", el(delta.images()[i])},
                {"linear_extension", el(WittElement::from_coords(alg, l * v))}});
      break;
    }
  }
  const bool leibniz = structure::satisfies_leibniz(alg, l);
  if (!leibniz) rep.fail({{"property", "leibniz"}, {"reason", "linear extension is not a derivation"}});
  rep.result["mode"] = "spanning";
  rep.result["linear_on_domain"] = agrees;
  rep.result["leibniz"] = leibniz;
  rep.dims["domain"] = delta.size();
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

CheckReport exhaustive_scan_w1_p2() {
  structure::Stopwatch sw;
  const auto ce = counterexample_map();
  const auto& alg = ce.algebra();
  CheckReport rep{.check = "exhaustive-scan", .params = structure::params_of(*alg)};
  const auto& dom = ce.domain();
  const std::size_t size = dom.size();
  std::size_t maps = 1;
  for (std::size_t i = 0; i < size; ++i) maps *= size;
  std::size_t two_local = 0, derivations = 0;
  bool inclusion = true, zero_fixed = true, homogeneous = true, counterexample_found = false;
  std::vector<WittElement> images(size, WittElement(alg));
  for (std::size_t code = 0; code < maps; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < size; ++i) {
      images[i] = dom[rest % size];
      rest /= size;
    }
    const PointwiseMap delta(alg, dom, images);
    const bool is_2l = two_local_fast(delta);
    const bool is_der = check_full(delta, true).all();
    two_local += is_2l;
    derivations += is_der;
    if (is_der && !is_2l) inclusion = false;
    if (is_2l) {
      if (!delta(WittElement(alg)).is_zero()) zero_fixed = false;
      const auto& f = *alg->field();
      for (std::uint32_t k = 0; k < f.order(); ++k) {
        for (std::size_t i = 0; i < size; ++i) {
          if (delta(dom[i].scaled(f.from_code(k))) != images[i].scaled(f.from_code(k))) homogeneous = false;
        }
      }
      if (!is_der && images == ce.images()) counterexample_found = true;
    }
  }
  const bool strict = inclusion && two_local > derivations;
  rep.dims["maps"] = maps;
  rep.dims["two_local"] = two_local;
  rep.dims["derivations"] = derivations;
  rep.result["derivations_are_two_local"] = inclusion;
  rep.result["strict_inclusion"] = strict;
  rep.result["counterexample_in_difference"] = counterexample_found;
  rep.result["two_local_fix_zero"] = zero_fixed;
  rep.result["two_local_homogeneous"] = homogeneous;
  if (!strict) rep.fail({{"reason", "derivations are not strictly contained in 2-local maps"}});
  if (!counterexample_found) rep.fail({{"reason", "counterexample map not found among 2-local non-derivations"}});
  if (!zero_fixed || !homogeneous) rep.fail({{"reason", "a 2-local map is not homogeneous"}});
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace jw::twolocal
