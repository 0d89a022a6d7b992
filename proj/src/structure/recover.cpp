#include "jw/structure/recover.hpp"

namespace jw::structure {

std::string_view to_string(PairKind k) {
  return k == PairKind::SumSquares ? "d_lambda, sum x_i^2 D_i" : "d_lambda, script_D_1";
}

PairKind default_pair_kind(const witt::WittAlgebra& alg) {
  return alg.p() > 2 ? PairKind::SumSquares : PairKind::ScriptD;
}

DeterminingPair determining_pair(const WittPtr& alg, const gf::RegularVector& lambda, PairKind kind) {
  if (!lambda.field()->same_as(*alg->field()) || lambda.size() != alg->n()) {
    throw Error(ErrorKind::NotRegular, "lambda is not a regular vector for this algebra");
  }
  auto d1 = witt::d_lambda(alg, lambda.entries(), 1);
  auto d2 = kind == PairKind::SumSquares ? witt::sum_squares(alg) : witt::script_d(alg, 1);
  return {std::move(d1), std::move(d2), kind};
}

DeterminingPair determining_pair(const WittPtr& alg, const gf::RegularVector& lambda) {
  return determining_pair(alg, lambda, default_pair_kind(*alg));
}

std::optional<WittElement> solve_inner(const WittPtr& alg, std::span<const WittElement> xs,
                                       std::span<const WittElement> values) {
  if (xs.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "points and values differ in count");
  alg->require_within_cap("solve_inner");
  const auto& f = *alg->field();
  const auto minus_one = f.neg(f.one());
  exactla::Matrix m(alg->field(), 0, alg->dim());
  exactla::Vec rhs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // [a, x] = -ad(x) a
    m = m.vstack(witt::ad_matrix(xs[i]).matrix.scaled(minus_one));
    const auto v = values[i].to_coords();
    rhs.insert(rhs.end(), v.begin(), v.end());
  }
  const auto sol = exactla::solve(m, rhs);
  if (!sol) return std::nullopt;
  return WittElement::from_coords(alg, sol->particular);
}

std::optional<WittElement> recover_inner(const WittElement& v1, const WittElement& v2,
                                         const gf::RegularVector& lambda) {
  const auto& alg = v1.algebra();
  if (!alg->compatible(*v2.algebra())) throw Error(ErrorKind::ContextMismatch, "images from different algebras");
  const auto pair = determining_pair(alg, lambda);
  const std::vector<WittElement> xs{pair.d1, pair.d2};
  const std::vector<WittElement> vs{v1, v2};
  return solve_inner(alg, xs, vs);
}

CheckReport determining_pair_check(const WittPtr& alg, std::span<const gf::RegularVector> lambdas,
                                   std::size_t samples, Rng& rng) {
  Stopwatch sw;
  CheckReport rep{.check = "determining-pair", .params = params_of(*alg)};
  std::vector<PairKind> kinds{PairKind::ScriptD};
  if (alg->p() > 2) kinds.insert(kinds.begin(), PairKind::SumSquares);
  std::size_t recovered = 0;
  for (const auto& lambda : lambdas) {
    for (auto kind : kinds) {
      const auto pair = determining_pair(alg, lambda, kind);
      const auto meet = exactla::intersect(centralizer(pair.d1), centralizer(pair.d2));
      if (meet.dim() != 0) {
        rep.fail({{"pair", std::string(to_string(kind))}, {"reason", "centralizers meet"}, {"dim", meet.dim()}});
      }
    }
    const auto pair = determining_pair(alg, lambda);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = random_element(alg, rng);
      const auto got = recover_inner(witt::bracket(a, pair.d1), witt::bracket(a, pair.d2), lambda);
      if (got && *got == a) {
        ++recovered;
      } else {
        rep.fail({{"reason", "roundtrip failed"}, {"a", io::terms_to_json(a)}});
      }
    }
  }
  rep.dims["lambdas"] = lambdas.size();
  rep.dims["recovered"] = recovered;
  rep.result["pair"] = std::string(to_string(default_pair_kind(*alg)));
  json checked = json::array();
  for (auto k : kinds) checked.push_back(std::string(to_string(k)));
  rep.result["uniqueness_pairs"] = std::move(checked);
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace jw::structure
