#include "jw/structure/report.hpp"

namespace jw::structure {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Infeasible: return "infeasible";
  }
  return "unknown";
}

void CheckReport::fail(json w) {
  if (status == Status::Pass) witness = std::move(w);
  status = Status::Fail;
}

json CheckReport::to_json() const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = std::string(to_string(status));
  j["dims"] = dims;
  j["witness"] = witness;
  if (!result.empty()) j["result"] = result;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

json params_of(const witt::WittAlgebra& alg) {
  json j;
  j["n"] = alg.n();
  j["p"] = alg.p();
  j["deg"] = alg.field()->degree();
  j["modulus"] = alg.field()->modulus();
  return j;
}

}  // namespace jw::structure
