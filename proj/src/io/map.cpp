#include "jw/io/map.hpp"

namespace jw::io {

json map_to_json(const twolocal::PointwiseMap& m) {
  const auto& alg = *m.algebra();
  json j;
  j["config"] = {{"field", field_to_json(*alg.field())}, {"n", alg.n()}};
  if (m.rule()) j["rule"] = *m.rule();
  json pairs = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    pairs.push_back({{"x", element_to_json(m.domain()[i])}, {"fx", element_to_json(m.images()[i])}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

twolocal::PointwiseMap map_from_json(const json& j, std::size_t dim_cap) {
  if (!j.is_object() || !j.contains("config") || !j.contains("pairs")) {
    throw Error(ErrorKind::Parse, "map needs \"config\" and \"pairs\"");
  }
  const auto& config = j.at("config");
  const auto header = element_from_json(json{{"field", config.at("field")}, {"n", config.at("n")}, {"terms", json::array()}},
                                        dim_cap);
  const auto& alg = header.algebra();
  const auto& pairs = j.at("pairs");
  if (!pairs.is_array()) throw Error(ErrorKind::Parse, "\"pairs\" must be an array");
  std::vector<witt::WittElement> domain, images;
  for (const auto& p : pairs) {
    if (!p.is_object() || !p.contains("x") || !p.contains("fx")) {
      throw Error(ErrorKind::Parse, "each pair needs \"x\" and \"fx\"");
    }
    domain.push_back(element_from_json(alg, p.at("x")));
    images.push_back(element_from_json(alg, p.at("fx")));
  }
  std::optional<std::string> rule;
  if (const auto it = j.find("rule"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorKind::Parse, "\"rule\" must be a string");
    rule = it->get<std::string>();
  }
  try {
    return twolocal::PointwiseMap(alg, std::move(domain), std::move(images), std::move(rule));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadParam) throw Error(ErrorKind::Parse, e.what());
    throw;
  }
}

}  // namespace jw::io
