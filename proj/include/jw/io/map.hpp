#pragma once

#include "jw/io/json.hpp"
#include "jw/twolocal/twolocal.hpp"

namespace jw::io {

/// {"config": {"field": ..., "n": int}, "rule": str (optional),
///  "pairs": [{"x": <element>, "fx": <element>}, ...]}
json map_to_json(const twolocal::PointwiseMap& m);
/// Builds the algebra from "config"; every element must match it.
twolocal::PointwiseMap map_from_json(const json& j, std::size_t dim_cap = witt::kDefaultDimCap);

}  // namespace jw::io
