#pragma once

#include <json.hpp>

#include "jw/witt/witt.hpp"

// Canonical JSON forms. Printing is canonical; parsing accepts any term order
// but rejects duplicates and malformed documents with ErrorKind::Parse.
namespace jw::io {

using json = nlohmann::ordered_json;
using witt::WittElement;
using witt::WittPtr;

/// {"p": int, "deg": int, "modulus": [ascending coefficients]}
json field_to_json(const gf::Field& f);
gf::FieldPtr field_from_json(const json& j);

/// Ascending coefficient list of length deg.
json elem_to_json(const gf::Field& f, gf::Elem a);
/// Accepts 1..deg coefficients, each in 0..p-1.
gf::Elem elem_from_json(const gf::Field& f, const json& j);

/// [{"alpha": [...], "c": [...]}, ...] sorted by alpha.
json poly_to_json(const trunc::TruncPoly& f);
trunc::TruncPoly poly_from_json(const trunc::TruncPtr& alg, const json& j);

/// {"field": ..., "n": int, "terms": [{"alpha": [...], "d": int, "c": [...]}, ...]}
json element_to_json(const WittElement& x);
/// Terms only, without the field and n header.
json terms_to_json(const WittElement& x);
/// The document's field and n must describe `alg`, otherwise DescriptorMismatch.
WittElement element_from_json(const WittPtr& alg, const json& j);
/// Builds the algebra from the document header.
WittElement element_from_json(const json& j, std::size_t dim_cap = witt::kDefaultDimCap);

/// Parses text, mapping syntax errors to ErrorKind::Parse.
json parse_text(std::string_view text);
json read_file(const std::string& path);

}  // namespace jw::io
