#pragma once

// JSON forms of tensors and reports.
//
// Tensor file: {"dim": 3, "order": 3, "entries": [[[...]]], "name": "..."}
// with a_ijk at entries[i][j][k]; all 27 values are required. Unknown keys
// are ignored, so report objects that embed the three required keys can be
// read back as tensors.

#include <istream>
#include <optional>
#include <string>

#include <json.hpp>

#include "tensor3/spectral.hpp"
#include "tensor3/symmetry.hpp"
#include "tensor3/types.hpp"
#include "tensor3/varspec.hpp"

namespace t3::io {

using json = nlohmann::json;

struct TensorFile {
  Hyper3 tensor;
  std::optional<std::string> name;
};

/// Throws Error(InvalidInput) naming the offending field.
TensorFile tensor_from_json(const json& j);
/// Parses text; syntax errors report the line and column.
TensorFile parse_tensor_file(std::istream& in);

json to_json(const Hyper3& a, const std::optional<std::string>& name = std::nullopt);
json to_json(const Vec3& v);
json to_json(const Mat3& m);  // nested 3x3, row-major
Mat3 mat3_from_json(const json& j);

json to_json(const SymmetryReport& r);
json to_json(const LEigenSystem& s);
json to_json(const EigDecomposition3& d);
json to_json(const CriticalTriple& t);
json to_json(const InvariantSet& s);
json to_json(const InverseResiduals& r);

std::string_view to_string(CriticalKind k);
std::string_view to_string(PartialSide s);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

}  // namespace t3::io
