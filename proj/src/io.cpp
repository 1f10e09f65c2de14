#include "tensor3/io.hpp"

#include <charconv>
#include <cmath>

namespace t3::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) invalid(path + ": expected a number, got " + std::string(j.type_name()));
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(path + ": non-finite value");
  return v;
}

void expect_array(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) invalid(path + ": expected an array, got " + std::string(j.type_name()));
  if (j.size() != n) {
    invalid(path + ": expected " + std::to_string(n) + " elements, got " + std::to_string(j.size()));
  }
}

template <std::size_t N>
json array_json(const std::array<double, N>& a) {
  json out = json::array();
  for (double v : a) out.push_back(v);
  return out;
}

}  // namespace

TensorFile tensor_from_json(const json& j) {
  if (!j.is_object()) invalid("tensor file: expected a JSON object");
  for (const char* key : {"dim", "order", "entries"}) {
    if (!j.contains(key)) invalid(std::string("tensor file: missing field '") + key + "'");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() != 3) invalid("dim: must be 3");
  if (!j["order"].is_number_integer() || j["order"].get<long long>() != 3) invalid("order: must be 3");

  const json& e = j["entries"];
  expect_array(e, 3, "entries");
  std::array<double, 27> a;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string pi = "entries[" + std::to_string(i) + "]";
    expect_array(e[i], 3, pi);
    for (std::size_t jj = 0; jj < 3; ++jj) {
      const std::string pj = pi + "[" + std::to_string(jj) + "]";
      expect_array(e[i][jj], 3, pj);
      for (std::size_t k = 0; k < 3; ++k) {
        a[9 * i + 3 * jj + k] = number_at(e[i][jj][k], pj + "[" + std::to_string(k) + "]");
      }
    }
  }
  TensorFile f{Hyper3(a), std::nullopt};
  if (j.contains("name")) {
    if (!j["name"].is_string()) invalid("name: expected a string");
    f.name = j["name"].get<std::string>();
  }
  return f;
}

TensorFile parse_tensor_file(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(ex.byte > 0 ? ex.byte - 1 : 0, text.size());
    for (std::size_t n = 0; n < stop; ++n) {
      if (text[n] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    invalid("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return tensor_from_json(j);
}

json to_json(const Hyper3& a, const std::optional<std::string>& name) {
  json entries = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < 3; ++j) plane.push_back({a(i, j, 0), a(i, j, 1), a(i, j, 2)});
    entries.push_back(plane);
  }
  json out = {{"dim", 3}, {"order", 3}, {"entries", entries}};
  if (name) out["name"] = *name;
  return out;
}

json to_json(const Vec3& v) { return array_json(v.array()); }

json to_json(const Mat3& m) {
  json out = json::array();
  for (std::size_t i = 0; i < 3; ++i) out.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return out;
}

Mat3 mat3_from_json(const json& j) {
  expect_array(j, 3, "matrix");
  std::array<double, 9> a;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string pi = "matrix[" + std::to_string(i) + "]";
    expect_array(j[i], 3, pi);
    for (std::size_t k = 0; k < 3; ++k) a[3 * i + k] = number_at(j[i][k], pi + "[" + std::to_string(k) + "]");
  }
  return Mat3(a);
}

json to_json(const SymmetryReport& r) {
  return {{"right_symmetric", r.right_symmetric},
          {"left_symmetric", r.left_symmetric},
          {"centrally_symmetric", r.centrally_symmetric},
          {"partially_symmetric", r.partially_symmetric},
          {"symmetric", r.symmetric},
          {"cyclically_symmetric", r.cyclically_symmetric},
          {"right_anti", r.right_anti},
          {"left_anti", r.left_anti},
          {"centrally_anti", r.centrally_anti},
          {"totally_anti", r.totally_anti},
          {"traceless", r.traceless},
          {"selectively_right", r.selectively_right},
          {"selectively_left", r.selectively_left},
          {"tol", r.tol}};
}

json to_json(const LEigenSystem& s) {
  json x = json::array(), v = json::array();
  for (std::size_t j = 0; j < 3; ++j) {
    x.push_back(to_json(s.x[j]));
    v.push_back(to_json(s.v[j]));
  }
  return {{"sigma", array_json(s.sigma)}, {"x", x}, {"V", v}};
}

std::string_view to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::Singular: return "singular";
    case CriticalKind::CEigen: return "c_eigen";
    case CriticalKind::ZEigen: return "z_eigen";
  }
  return "unknown";
}

std::string_view to_string(PartialSide s) {
  switch (s) {
    case PartialSide::Right: return "right";
    case PartialSide::Left: return "left";
    case PartialSide::Central: return "central";
  }
  return "unknown";
}

json to_json(const EigDecomposition3& d) {
  json lambda = json::array(), x = json::array(), y = json::array();
  for (std::size_t j = 0; j < 3; ++j) {
    lambda.push_back(array_json(d.lambda[j]));
    x.push_back(to_json(d.x[j]));
    json yj = json::array();
    for (std::size_t k = 0; k < 3; ++k) yj.push_back(to_json(d.y[j][k]));
    y.push_back(yj);
  }
  return {{"side", to_string(d.side)}, {"sigma", array_json(d.sigma)}, {"lambda", lambda},
          {"x", x}, {"y", y}, {"max_asymmetry", d.max_asymmetry}};
}

json to_json(const CriticalTriple& t) {
  return {{"kind", to_string(t.kind)}, {"value", t.value},      {"x", to_json(t.x)},
          {"y", to_json(t.y)},         {"z", to_json(t.z)},     {"residual", t.residual},
          {"starts_converged", t.starts_converged}};
}

json to_json(const InvariantSet& s) {
  return {{"trU", s.tr_u},         {"trU2", s.tr_u2},       {"trU3", s.tr_u3},
          {"trUbar2", s.tr_ubar2}, {"trUbar3", s.tr_ubar3}, {"trUhat2", s.tr_uhat2},
          {"trUhat3", s.tr_uhat3}};
}

json to_json(const InverseResiduals& r) {
  return {{"identity", r.identity},
          {"oplus", r.oplus},
          {"moore_penrose", array_json(r.moore_penrose)}};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace t3::io
