#pragma once

// JSON formats shared by the library and the CLI:
//   polytope          {"vertices": [["p/q", ...], ...]}
//   point set         {"points": [[int, ...], ...], "dim": d}
//   complex value     {"re": "...", "im": "...", "prec_bits": N}
//   coefficient table {"moduli": [k...], "prec_bits": N, "values": [{"re","im"}, ...]}  (row-major)

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ipt/exact.hpp"
#include "ipt/finite_fourier.hpp"
#include "ipt/point_set.hpp"
#include "ipt/polytope.hpp"
#include "ipt/precision.hpp"

namespace ipt {

using json = nlohmann::json;

/// Malformed input document (as opposed to a domain error on valid input).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int output_digits(long prec_bits) { return static_cast<int>(std::max<long>(prec_bits / 3, 1)); }

inline json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational string or an integer, got " + j.dump());
}

inline RatVector rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline json to_json(const RationalPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return json{{"vertices", verts}};
}

inline RationalPolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw FormatError("polytope JSON needs a nonempty \"vertices\" array");
  std::vector<RatVector> pts;
  for (const auto& v : j["vertices"]) pts.push_back(rational_vector_from_json(v));
  for (const auto& p : pts)
    if (p.size() != pts.front().size()) throw FormatError("vertices of mixed dimension");
  return convex_hull(pts);
}

inline json to_json(const IntPointSet& s) {
  json pts = json::array();
  for (const auto& p : s) pts.push_back(p);
  return json{{"dim", s.dim()}, {"points", pts}};
}

inline IntPointSet points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw FormatError("point set JSON needs a \"points\" array");
  std::vector<IntPoint> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array()) throw FormatError("each point must be an array of integers");
    IntPoint q;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw FormatError("point coordinates must be integers");
      q.push_back(x.get<std::int64_t>());
    }
    pts.push_back(std::move(q));
  }
  std::size_t dim = 0;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_unsigned()) throw FormatError("\"dim\" must be a nonnegative integer");
    dim = j["dim"].get<std::size_t>();
  } else if (!pts.empty()) {
    dim = pts.front().size();
  } else {
    throw FormatError("an empty point set needs an explicit \"dim\"");
  }
  try {
    return IntPointSet(dim, std::move(pts));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const PrecComplex& z) {
  int digits = output_digits(z.prec_bits());
  return json{{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}, {"prec_bits", z.prec_bits()}};
}

inline PrecComplex complex_from_json(const json& j, std::optional<long> prec_override = std::nullopt) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw FormatError("complex JSON needs \"re\" and \"im\"");
  long prec = prec_override.value_or(j.value("prec_bits", kDefaultPrecBits));
  if (prec < kMinPrecBits) throw FormatError("prec_bits below 64");
  try {
    return {Real(j["re"].get<std::string>(), prec), Real(j["im"].get<std::string>(), prec), prec};
  } catch (const Error& e) {
    throw FormatError(e.what());
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const CoefficientTable& t) {
  json values = json::array();
  int digits = output_digits(t.prec_bits);
  for (const auto& c : t.values)
    values.push_back(json{{"re", c.re().to_string(digits)}, {"im", c.im().to_string(digits)}});
  return json{{"moduli", t.group.moduli()}, {"prec_bits", t.prec_bits}, {"values", values}};
}

inline CoefficientTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("moduli") || !j.contains("values") || !j["values"].is_array())
    throw FormatError("coefficient table JSON needs \"moduli\" and \"values\"");
  long prec = j.value("prec_bits", kDefaultPrecBits);
  if (prec < kMinPrecBits) throw FormatError("prec_bits below 64");
  std::vector<long> moduli;
  for (const auto& k : j["moduli"]) {
    if (!k.is_number_integer()) throw FormatError("moduli must be integers");
    moduli.push_back(k.get<long>());
  }
  try {
    CoefficientTable t{GroupSpec(moduli), {}, prec};
    if (j["values"].size() != t.group.order())
      throw FormatError("table has " + std::to_string(j["values"].size()) + " values for a group of order " +
                        std::to_string(t.group.order()));
    for (const auto& v : j["values"]) t.values.push_back(complex_from_json(v, prec));
    return t;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

/// Comma-separated exact coordinates: "1/2,1/2,1/2" or "0.25,-3".
inline RatVector parse_xi(const std::string& text) {
  RatVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw FormatError(e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ipt
