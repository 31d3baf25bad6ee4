#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "icosa/cubic.hpp"
#include "icosa/golden.hpp"
#include "icosa/invariant_classify.hpp"
#include "icosa/nodal_mesh.hpp"
#include "icosa/pi_scalar.hpp"
#include "icosa/rational.hpp"
#include "icosa/search_so3.hpp"

namespace icosa {

using Json = nlohmann::json;

/// A cubic in one of the three scalar modes of the file format.
using AnyCubic = std::variant<Cubic<Rational>, Cubic<Golden>, Cubic<double>>;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const Golden& g) {
  return Json{{"a", to_string(g.a())}, {"b", to_string(g.b())}};
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational as integer or string, got " + j.dump());
}

inline Golden golden_from_json(const Json& j) {
  if (j.is_object())
    return Golden(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
  return Golden(rational_from_json(j));
}

template <typename S>
Json to_json(const PiScalar<S>& x) {
  return Json{{"coeff", to_json(x.coeff())},
              {"pi_power", x.pi_power()},
              {"approx", x.to_double()}};
}

/// {"scalar": "rational"|"golden"|"double", "coeffs": [10 entries]} in the
/// fixed monomial order.
inline Json cubic_to_json(const AnyCubic& c) {
  Json out;
  Json coeffs = Json::array();
  std::visit(
      [&](const auto& cubic) {
        using S = std::decay_t<decltype(cubic.coeffs[0])>;
        if constexpr (std::is_same_v<S, Rational>) {
          out["scalar"] = "rational";
          for (auto& v : cubic.coeffs) coeffs.push_back(to_string(v));
        } else if constexpr (std::is_same_v<S, Golden>) {
          out["scalar"] = "golden";
          for (auto& v : cubic.coeffs) coeffs.push_back(to_json(v));
        } else {
          out["scalar"] = "double";
          for (auto& v : cubic.coeffs) coeffs.push_back(v);
        }
      },
      c);
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline AnyCubic cubic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("scalar") || !j.contains("coeffs"))
    throw std::invalid_argument("cubic file must have 'scalar' and 'coeffs' fields");
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != 10)
    throw std::invalid_argument("'coeffs' must be an array of 10 entries, got " +
                                std::to_string(coeffs.size()));
  std::string mode = j.at("scalar").get<std::string>();
  if (mode == "rational") {
    Cubic<Rational> c;
    for (int i = 0; i < 10; ++i) c.coeffs[i] = rational_from_json(coeffs[i]);
    return c;
  }
  if (mode == "golden") {
    Cubic<Golden> c;
    for (int i = 0; i < 10; ++i) c.coeffs[i] = golden_from_json(coeffs[i]);
    return c;
  }
  if (mode == "double") {
    Cubic<double> c;
    for (int i = 0; i < 10; ++i) c.coeffs[i] = coeffs[i].get<double>();
    return c;
  }
  throw std::invalid_argument("unknown scalar mode '" + mode + "'");
}

inline Json to_json(const Quat& q) { return Json{q.w, q.x, q.y, q.z}; }

inline Json to_json(const FoundIcosahedron& s) {
  Json axes = Json::array();
  for (auto& a : s.axes) axes.push_back(Json{a[0], a[1], a[2]});
  return Json{{"rotation", to_json(s.rotation)},
              {"axes", std::move(axes)},
              {"max_residual", s.max_residual}};
}

inline Json to_json(const SearchOutcome& o) {
  Json found = Json::array();
  for (auto& s : o.icosahedra) found.push_back(to_json(s));
  Json out{{"icosahedra", std::move(found)},
           {"starts_used", o.starts_used},
           {"converged_count", o.converged_count}};
  if (o.family) {
    Json samples = Json::array();
    for (auto& s : o.family->samples) samples.push_back(to_json(s));
    out["family"] = Json{{"common_axis", Json{o.family->common_axis[0],
                                              o.family->common_axis[1],
                                              o.family->common_axis[2]}},
                         {"samples", std::move(samples)}};
  }
  return out;
}

inline Json to_json(const ClassificationReport& r) {
  Json out{{"J", r.j.J},
           {"sign", r.exact_sign_available ? r.exact_sign : r.j.sign},
           {"normalized_J", r.j.normalized_J},
           {"predicted", to_string(r.predicted)},
           {"found", to_json(r.search)},
           {"consistent", r.consistent},
           {"flags", r.flags}};
  if (r.exact_sign_available) out["exact_sign"] = r.exact_sign;
  if (r.special_form) {
    out["special_form"] = Json{
        {"a", Json{r.special_form->a[0], r.special_form->a[1], r.special_form->a[2]}},
        {"u", Json{r.special_form->u[0], r.special_form->u[1], r.special_form->u[2]}},
        {"scale", r.special_form->scale},
        {"residual", r.special_form->residual}};
  }
  return out;
}

inline Json to_json(const NodalMesh& m) {
  Json vertices = Json::array(), segments = Json::array(), markers = Json::array();
  for (auto& v : m.vertices) vertices.push_back(Json{v[0], v[1], v[2]});
  for (auto& s : m.segments) segments.push_back(Json{s.first, s.second});
  for (auto& v : m.markers) markers.push_back(Json{v[0], v[1], v[2]});
  return Json{{"vertices", std::move(vertices)},
              {"segments", std::move(segments)},
              {"markers", std::move(markers)}};
}

/// OBJ export: v lines and l (polyline) lines, 1-based indices.
inline std::string mesh_to_obj(const NodalMesh& m) {
  std::ostringstream os;
  os.precision(17);
  for (auto& v : m.vertices) os << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (auto& s : m.segments) os << "l " << s.first + 1 << " " << s.second + 1 << "\n";
  return os.str();
}

}  // namespace icosa
