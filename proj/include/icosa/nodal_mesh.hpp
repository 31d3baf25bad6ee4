#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icosa/cubic.hpp"

namespace icosa {

/// Polyline approximation of the nodal set {f = 0} on the unit sphere,
/// extracted by marching squares on a latitude-longitude grid. Vertices
/// are unit vectors refined by bisection along grid arcs.
struct NodalMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::pair<int, int>> segments;
  std::vector<std::array<double, 3>> markers;  // e.g. icosahedron vertices
};

namespace detail {

inline std::array<double, 3> sph(double theta, double phi) {
  double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

inline std::array<double, 3> normalize3(std::array<double, 3> v) {
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& c : v) c /= n;
  return v;
}

/// Root on the great-circle chord between a and b (f changes sign),
/// bisected until the parameter bracket collapses.
inline std::array<double, 3> bisect_zero(const Cubic<double>& f,
                                         std::array<double, 3> a,
                                         std::array<double, 3> b) {
  double fa = f.evaluate(a);
  for (int it = 0; it < 60; ++it) {
    std::array<double, 3> mid =
        normalize3({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2});
    double fm = f.evaluate(mid);
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return normalize3({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2});
}

struct CellWalker {
  const Cubic<double>& f;
  NodalMesh& mesh;

  /// Marching squares on one spherical quad; ambiguous (4-crossing) cells
  /// are subdivided once.
  void cell(double t0, double t1, double p0, double p1, int depth) {
    std::array<std::array<double, 3>, 4> corner = {sph(t0, p0), sph(t0, p1),
                                                   sph(t1, p1), sph(t1, p0)};
    std::array<double, 4> val;
    int neg = 0;
    for (int i = 0; i < 4; ++i) {
      val[i] = f.evaluate(corner[i]);
      if (val[i] < 0) ++neg;
    }
    if (neg == 0 || neg == 4) return;
    std::vector<int> crossing;
    for (int e = 0; e < 4; ++e)
      if ((val[e] < 0) != (val[(e + 1) % 4] < 0)) crossing.push_back(e);
    if (crossing.size() == 4 && depth == 0) {
      double tm = (t0 + t1) / 2, pm = (p0 + p1) / 2;
      cell(t0, tm, p0, pm, 1);
      cell(t0, tm, pm, p1, 1);
      cell(tm, t1, p0, pm, 1);
      cell(tm, t1, pm, p1, 1);
      return;
    }
    std::vector<int> ids;
    for (int e : crossing) {
      auto v = bisect_zero(f, corner[e], corner[(e + 1) % 4]);
      ids.push_back(static_cast<int>(mesh.vertices.size()));
      mesh.vertices.push_back(v);
    }
    for (std::size_t k = 0; k + 1 < ids.size(); k += 2)
      mesh.segments.emplace_back(ids[k], ids[k + 1]);
  }
};

}  // namespace detail

inline NodalMesh nodal_mesh(const Cubic<double>& f, int resolution) {
  if (f.is_zero()) throw std::invalid_argument("nodal_mesh: zero cubic");
  if (resolution < 4) throw std::invalid_argument("nodal_mesh: resolution < 4");
  NodalMesh mesh;
  detail::CellWalker walker{f, mesh};
  int nt = resolution, np = 2 * resolution;
  for (int i = 0; i < nt; ++i) {
    double t0 = M_PI * i / nt, t1 = M_PI * (i + 1) / nt;
    for (int j = 0; j < np; ++j) {
      double p0 = 2 * M_PI * j / np, p1 = 2 * M_PI * (j + 1) / np;
      walker.cell(t0, t1, p0, p1, 0);
    }
  }
  return mesh;
}

}  // namespace icosa
