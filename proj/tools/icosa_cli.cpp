// Command-line surface of the icosa library: classification by the J
// invariant, icosahedron search, exact verification suites, basis dumps,
// nodal meshes, and reproducible random harmonic cubics.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icosa/icosa_geometry.hpp"
#include "icosa/invariant_classify.hpp"
#include "icosa/json_io.hpp"
#include "icosa/nodal_mesh.hpp"
#include "icosa/skew_pfaffian.hpp"

namespace {

using namespace icosa;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

AnyCubic load_cubic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
  return cubic_from_json(j);
}

Cubic<double> as_double(const AnyCubic& c) {
  return std::visit([](const auto& cubic) { return cubic.template cast<double>(); }, c);
}

struct CheckPrinter {
  bool all_ok = true;
  void operator()(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    all_ok = all_ok && ok;
  }
};

std::string golden_vec(const Vec3<Golden>& v) {
  std::ostringstream os;
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

template <typename S>
std::string fit_string(const std::vector<S>& coeffs, const std::vector<std::string>& basis) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << " + ";
    os << "(" << coeffs[i] << ")*" << basis[i];
  }
  return os.str();
}

int run_verify_appendix(CheckPrinter& check) {
  auto group = build_group();
  auto qs = q_basis(group);
  auto axes = face_axes(group);
  auto rep = appendix_verify(group, qs, axes);

  check("lambda = 4*pi/315", rep.lambda == PiRational(Rational(4, 315), 1));
  check("mu = 0", rep.mu == PiGolden());
  check("nu = -3*lambda/4 = -pi/105", rep.nu == PiGolden(Golden(Rational(-1, 105)), 1));
  check("pair integral decomposition exact", rep.mu_nu_exact);
  check("c_3/c_4 = 9", c_constant(3).coeff() / c_constant(4).coeff() == Rational(9));
  check("face-axis inner-product squares {5/9 x15, 1/9 x30}", rep.inner_products_ok);
  check("triple product -1/27", rep.triple_product == Golden(Rational(-1, 27)));
  check("anchor M_app(y(q1)) = -(4/15) I", rep.anchor_ok);
  check("normalized S = -8 s2 I - 3 M_app, tr = -30 s2", rep.normalized_s_ok);

  check("tr M fit", rep.tr_m.fit_consistent,
        fit_string(rep.tr_m.coeffs, {"s2"}) +
            (rep.tr_m.matches_printed ? " [matches reference]" : " [DIFFERS from reference]"));
  check("tr M^2 fit", rep.tr_m2.fit_consistent,
        fit_string(rep.tr_m2.coeffs, {"s2^2", "s4"}) +
            (rep.tr_m2.matches_printed ? " [matches reference]" : " [DIFFERS from reference]"));
  check("tr M^3 fit", rep.tr_m3.fit_consistent,
        fit_string(rep.tr_m3.coeffs, {"s2^3", "s2*s4", "s3^2"}) +
            (rep.tr_m3.matches_printed ? " [matches reference]" : " [DIFFERS from reference]"));
  check("3 tau3 - 4 tau1 tau2 fit", rep.identity.fit_consistent,
        fit_string(rep.identity.coeffs, {"s2^3", "s2*s4", "s3^2"}) +
            (rep.identity.matches_printed ? " [matches reference]" : " [DIFFERS from reference]"));
  return check.all_ok ? kExitOk : kExitInconsistent;
}

int run_verify_clebsch(CheckPrinter& check, int samples) {
  auto group = build_group();
  auto qs = q_basis(group);
  Cubic<Golden> sum;
  Poly<Golden> cubes;
  for (auto& q : qs.q) {
    sum += q;
    Poly<Golden> p = q.to_poly();
    cubes += p * p * p;
  }
  check("sum of q_alpha = 0", sum.is_zero());
  check("sum of q_alpha^3 = 0", cubes.is_zero());

  auto ico = standard_icosahedron();
  bool rho_zero = true;
  for (auto& a : ico.axes) rho_zero = rho_zero && clebsch_rho(a, qs).is_zero();
  check("rho vanishes on all six axes", rho_zero);

  auto v_basis = vanishing_space(ico);
  std::vector<std::vector<Golden>> rows;
  for (auto& c : v_basis) rows.emplace_back(c.coeffs.begin(), c.coeffs.end());
  for (auto& q : qs.q) rows.emplace_back(q.coeffs.begin(), q.coeffs.end());
  check("vanishing space has dim 4 and equals span{q}",
        v_basis.size() == 4 && span_rank(rows) == 4);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  bool all_on_surface = true;
  int tested = 0;
  while (tested < samples) {
    Vec3<Golden> u{Golden(coord(rng)), Golden(coord(rng)), Golden(coord(rng))};
    auto r = clebsch_rho(u, qs);
    if (r.is_zero()) continue;
    auto sc = sigma_coords(r, qs);
    all_on_surface = all_on_surface && sc.sigma3 == Golden(0);
    ++tested;
  }
  check("rho(u) lies on the Clebsch surface (sigma3 = 0), " +
            std::to_string(samples) + " samples",
        all_on_surface);
  return check.all_ok ? kExitOk : kExitInconsistent;
}

int run_verify_pfaffian(CheckPrinter& check, int samples) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto rand_rat = [&] { return Rational(num(rng), den(rng)); };

  bool pf_sq = true;
  for (int trial = 0; trial < samples; ++trial) {
    Matrix<Rational> m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        m(i, j) = rand_rat();
        m(j, i) = -m(i, j);
      }
    Rational pf = pfaffian(m);
    pf_sq = pf_sq && pf * pf == m.determinant();
  }
  check("Pf^2 = det on random skew 6x6, " + std::to_string(samples) + " samples", pf_sq);

  bool rank6 = true, prop = true;
  auto h = standard_h_basis<Rational>();
  auto hs = make_subspace(h.elements);
  int done = 0;
  while (done < samples) {
    Vec3<Rational> u{rand_rat(), rand_rat(), rand_rat()};
    if (u[0] == 0 && u[1] == 0 && u[2] == 0) continue;
    Matrix<Rational> m = omega_matrix(u, hs).entries;
    auto kernel = m.nullspace();
    rank6 = rank6 && m.rank() == 6 && kernel.size() == 1;
    Cubic<Rational> k;
    for (int i = 0; i < 7; ++i) k += kernel[0][i] * h.elements[i];
    rank6 = rank6 && cubics_proportional(k, axis_harmonic(u));

    Cubic<Rational> p;
    for (auto& c : p.coeffs) c = rand_rat();
    p = harmonic_projection(p);
    if (p.is_zero()) continue;
    prop = prop && cubics_proportional(pfaffian_cubic(p), p);
    ++done;
  }
  check("rank omega_u|H = 6 with kernel f_u", rank6);
  check("pfaffian_cubic(p) proportional to p", prop);

  auto ico = standard_icosahedron();
  std::vector<Cubic<Golden>> gens;
  for (auto& a : ico.axes) gens.push_back(axis_harmonic(a));
  std::vector<std::vector<Golden>> rows;
  for (auto& g : gens) rows.emplace_back(g.coeffs.begin(), g.coeffs.end());
  auto x = make_subspace(std::vector<Cubic<Golden>>{gens[0], gens[2], gens[4]});
  check("icosahedral axis-harmonic span has rank 3 and is isotropic",
        span_rank(rows) == 3 && isotropic_check(x).isotropic);
  return check.all_ok ? kExitOk : kExitInconsistent;
}

std::optional<Quat> parse_quat(const std::string& text) {
  Quat q;
  char c1, c2, c3;
  std::istringstream is(text);
  if (!(is >> q.w >> c1 >> q.x >> c2 >> q.y >> c3 >> q.z)) return std::nullopt;
  if (c1 != ',' || c2 != ',' || c3 != ',') return std::nullopt;
  if (q.norm() == 0) return std::nullopt;
  q.normalize();
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic cubics, the J invariant, and inscribed icosahedra"};
  app.require_subcommand(1);

  std::string file, out_path, obj_path, rotation_text, verify_what;
  int starts = 512, resolution = 64, samples = 20;
  double tol = 1e-9;
  std::uint64_t seed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a cubic by J and search");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--starts", starts);
  classify_cmd->add_option("--tol", tol);
  classify_cmd->add_option("--seed", seed);

  auto* search_cmd = app.add_subcommand("search", "Enumerate inscribed icosahedra");
  search_cmd->add_option("file", file)->required();
  search_cmd->add_option("--starts", starts);
  search_cmd->add_option("--tol", tol);
  search_cmd->add_option("--seed", seed);

  auto* verify_cmd = app.add_subcommand("verify", "Run exact verification suites");
  verify_cmd->add_option("what", verify_what)
      ->required()
      ->check(CLI::IsMember({"appendix", "clebsch", "pfaffian", "all"}));
  verify_cmd->add_option("--samples", samples);

  auto* basis_cmd = app.add_subcommand("basis", "Print icosahedron data");
  std::string basis_what;
  basis_cmd->add_option("what", basis_what)->required()->check(CLI::IsMember({"icosahedron"}));
  basis_cmd->add_option("--rotation", rotation_text, "quaternion w,x,y,z");

  auto* mesh_cmd = app.add_subcommand("nodal-mesh", "Extract the nodal set as polylines");
  mesh_cmd->add_option("file", file)->required();
  mesh_cmd->add_option("--resolution", resolution);
  mesh_cmd->add_option("-o,--output", out_path)->required();
  mesh_cmd->add_option("--obj", obj_path);

  auto* rand_cmd = app.add_subcommand("random-harmonic", "Sample a random harmonic cubic");
  rand_cmd->add_option("--seed", seed);
  rand_cmd->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd || *search_cmd) {
      AnyCubic any = load_cubic(file);
      SearchConfig cfg;
      cfg.starts = starts;
      cfg.accept_tol = tol;
      cfg.seed = seed;
      if (*search_cmd) {
        auto outcome = find_icosahedra(as_double(any), cfg);
        Json j = to_json(outcome);
        j["seed"] = seed;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }
      ClassificationReport rep;
      if (std::holds_alternative<Cubic<double>>(any)) {
        rep = classify(std::get<Cubic<double>>(any), cfg);
      } else if (std::holds_alternative<Cubic<Rational>>(any)) {
        rep = classify_exact(std::get<Cubic<Rational>>(any), cfg);
      } else {
        rep = classify_exact(std::get<Cubic<Golden>>(any), cfg);
      }
      Json j = to_json(rep);
      j["seed"] = seed;
      std::cout << j.dump(2) << "\n";
      return rep.consistent ? kExitOk : kExitInconsistent;
    }

    if (*verify_cmd) {
      CheckPrinter check;
      int code = kExitOk;
      if (verify_what == "appendix" || verify_what == "all")
        code = std::max(code, run_verify_appendix(check));
      if (verify_what == "clebsch" || verify_what == "all")
        code = std::max(code, run_verify_clebsch(check, samples));
      if (verify_what == "pfaffian" || verify_what == "all")
        code = std::max(code, run_verify_pfaffian(check, samples));
      return code;
    }

    if (*basis_cmd) {
      auto ico = standard_icosahedron();
      Json axes = Json::array();
      std::optional<Quat> rot;
      if (!rotation_text.empty()) {
        rot = parse_quat(rotation_text);
        if (!rot) {
          std::cerr << "error: --rotation expects 'w,x,y,z'\n";
          return kExitUsage;
        }
      }
      for (auto& a : ico.axes) {
        Json entry;
        entry["exact"] = golden_vec(a);
        std::array<double, 3> v{a[0].to_double(), a[1].to_double(), a[2].to_double()};
        if (rot) {
          Mat3d r = quat_to_matrix(*rot);
          std::array<double, 3> w{};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) w[i] += r[i][j] * v[j];
          v = w;
          entry.erase("exact");
        }
        entry["value"] = Json{v[0], v[1], v[2]};
        axes.push_back(entry);
      }
      Json out{{"axes", std::move(axes)}};
      if (rot) out["rotation"] = to_json(*rot);
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*mesh_cmd) {
      AnyCubic any = load_cubic(file);
      Cubic<double> f = as_double(any);
      NodalMesh mesh = nodal_mesh(f, resolution);
      // Mark the vertices of every inscribed icosahedron.
      auto outcome = find_icosahedra(f);
      for (auto& sol : outcome.icosahedra)
        for (auto& a : sol.axes) {
          mesh.markers.push_back(a);
          mesh.markers.push_back({-a[0], -a[1], -a[2]});
        }
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
      out << to_json(mesh).dump(2) << "\n";
      if (!obj_path.empty()) {
        std::ofstream obj(obj_path);
        if (!obj) throw std::invalid_argument("cannot write '" + obj_path + "'");
        obj << mesh_to_obj(mesh);
      }
      std::cout << "mesh: " << mesh.vertices.size() << " vertices, "
                << mesh.segments.size() << " segments, " << mesh.markers.size()
                << " markers -> " << out_path << "\n";
      return kExitOk;
    }

    if (*rand_cmd) {
      // Gaussian coefficients in an orthonormalized basis of H.
      auto h = standard_h_basis<double>();
      std::vector<Cubic<double>> ortho;
      for (std::size_t i = 0; i < h.elements.size(); ++i) {
        Cubic<double> e = h.elements[i];
        for (auto& prev : ortho) e -= bombieri_inner(e, prev) * prev;
        e *= 1.0 / std::sqrt(bombieri_norm_sq(e));
        ortho.push_back(e);
      }
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> gauss(0, 1);
      Cubic<double> f;
      for (auto& e : ortho) f += gauss(rng) * e;
      Json j = cubic_to_json(AnyCubic{f});
      j["seed"] = seed;
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
      out << j.dump(2) << "\n";
      std::cout << "wrote " << out_path << " (seed " << seed << ")\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}
