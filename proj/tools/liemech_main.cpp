#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <thread>

#include "liemech/cohomology.hpp"
#include "liemech/geodesic.hpp"
#include "liemech/io.hpp"
#include "liemech/json_io.hpp"
#include "liemech/moment.hpp"
#include "liemech/reconstruction.hpp"
#include "liemech/roots.hpp"

namespace {

using namespace liemech;
using nlohmann::json;

Vec vec_from_json(const json& j) {
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j.at(i).get<double>();
  return v;
}

Mat mat_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  return m;
}

json parse_json_arg(const std::string& text) { return json::parse(text); }

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// ---------------------------------------------------------------- roots ---

int run_roots(const std::string& family, int rank, const std::string& format,
              const std::string& out_path) {
  if (family.size() != 1)
    throw CLI::ValidationError("--family must be a single letter A, B, C or D");
  RootSystem rs = build_root_system(family_from_char(family[0]), rank);
  Eigen::MatrixXi cm = cartan_matrix(rs);
  DynkinDiagram dd = dynkin(rs);

  if (format == "text") {
    std::ostringstream os;
    os << family_char(rs.family) << "_" << rs.rank << ": |roots| = "
       << rs.roots.size() << ", |positive| = " << rs.positive.size()
       << ", |simple| = " << rs.simple.size() << "\n";
    os << "simple roots:\n";
    for (size_t i = 0; i < rs.simple.size(); ++i) {
      os << "  beta_" << i << " = " << rs.labels[rs.simple[i]] << " = [";
      const auto& r = rs.roots[rs.simple[i]];
      for (size_t c = 0; c < r.size(); ++c) os << (c ? " " : "") << r[c].str();
      os << "]\n";
    }
    os << "cartan matrix:\n";
    for (int i = 0; i < cm.rows(); ++i) {
      os << " ";
      for (int j = 0; j < cm.cols(); ++j) os << " " << cm(i, j);
      os << "\n";
    }
    os << "dynkin:\n" << render_text(dd);
    emit(out_path, os.str());
  } else if (format == "json") {
    json j;
    j["family"] = std::string(1, family_char(rs.family));
    j["rank"] = rs.rank;
    json roots = json::array();
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      json r;
      r["label"] = rs.labels[i];
      json coords = json::array();
      for (const Rational& c : rs.roots[i]) coords.push_back(c.str());
      r["coords"] = coords;
      json expansion = json::array();
      for (long long e : simple_root_expansion(rs, static_cast<int>(i)))
        expansion.push_back(e);
      r["simple_expansion"] = expansion;
      roots.push_back(r);
    }
    j["roots"] = roots;
    j["positive"] = rs.positive;
    j["simple"] = rs.simple;
    json gram = json::array();
    for (const auto& row : rs.gram) {
      json r = json::array();
      for (const Rational& x : row) r.push_back(x.str());
      gram.push_back(r);
    }
    j["gram"] = gram;
    json cmj = json::array();
    for (int i = 0; i < cm.rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < cm.cols(); ++c) row.push_back(cm(i, c));
      cmj.push_back(row);
    }
    j["cartan_matrix"] = cmj;
    json edges = json::array();
    for (const auto& e : dd.edges) {
      json ej;
      ej["i"] = e.i;
      ej["j"] = e.j;
      ej["multiplicity"] = e.multiplicity;
      if (e.arrow_to) ej["arrow_to"] = *e.arrow_to;
      edges.push_back(ej);
    }
    j["dynkin"] = {{"nodes", dd.nodes}, {"edges", edges}};
    emit(out_path, j.dump(2) + "\n");
  } else if (format == "dot") {
    emit(out_path, render_dot(dd));
  } else {
    throw CLI::ValidationError("--format must be text, json or dot");
  }
  return 0;
}

// ----------------------------------------------------------- cohomology ---

int run_cohomology(const std::string& algebra, int degree, bool witness,
                   const std::string& out_path) {
  if (degree != 0 && degree != 1 && degree != 2)
    throw CLI::ValidationError("--degree must be 1 or 2");
  LieAlgebra g = algebra_by_name(algebra);
  CeComplex ce(g);
  std::ostringstream os;
  if (degree == 0 || degree == 1) os << "h1 = " << ce.h1_dim() << "\n";
  if (degree == 0 || degree == 2) os << "h2 = " << ce.h2_dim() << "\n";
  if (witness) {
    json j;
    j["algebra"] = g.name();
    j["h1"] = ce.h1_dim();
    j["h2"] = ce.h2_dim();
    json ws = json::array();
    for (const Mat& w : ce.h2_witnesses()) {
      json m = json::array();
      for (int i = 0; i < w.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < w.cols(); ++c) row.push_back(w(i, c));
        m.push_back(row);
      }
      ws.push_back(m);
    }
    j["h2_witnesses"] = ws;
    os << j.dump(2) << "\n";
  }
  emit(out_path, os.str());
  return 0;
}

// ------------------------------------------------------------- simulate ---

struct ModelSetup {
  LieAlgebra g;
  CollectiveHamiltonian h;
  Vec mu0;
  std::vector<std::string> state_names;
};

ModelSetup make_model(const std::string& model, const json& params,
                      const json& mu0_json) {
  if (model == "rigid-body") {
    auto iv = params.at("I");
    RigidBodyParams I(iv.at(0).get<double>(), iv.at(1).get<double>(),
                      iv.at(2).get<double>());
    ModelSetup m{so3(), rigid_body_hamiltonian(I), vec_from_json(mu0_json),
                 {"mu1", "mu2", "mu3"}};
    if (m.mu0.size() != 3)
      throw std::invalid_argument("rigid-body mu0 must have 3 components");
    return m;
  }
  if (model == "heavy-top") {
    auto iv = params.at("I");
    RigidBodyParams I(iv.at(0).get<double>(), iv.at(1).get<double>(),
                      iv.at(2).get<double>());
    Eigen::Vector3d chi = vec_from_json(params.at("chi"));
    ModelSetup m{heavy_top3(), heavy_top_hamiltonian(I, chi),
                 vec_from_json(mu0_json),
                 {"mu1", "mu2", "mu3", "gamma1", "gamma2", "gamma3"}};
    if (m.mu0.size() != 6)
      throw std::invalid_argument("heavy-top mu0 must have 6 components");
    return m;
  }
  throw std::invalid_argument("unknown model '" + model +
                              "' (rigid-body or heavy-top)");
}

int run_simulate(const std::string& model, const std::string& params_text,
                 const std::string& mu0_text, double T, double dt,
                 const std::string& method, const std::string& out_path) {
  ModelSetup m =
      make_model(model, parse_json_arg(params_text), parse_json_arg(mu0_text));
  IntegratorConfig cfg;
  cfg.dt = dt;
  if (method == "rk4")
    cfg.method = Method::Rk4;
  else if (method == "midpoint")
    cfg.method = Method::ImplicitMidpoint;
  else
    throw CLI::ValidationError("--method must be rk4 or midpoint");

  std::vector<Observer> obs;
  obs.emplace_back("energy",
                   [&m](double, const Vec& x) { return m.h.value(x); });
  CasimirSet cs = casimirs(m.g, m.mu0);
  for (size_t i = 0; i < cs.names.size(); ++i)
    obs.emplace_back(cs.names[i], [&m, i](double, const Vec& x) {
      return casimirs(m.g, x).values[i];
    });

  auto rhs = [&m](double, const Vec& x) { return lie_poisson_rhs(m.g, m.h, x); };
  Trajectory traj = integrate(rhs, m.mu0, T, cfg, obs);
  if (out_path.empty())
    throw CLI::ValidationError("simulate requires --out");
  write_trajectory_csv(out_path, traj, m.state_names);
  std::cout << "wrote " << traj.states.size() << " samples to " << out_path
            << "\n";
  return 0;
}

// ---------------------------------------------------------- reconstruct ---

int run_reconstruct(const std::string& model, const std::string& a0_text,
                    const std::string& mu0_text, const std::string& I_text,
                    double T, double dt, const std::string& out_path) {
  if (model != "rigid-body")
    throw std::invalid_argument("reconstruct supports --model rigid-body");
  Mat a0 = mat_from_json(parse_json_arg(a0_text));
  Vec mu0 = vec_from_json(parse_json_arg(mu0_text));
  LieAlgebra g = so3();
  g.check_membership(a0);

  json iv = parse_json_arg(I_text);
  RigidBodyParams I(iv.at(0).get<double>(), iv.at(1).get<double>(),
                    iv.at(2).get<double>());
  CollectiveHamiltonian h = rigid_body_hamiltonian(I);
  IntegratorConfig cfg;
  cfg.dt = dt;
  ReconstructionResult rr =
      reconstruct_collective(g, h, ChartPoint{GroupElement{a0}, mu0}, T, cfg);

  std::vector<std::string> header = {"t"};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      header.push_back("a" + std::to_string(r + 1) + std::to_string(c + 1));
  header.insert(header.end(), {"mu1", "mu2", "mu3", "momentum_residual",
                               "energy"});
  std::vector<std::vector<double>> rows;
  for (size_t k = 0; k < rr.mu_slot.size(); ++k) {
    std::vector<double> row = {rr.t0 + static_cast<double>(k) * rr.dt};
    const Mat& a = rr.group_slot.samples[k];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) row.push_back(a(r, c));
    for (int i = 0; i < 3; ++i) row.push_back(rr.mu_slot[k][i]);
    row.push_back(rr.momentum_residual[k]);
    row.push_back(rr.energy[k]);
    rows.push_back(std::move(row));
  }
  if (out_path.empty())
    throw CLI::ValidationError("reconstruct requires --out");
  write_csv(out_path, header, rows);
  std::cout << "wrote " << rows.size() << " samples to " << out_path << "\n";
  return 0;
}

// ------------------------------------------------------------ orbit-dim ---

int run_orbit_dim(const std::string& algebra, const std::string& point_text) {
  LieAlgebra g = algebra_by_name(algebra);
  json pj = parse_json_arg(point_text);
  Vec F;
  if (pj.is_array()) {
    F = vec_from_json(pj);
  } else if (g.name() == "cm3" && pj.contains("alpha")) {
    F = cm3_dual_point(pj.at("alpha").get<double>(),
                       pj.at("beta").get<double>());
  } else if (g.name() == "poincare" && pj.contains("p0")) {
    auto getv = [&](const char* key) -> Eigen::Vector3d {
      if (!pj.contains(key)) return Eigen::Vector3d::Zero();
      return vec_from_json(pj.at(key));
    };
    F = poincare_dual_coords(pj.at("p0").get<double>(), getv("p"),
                             getv("kappa"), getv("s"));
  } else {
    throw std::invalid_argument(
        "--point must be a coordinate array, {alpha, beta} for cm3, or "
        "{p0, p, kappa, s} for poincare");
  }
  std::cout << orbit_dimension(g, F) << "\n";
  return 0;
}

// ----------------------------------------------------------------- scan ---

int run_scan(const std::string& model, double r, const std::string& I_text,
             int jobs, int grid, int samples, const std::string& out_path) {
  if (model != "rigid-body")
    throw std::invalid_argument("scan supports --model rigid-body");
  json iv = parse_json_arg(I_text);
  RigidBodyParams I(iv.at(0).get<double>(), iv.at(1).get<double>(),
                    iv.at(2).get<double>());
  auto bif = bifurcation_values(I, r);
  std::cout << "bifurcation_values " << format_double(bif[0]) << " "
            << format_double(bif[1]) << " " << format_double(bif[2]) << "\n";

  // energy grid plus e +- eps brackets around each bifurcation value
  if (samples < 2) throw CLI::ValidationError("--samples must be at least 2");
  std::vector<double> energies;
  const double eps = 1e-3;
  const double lo = 0.5 * bif[0], hi = 1.1 * bif[2];
  for (int i = 0; i < samples; ++i)
    energies.push_back(lo + (hi - lo) * i / (samples - 1));
  for (double e : bif) {
    energies.push_back(e - eps);
    energies.push_back(e);
    energies.push_back(e + eps);
  }
  std::sort(energies.begin(), energies.end());

  SphereLevelCounter counter(I, r, grid);
  std::vector<int> counts(energies.size(), 0);
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < energies.size();
           i = next.fetch_add(1))
        counts[i] = counter.count(energies[i]);
    });
  for (auto& th : pool) th.join();

  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < energies.size(); ++i)
    rows.push_back({energies[i], static_cast<double>(counts[i])});
  if (!out_path.empty())
    write_csv(out_path, {"E", "components"}, rows);
  else
    for (const auto& row : rows)
      std::cout << format_double(row[0]) << "," << format_double(row[1])
                << "\n";
  return 0;
}

// ------------------------------------------------------- geodesic-check ---

int run_geodesic_check(const std::string& inertia_text,
                       const std::string& omega0_text, double T, double dt,
                       const std::string& out_path) {
  json iv = parse_json_arg(inertia_text);
  RigidBodyParams I(iv.at(0).get<double>(), iv.at(1).get<double>(),
                    iv.at(2).get<double>());
  Eigen::Vector3d w0 = vec_from_json(parse_json_arg(omega0_text));
  GeodesicReport rep = geodesic_check(I, w0, T, dt);
  json j;
  j["T"] = rep.T;
  j["dt"] = rep.dt;
  j["dev_euler_vs_christoffel"] = rep.dev_euler_vs_christoffel;
  j["dev_factor2_vs_euler"] = rep.dev_factor2_vs_euler;
  emit(out_path, j.dump(2) + "\n");
  return 0;
}

// --------------------------------------------------------------- moment ---

int run_moment_check(const std::string& group, int samples, unsigned seed) {
  LieAlgebra g = algebra_by_name(group);
  double r_ll = equivariance_residual(g, ActionKind::Lambda, MomentKind::Left,
                                      samples, seed);
  double r_rr = equivariance_residual(g, ActionKind::Rho, MomentKind::Right,
                                      samples, seed);
  std::cout << "lambda/J_left residual = " << format_double(r_ll) << "\n";
  std::cout << "rho/J_right residual = " << format_double(r_rr) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liemech: Lie algebras, momentum maps, root systems and "
               "Lie-Poisson dynamics"};
  app.require_subcommand(1);

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "classical root systems");
  std::string family = "A", format = "text", out_path;
  int rank = 2;
  roots_cmd->add_option("--family", family, "A, B, C or D")->required();
  roots_cmd->add_option("--rank", rank, "rank n >= 1")->required();
  roots_cmd->add_option("--format", format, "text|json|dot");
  roots_cmd->add_option("--out", out_path, "output file (default stdout)");

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology",
                                     "Chevalley-Eilenberg H^1 and H^2");
  std::string coh_algebra;
  int degree = 0;
  bool witness = false;
  std::string coh_out;
  coh_cmd->add_option("--algebra", coh_algebra, "builder name or .json file")
      ->required();
  coh_cmd->add_option("--degree", degree, "1 or 2 (default both)");
  coh_cmd->add_flag("--witness", witness, "emit representative cocycles");
  coh_cmd->add_option("--out", coh_out, "output file (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Lie-Poisson dynamics");
  std::string sim_model = "rigid-body", sim_params, sim_mu0, sim_method = "rk4",
              sim_out;
  double sim_T = 1.0, sim_dt = 1e-3;
  sim_cmd->add_option("--model", sim_model, "rigid-body|heavy-top")->required();
  sim_cmd->add_option("--params", sim_params, "model parameters (JSON)")
      ->required();
  sim_cmd->add_option("--mu0", sim_mu0, "initial point (JSON array)")
      ->required();
  sim_cmd->add_option("--T", sim_T, "duration")->required();
  sim_cmd->add_option("--dt", sim_dt, "time step")->required();
  sim_cmd->add_option("--method", sim_method, "rk4|midpoint");
  sim_cmd->add_option("--out", sim_out, "CSV output path")->required();

  // reconstruct
  auto* rec_cmd = app.add_subcommand("reconstruct",
                                     "full trajectory from reduced dynamics");
  std::string rec_model = "rigid-body", rec_a0, rec_mu0, rec_out;
  std::string rec_I = "[3,2,1]";
  double rec_T = 1.0, rec_dt = 1e-3;
  rec_cmd->add_option("--model", rec_model, "rigid-body")->required();
  rec_cmd->add_option("--a0", rec_a0, "initial group element (JSON 3x3)")
      ->required();
  rec_cmd->add_option("--mu0", rec_mu0, "initial mu (JSON array)")->required();
  rec_cmd->add_option("--params", rec_I, "inertia (JSON array)");
  rec_cmd->add_option("--T", rec_T, "duration")->required();
  rec_cmd->add_option("--dt", rec_dt, "time step")->required();
  rec_cmd->add_option("--out", rec_out, "CSV output path")->required();

  // orbit-dim
  auto* orb_cmd = app.add_subcommand("orbit-dim", "coadjoint orbit dimension");
  std::string orb_algebra, orb_point;
  orb_cmd->add_option("--algebra", orb_algebra, "builder name or .json file")
      ->required();
  orb_cmd->add_option("--point", orb_point, "dual point (JSON)")->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "bifurcation scan");
  std::string scan_model = "rigid-body", scan_I = "[3,2,1]", scan_out;
  double scan_r = 1.0;
  int scan_jobs = 1, scan_grid = 400, scan_samples = 25;
  scan_cmd->add_option("--model", scan_model, "rigid-body")->required();
  scan_cmd->add_option("--r", scan_r, "orbit radius")->required();
  scan_cmd->add_option("--I", scan_I, "inertia (JSON array)");
  scan_cmd->add_option("--jobs", scan_jobs, "parallel workers");
  scan_cmd->add_option("--grid", scan_grid, "sphere grid resolution");
  scan_cmd->add_option("--samples", scan_samples, "energy samples");
  scan_cmd->add_option("--out", scan_out, "CSV output path");

  // geodesic-check
  auto* geo_cmd = app.add_subcommand("geodesic-check",
                                     "Euler equations vs geodesic motion");
  std::string geo_I, geo_w0, geo_out;
  double geo_T = 1.0, geo_dt = 1e-3;
  geo_cmd->add_option("--inertia", geo_I, "inertia (JSON array)")->required();
  geo_cmd->add_option("--omega0", geo_w0, "initial lab angular velocity")
      ->required();
  geo_cmd->add_option("--T", geo_T, "duration")->required();
  geo_cmd->add_option("--dt", geo_dt, "time step")->required();
  geo_cmd->add_option("--out", geo_out, "output file (default stdout)");

  // moment check
  auto* mom_cmd = app.add_subcommand("moment", "momentum map checks");
  auto* mom_check = mom_cmd->add_subcommand("check", "equivariance residuals");
  std::string mom_group = "so3";
  int mom_samples = 100;
  unsigned mom_seed = 0;
  mom_check->add_option("--group", mom_group, "builder name")->required();
  mom_check->add_option("--samples", mom_samples, "sample count");
  mom_check->add_option("--seed", mom_seed, "RNG seed");
  mom_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (app.got_subcommand(roots_cmd))
      return run_roots(family, rank, format, out_path);
    if (app.got_subcommand(coh_cmd))
      return run_cohomology(coh_algebra, degree, witness, coh_out);
    if (app.got_subcommand(sim_cmd))
      return run_simulate(sim_model, sim_params, sim_mu0, sim_T, sim_dt,
                          sim_method, sim_out);
    if (app.got_subcommand(rec_cmd))
      return run_reconstruct(rec_model, rec_a0, rec_mu0, rec_I, rec_T, rec_dt,
                             rec_out);
    if (app.got_subcommand(orb_cmd)) return run_orbit_dim(orb_algebra, orb_point);
    if (app.got_subcommand(scan_cmd))
      return run_scan(scan_model, scan_r, scan_I, scan_jobs, scan_grid,
                      scan_samples, scan_out);
    if (app.got_subcommand(geo_cmd))
      return run_geodesic_check(geo_I, geo_w0, geo_T, geo_dt, geo_out);
    if (app.got_subcommand(mom_cmd))
      return run_moment_check(mom_group, mom_samples, mom_seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
