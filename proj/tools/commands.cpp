#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "output.hpp"

namespace surfel::cli {

using nlohmann::json;

namespace {

json surface_json(const SurfaceParams& s) {
  return {{"mu0", s.mu0}, {"lambda0", s.lambda0}, {"sigma0", s.sigma0},
          {"chi0", s.chi0}, {"zeta0", s.zeta0}};
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

bool pure_shear(const Scenario& s) {
  return s.sigma_h == 0.0 && s.general.s11 == 0.0 && s.general.s22 == 0.0 && s.general.s12 == 0.0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") out << content;
  else write_atomic(path, content);
}

std::string fmt_e(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

json parameters_json(const Scenario& s) {
  json j;
  j["geometry"] = s.shape == Shape::disk ? "disk" : "sphere";
  j["model"] = model_name(s.model);
  j["matrix"] = {{"mu", s.matrix.mu}, {"nu", s.matrix.nu}};
  j["inhomogeneity"] = {{"mu", s.inhom.mu}, {"nu", s.inhom.nu}, {"cavity", s.cavity}};
  j["interface"] = surface_json(s.surf);
  j["load"] = {{"shear", s.sigma_d}, {"hydrostatic", s.sigma_h}};
  if (s.shape == Shape::disk)
    j["load"]["general"] = {{"s11", s.general.s11}, {"s22", s.general.s22}, {"s12", s.general.s12}};
  j["units"] = {{"stress", "matrix shear modulus"}, {"length", "R"}};
  if (s.mu_Pa > 0.0) j["units"]["mu_Pa"] = s.mu_Pa;
  if (s.R_m > 0.0) j["units"]["R_m"] = s.R_m;
  return j;
}

json solve_report(const Scenario& s) {
  json j;
  j["scenario"] = s.source;
  j["parameters"] = parameters_json(s);
  if (s.shape == Shape::disk) {
    const DiskProblem p = s.disk();
    const Coeff2D c = solve_general_2d(p);
    j["coefficients"] = {{"ReA1", c.reA1},     {"A_-1", complex_json(c.Am1)},
                         {"A_3", complex_json(c.A3)}, {"Delta1", c.delta1},
                         {"Delta2", c.delta2}, {"omega0", c.omega0},
                         {"omega1", c.omega1}, {"omega2", c.omega2}};
    if (pure_shear(s) && p.inhom.mu > 0.0) {
      const ChristensenLoCoeff2D cl = cl_coefficients(c, p);
      j["christensen_lo"] = {{"d1", cl.d1}, {"a1", cl.a1}, {"a3", cl.a3}, {"c3", cl.c3}};
    }
    if (s.sigma_h != 0.0) {
      const HydroCoeff h = solve_hydro_2d(p, s.sigma_h);
      j["hydrostatic"] = {{"F1", h.F1}, {"F2", h.F2}, {"F3", h.F3}};
    }
  } else {
    const SphereProblem p = s.sphere();
    const Coeff3D c = solve_sphere(p, s.model);
    j["coefficients"] = {{"A0", c.A0}, {"A1", c.A1}, {"A2", c.A2}, {"D0", c.D0},
                         {"D1", c.D1}, {"D3", c.D3}, {"D4", c.D4}, {"E", c.E}};
    if (s.sigma_h != 0.0) {
      const HydroCoeff h = solve_hydro_3d(p, s.sigma_h);
      j["hydrostatic"] = {{"F1", h.F1}, {"F2", h.F2}, {"F3", h.F3}};
    }
  }
  return j;
}

Coeff2D disk_coefficients_from(const json& j) {
  Coeff2D c;
  c.reA1 = j.at("ReA1").get<double>();
  c.Am1 = complex_from(j.at("A_-1"));
  c.A3 = complex_from(j.at("A_3"));
  c.delta1 = j.at("Delta1").get<double>();
  c.delta2 = j.at("Delta2").get<double>();
  c.omega0 = j.at("omega0").get<double>();
  c.omega1 = j.at("omega1").get<double>();
  c.omega2 = j.at("omega2").get<double>();
  return c;
}

Coeff3D sphere_coefficients_from(const json& j) {
  Coeff3D c;
  c.A0 = j.at("A0").get<double>();
  c.A1 = j.at("A1").get<double>();
  c.A2 = j.at("A2").get<double>();
  c.D0 = j.at("D0").get<double>();
  c.D1 = j.at("D1").get<double>();
  c.D3 = j.at("D3").get<double>();
  c.D4 = j.at("D4").get<double>();
  c.E = j.value("E", 0.0);
  return c;
}

Table field_grid(const Scenario& s) {
  Table t;
  const auto rs = s.grid.r.values(), ts = s.grid.theta.values();
  if (s.shape == Shape::disk) {
    const DiskProblem p = s.disk();
    const Coeff2D c = solve_general_2d(p);
    t.header = {"r (R)",         "theta (rad)",      "u_r (R)",          "u_theta (R)",
                "sigma_rr (mu)", "sigma_tt (mu)",    "sigma_rt (mu)"};
    for (double r : rs) {
      if (s.cavity && r < 1.0) continue;
      for (double th : ts) {
        const PolarVec u = displacement_2d(c, p, r, th);
        const PolarStress st = stress_2d(c, p, r, th);
        t.rows.push_back({r, th, u.ur, u.ut, st.rr, st.tt, st.rt});
      }
    }
    return t;
  }
  const SphereProblem p = s.sphere();
  const Coeff3D c = solve_sphere(p, s.model);
  const auto ps = s.grid.phi.values();
  t.header = {"r (R)",         "theta (rad)",   "phi (rad)",     "u_r (R)",
              "u_theta (R)",   "u_phi (R)",     "sigma_rr (mu)", "sigma_tt (mu)",
              "sigma_pp (mu)", "sigma_rt (mu)", "sigma_rp (mu)", "sigma_tp (mu)"};
  for (double r : rs) {
    if (s.cavity && r < 1.0) continue;
    const Side sd = side_of(r, 1.0);
    for (double th : ts)
      for (double ph : ps) {
        const SphVec u = displacement_3d(c, p, r, th, ph, sd);
        const SphStress st = stress_3d(c, p, r, th, ph, sd);
        t.rows.push_back({r, th, ph, u.r, u.t, u.p, st.rr, st.tt, st.pp, st.rt, st.rp, st.tp});
      }
  }
  return t;
}

CheckReport verify_scenario(const Scenario& s, const std::optional<json>& coefficients) {
  if (s.shape == Shape::disk) {
    const DiskProblem p = s.disk();
    const Coeff2D c = coefficients ? disk_coefficients_from(*coefficients) : solve_general_2d(p);
    return check_disk(s.source, p, c);
  }
  const SphereProblem p = s.sphere();
  const Coeff3D c = coefficients ? sphere_coefficients_from(*coefficients) : solve_sphere(p, s.model);
  return check_sphere(s.source, p, s.model, c);
}

std::vector<CheckReport> builtin_suite() {
  std::vector<CheckReport> reps;
  auto disk = [&](const std::string& name, BulkMaterial inh, SurfaceParams surf, FarField2D load) {
    DiskProblem p;
    p.inhom = inh;
    p.surf = surf;
    p.load = load;
    reps.push_back(check_disk(name, p, solve_general_2d(p)));
  };
  auto sphere = [&](const std::string& name, const SphereProblem& p, InterfaceModel m) {
    reps.push_back(check_sphere(name, p, m, solve_sphere(p, m)));
  };
  namespace cc = cavity_case;
  const BulkMaterial cavity{0.0, 0.3};

  disk("disk: classical, homogeneous, general load", {1.0, 0.3}, {}, {0.3, -0.1, 0.2});
  disk("disk: classical inhomogeneity, general load", {3.0, 0.25}, {}, {0.2, 0.1, 0.05});
  disk("disk: GM inhomogeneity, general load", {0.5, 0.2}, {0.05, 0.08, 0.01, 0.0, 0.0},
       {0.2, -0.3, 0.1});
  disk("disk: SO cavity, shear + hydrostatic", cavity,
       with_gamma({cc::mu0, cc::lambda0, cc::tension[1], 0.0, 0.0}, cc::gamma, 1.0),
       {cc::shear_load + 1e-5, -cc::shear_load + 1e-5, 0.0});

  SphereProblem bare = cc::problem(0.0, 0.0);
  bare.surf = {};
  sphere("sphere: classical cavity", bare, InterfaceModel::classical);
  sphere("sphere: GM cavity, sigma0/muR=" + tension_label(cc::tension[2]),
         cc::problem(cc::tension[2], 0.0), InterfaceModel::gm);
  for (double s0 : cc::tension)
    sphere("sphere: SO cavity, sigma0/muR=" + tension_label(s0), cc::problem(s0, cc::gamma),
           InterfaceModel::so);
  SphereProblem gen;
  gen.inhom = {2.0, 0.2};
  gen.surf = {0.03, 0.05, 0.01, 1e-4, 2e-4};
  gen.sigma_d = 0.3;
  gen.sigma_h = 0.1;
  sphere("sphere: SO inhomogeneity, shear + hydrostatic", gen, InterfaceModel::so);
  return reps;
}

json reports_json(const std::vector<CheckReport>& reps) {
  json j;
  bool all = true;
  j["scenarios"] = json::array();
  for (const CheckReport& r : reps) {
    json s;
    s["name"] = r.scenario;
    s["pass"] = r.pass();
    s["checks"] = json::array();
    for (const Check& c : r.checks)
      s["checks"].push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound},
                             {"pass", c.pass()}});
    all = all && r.pass();
    j["scenarios"].push_back(s);
  }
  j["pass"] = all;
  return j;
}

void print_reports(const std::vector<CheckReport>& reps, std::ostream& out) {
  int n = 0, passed = 0;
  for (const CheckReport& r : reps) {
    out << r.scenario << '\n';
    for (const Check& c : r.checks) {
      ++n;
      passed += c.pass();
      out << "  " << (c.pass() ? "PASS" : "FAIL") << "  " << c.name << ": " << fmt_e(c.value)
          << " (bound " << fmt_e(c.bound) << ")\n";
    }
  }
  out << (passed == n ? "all checks passed" : "verification FAILED") << " (" << passed << '/' << n
      << ")\n";
}

int run_solve(const std::string& file, const std::string& out_path, const std::string& grid_path,
              std::ostream& out, std::ostream& err) {
  Scenario s;
  try {
    s = parse_scenario_file(file);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  try {
    const json rep = solve_report(s);
    if (out_path.empty()) {
      out << rep.dump(2) << '\n';
    } else {
      write_atomic(out_path, rep.dump(2) + "\n");
      out << "solved " << (s.shape == Shape::disk ? "disk" : "sphere") << " ("
          << model_name(s.model) << ") -> " << out_path << '\n';
    }
    if (!grid_path.empty()) {
      if (!s.grid.present) {
        err << "error: " << file << ": grid: --grid-out needs a 'grid' section\n";
        return invalid_input;
      }
      write_atomic(grid_path, to_csv(field_grid(s)));
    }
  } catch (const DegenerateSystem& e) {
    err << "degenerate system: " << e.what() << "\nparameters: " << parameters_json(s).dump(2)
        << '\n';
    return degenerate;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  return ok;
}

int run_figure(const std::string& id, const std::string& out_path, int points, std::ostream& out,
               std::ostream& err) {
  try {
    if (points != 0 && points < 2) throw InvalidInput("--points must be at least 2");
    emit(out_path, to_csv(figure(id, points)), out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const DegenerateSystem& e) {
    err << "degenerate system: " << e.what() << '\n';
    return degenerate;
  }
  return ok;
}

int run_verify(const std::string& file, bool builtin, const std::string& coefficients_path,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (builtin == !file.empty()) {
    err << "error: verify needs either a scenario file or --builtin\n";
    return invalid_input;
  }
  if (builtin && !coefficients_path.empty()) {
    err << "error: --coefficients applies to a scenario file, not --builtin\n";
    return invalid_input;
  }
  std::vector<CheckReport> reps;
  try {
    if (builtin) {
      reps = builtin_suite();
    } else {
      const Scenario s = parse_scenario_file(file);
      std::optional<json> coeffs;
      if (!coefficients_path.empty()) {
        const json j = json::parse(read_file(coefficients_path));
        coeffs = j.contains("coefficients") ? j.at("coefficients") : j;
      }
      reps.push_back(verify_scenario(s, coeffs));
    }
  } catch (const json::exception& e) {
    err << "error: " << coefficients_path << ": " << e.what() << '\n';
    return invalid_input;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const DegenerateSystem& e) {
    err << "degenerate system: " << e.what() << '\n';
    return degenerate;
  }
  print_reports(reps, out);
  const json j = reports_json(reps);
  if (!out_path.empty()) write_atomic(out_path, j.dump(2) + "\n");
  return j["pass"].get<bool>() ? ok : verification_failed;
}

}  // namespace surfel::cli
