#include "scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace surfel::cli {

std::vector<double> Range::values() const {
  if (count == 1) return {start};
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) v[i] = start + (stop - start) * i / (count - 1);
  return v;
}

DiskProblem Scenario::disk() const {
  DiskProblem p;
  p.matrix = matrix;
  p.inhom = inhom;
  p.surf = surf;
  p.load = {general.s11 + sigma_d + sigma_h, general.s22 - sigma_d + sigma_h, general.s12};
  return p;
}

SphereProblem Scenario::sphere() const {
  SphereProblem p;
  p.matrix = matrix;
  p.inhom = inhom;
  p.surf = surf;
  p.sigma_d = sigma_d;
  p.sigma_h = sigma_h;
  return p;
}

std::string model_name(InterfaceModel m) {
  switch (m) {
    case InterfaceModel::classical: return "classical";
    case InterfaceModel::gm: return "GM";
    case InterfaceModel::so: return "SO";
  }
  return "?";
}

namespace {

enum class Dim { none, stress, length, surface, bending };

struct UnitDef {
  Dim dim;
  double si;
};

const std::map<std::string, UnitDef>& unit_table() {
  static const std::map<std::string, UnitDef> t{
      {"Pa", {Dim::stress, 1.0}},      {"kPa", {Dim::stress, 1e3}},
      {"MPa", {Dim::stress, 1e6}},     {"GPa", {Dim::stress, 1e9}},
      {"m", {Dim::length, 1.0}},       {"mm", {Dim::length, 1e-3}},
      {"um", {Dim::length, 1e-6}},     {"nm", {Dim::length, 1e-9}},
      {"N/m", {Dim::surface, 1.0}},    {"mN/m", {Dim::surface, 1e-3}},
      {"J/m^2", {Dim::surface, 1.0}},  {"N*m", {Dim::bending, 1.0}},
      {"J", {Dim::bending, 1.0}},      {"nN*nm", {Dim::bending, 1e-18}},
  };
  return t;
}

const char* dim_hint(Dim d) {
  switch (d) {
    case Dim::stress: return "a stress (Pa, kPa, MPa, GPa)";
    case Dim::length: return "a length (m, mm, um, nm)";
    case Dim::surface: return "a surface stiffness or tension (N/m, mN/m, J/m^2)";
    case Dim::bending: return "a bending stiffness (N*m, J, nN*nm)";
    case Dim::none: return "a dimensionless number";
  }
  return "";
}

struct Quantity {
  double value = 0.0;  // in SI when has_unit, as written otherwise
  bool has_unit = false;
};

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& n, const std::string& path,
                         const std::string& msg) const {
    std::ostringstream os;
    os << source_;
    const YAML::Mark m = n.Mark();
    if (m.line >= 0) os << ':' << m.line + 1 << ':' << m.column + 1;
    os << ": " << path << ": " << msg;
    throw ScenarioError(os.str());
  }

  void only_keys(const YAML::Node& map, const std::string& path,
                 const std::set<std::string>& allowed) const {
    if (!map.IsMap()) fail(map, path, "expected a mapping");
    for (const auto& kv : map) {
      const std::string k = kv.first.as<std::string>();
      if (!allowed.count(k)) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        fail(kv.first, path.empty() ? k : path + "." + k, "unknown key (allowed: " + list + ")");
      }
    }
  }

  std::string text(const YAML::Node& n, const std::string& path) const {
    if (!n.IsScalar()) fail(n, path, "expected a scalar value");
    return n.Scalar();
  }

  Quantity quantity(const YAML::Node& n, const std::string& path, Dim dim) const {
    const std::string s = text(n, path);
    const char* b = s.data();
    const char* e = b + s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    if (b < e && *b == '+') ++b;
    double v = 0.0;
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p == b) fail(n, path, "expected a number, got '" + s + "'");
    if (!std::isfinite(v)) fail(n, path, "value must be finite");
    std::string unit(p, e);
    unit.erase(std::remove_if(unit.begin(), unit.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               unit.end());
    if (unit.empty()) return {v, false};
    const auto it = unit_table().find(unit);
    if (it == unit_table().end() || it->second.dim != dim)
      fail(n, path, "unit '" + unit + "' does not fit; expected " + dim_hint(dim));
    return {v * it->second.si, true};
  }

  double number(const YAML::Node& n, const std::string& path) const {
    const Quantity q = quantity(n, path, Dim::none);
    return q.value;
  }

  int integer(const YAML::Node& n, const std::string& path) const {
    const std::string s = text(n, path);
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(n, path, "expected an integer");
    return v;
  }

 private:
  std::string source_;
};

struct Scales {
  double mu_Pa = 0.0;
  double R_m = 0.0;
};

double normalize(const Reader& rd, const YAML::Node& n, const std::string& path, Dim dim,
                 const Scales& sc) {
  const Quantity q = rd.quantity(n, path, dim);
  if (!q.has_unit) return q.value;
  const bool need_R = dim == Dim::surface || dim == Dim::bending || dim == Dim::length;
  if (sc.mu_Pa == 0.0 && dim != Dim::length)
    rd.fail(n, path, "dimensional value needs matrix.mu with a stress unit");
  if (need_R && sc.R_m == 0.0) rd.fail(n, path, "dimensional value needs radius with a length unit");
  switch (dim) {
    case Dim::stress: return q.value / sc.mu_Pa;
    case Dim::length: return q.value / sc.R_m;
    case Dim::surface: return q.value / (sc.mu_Pa * sc.R_m);
    case Dim::bending: return q.value / (sc.mu_Pa * sc.R_m * sc.R_m * sc.R_m);
    case Dim::none: break;
  }
  return q.value;
}

Range read_range(const Reader& rd, const YAML::Node& n, const std::string& path, bool positive) {
  if (!n.IsSequence() || n.size() != 3) rd.fail(n, path, "expected [start, stop, count]");
  Range r{rd.number(n[0], path + "[0]"), rd.number(n[1], path + "[1]"),
          rd.integer(n[2], path + "[2]")};
  if (r.count < 1 || r.count > 100000) rd.fail(n[2], path + "[2]", "count must lie in [1, 100000]");
  if (positive && (r.start <= 0.0 || r.stop <= 0.0))
    rd.fail(n, path, "radii must be > 0 (units of R)");
  return r;
}

void read_material(const Reader& rd, const YAML::Node& n, const std::string& path,
                   BulkMaterial& m, const Scales& sc, bool is_matrix) {
  rd.only_keys(n, path, {"mu", "nu"});
  if (!n["nu"]) rd.fail(n, path, "missing key 'nu'");
  m.nu = rd.number(n["nu"], path + ".nu");
  if (!(m.nu > -1.0 && m.nu < 0.5)) rd.fail(n["nu"], path + ".nu", "must lie in (-1, 0.5)");
  if (is_matrix) {
    m.mu = 1.0;
    return;
  }
  if (!n["mu"]) rd.fail(n, path, "missing key 'mu'");
  m.mu = normalize(rd, n["mu"], path + ".mu", Dim::stress, sc);
  if (!(m.mu >= 0.0)) rd.fail(n["mu"], path + ".mu", "must be >= 0");
}

InterfaceModel read_model(const Reader& rd, const YAML::Node& n, const std::string& path) {
  std::string s = rd.text(n, path);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "classical") return InterfaceModel::classical;
  if (s == "gm") return InterfaceModel::gm;
  if (s == "so") return InterfaceModel::so;
  rd.fail(n, path, "expected classical, GM or SO");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& source) {
  const Reader rd(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    std::ostringstream os;
    os << source << ':' << e.mark.line + 1 << ':' << e.mark.column + 1 << ": syntax: " << e.msg;
    throw ScenarioError(os.str());
  }
  if (!root.IsMap()) rd.fail(root, "(root)", "expected a mapping");
  rd.only_keys(root, "", {"schema_version", "geometry", "radius", "matrix", "inhomogeneity",
                          "interface", "load", "grid"});

  Scenario s;
  s.source = source;
  if (!root["schema_version"]) rd.fail(root, "schema_version", "missing (this reader knows 1)");
  if (rd.integer(root["schema_version"], "schema_version") != 1)
    rd.fail(root["schema_version"], "schema_version", "unsupported version (this reader knows 1)");

  if (!root["geometry"]) rd.fail(root, "geometry", "missing (disk or sphere)");
  const std::string geo = rd.text(root["geometry"], "geometry");
  if (geo == "disk") s.shape = Shape::disk;
  else if (geo == "sphere") s.shape = Shape::sphere;
  else rd.fail(root["geometry"], "geometry", "expected disk or sphere");

  Scales sc;
  if (root["radius"]) {
    const Quantity q = rd.quantity(root["radius"], "radius", Dim::length);
    if (!(q.value > 0.0)) rd.fail(root["radius"], "radius", "must be > 0");
    if (q.has_unit) sc.R_m = q.value;
    else if (q.value != 1.0)
      rd.fail(root["radius"], "radius", "plain numbers are in units of R; give a unit or use 1");
  }

  if (!root["matrix"]) rd.fail(root, "matrix", "missing");
  const YAML::Node mat = root["matrix"];
  rd.only_keys(mat, "matrix", {"mu", "nu"});
  if (mat["mu"]) {
    const Quantity q = rd.quantity(mat["mu"], "matrix.mu", Dim::stress);
    if (!(q.value > 0.0)) rd.fail(mat["mu"], "matrix.mu", "must be > 0");
    if (q.has_unit) sc.mu_Pa = q.value;
    else if (q.value != 1.0)
      rd.fail(mat["mu"], "matrix.mu",
              "plain numbers are in units of the matrix shear modulus; give a unit or use 1");
  }
  read_material(rd, mat, "matrix", s.matrix, sc, true);

  if (!root["inhomogeneity"]) rd.fail(root, "inhomogeneity", "missing (cavity or {mu, nu})");
  const YAML::Node inh = root["inhomogeneity"];
  if (inh.IsScalar()) {
    if (inh.Scalar() != "cavity") rd.fail(inh, "inhomogeneity", "expected cavity or {mu, nu}");
    s.cavity = true;
    s.inhom = {0.0, 0.3};
  } else {
    read_material(rd, inh, "inhomogeneity", s.inhom, sc, false);
    s.cavity = s.inhom.mu == 0.0;
  }

  if (!root["interface"]) rd.fail(root, "interface", "missing");
  const YAML::Node itf = root["interface"];
  rd.only_keys(itf, "interface", {"model", "mu0", "lambda0", "sigma0", "chi0", "zeta0", "gamma"});
  if (!itf["model"]) rd.fail(itf, "interface", "missing key 'model'");
  s.model = read_model(rd, itf["model"], "interface.model");
  const std::pair<const char*, Dim> surface_keys[] = {
      {"mu0", Dim::surface}, {"lambda0", Dim::surface}, {"sigma0", Dim::surface},
      {"chi0", Dim::bending}, {"zeta0", Dim::bending},  {"gamma", Dim::stress}};
  std::map<std::string, double> sv;
  for (const auto& [key, dim] : surface_keys)
    sv[key] = itf[key] ? normalize(rd, itf[key], std::string("interface.") + key, dim, sc) : 0.0;
  s.surf = {sv["mu0"], sv["lambda0"], sv["sigma0"], sv["chi0"], sv["zeta0"]};
  if (itf["gamma"]) {
    if (s.shape != Shape::sphere)
      rd.fail(itf["gamma"], "interface.gamma", "gamma is the sphere bending combination; use chi0, zeta0");
    if (itf["chi0"] || itf["zeta0"])
      rd.fail(itf["gamma"], "interface.gamma", "give either gamma or chi0/zeta0, not both");
    s.surf = with_gamma(s.surf, sv["gamma"], 1.0);
  }
  for (const auto& [key, dim] : surface_keys) {
    if (sv[key] == 0.0) continue;
    const std::string path = std::string("interface.") + key;
    if (s.model == InterfaceModel::classical)
      rd.fail(itf[key], path, "must be 0 for the classical model");
    if (s.model == InterfaceModel::gm && (dim == Dim::bending || dim == Dim::stress))
      rd.fail(itf[key], path, "bending stiffness must be 0 for the GM model");
  }

  if (!root["load"]) rd.fail(root, "load", "missing");
  const YAML::Node ld = root["load"];
  rd.only_keys(ld, "load", {"shear", "hydrostatic", "s11", "s22", "s12"});
  if (ld["shear"]) s.sigma_d = normalize(rd, ld["shear"], "load.shear", Dim::stress, sc);
  if (ld["hydrostatic"])
    s.sigma_h = normalize(rd, ld["hydrostatic"], "load.hydrostatic", Dim::stress, sc);
  for (const char* k : {"s11", "s22", "s12"}) {
    if (!ld[k]) continue;
    if (s.shape != Shape::disk)
      rd.fail(ld[k], std::string("load.") + k, "general in-plane load is available for disks only");
    const double v = normalize(rd, ld[k], std::string("load.") + k, Dim::stress, sc);
    (std::string(k) == "s11" ? s.general.s11 : std::string(k) == "s22" ? s.general.s22 : s.general.s12) = v;
  }

  if (root["grid"]) {
    const YAML::Node g = root["grid"];
    if (s.shape == Shape::disk) rd.only_keys(g, "grid", {"r", "theta"});
    else rd.only_keys(g, "grid", {"r", "theta", "phi"});
    for (const char* k : {"r", "theta"})
      if (!g[k]) rd.fail(g, "grid", std::string("missing key '") + k + "'");
    s.grid.present = true;
    s.grid.r = read_range(rd, g["r"], "grid.r", true);
    s.grid.theta = read_range(rd, g["theta"], "grid.theta", false);
    if (g["phi"]) s.grid.phi = read_range(rd, g["phi"], "grid.phi", false);
  }
  s.mu_Pa = sc.mu_Pa;
  s.R_m = sc.R_m;
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

}  // namespace surfel::cli
