#pragma once

#include <string>
#include <vector>

#include "surfel/disk2d.hpp"
#include "surfel/sphere_so.hpp"

namespace surfel::cli {

enum class Shape { disk, sphere };

// Sampling ranges in units of R (r) and radians (angles): start, stop, count.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  std::vector<double> values() const;
};

struct GridSpec {
  bool present = false;
  Range r, theta, phi{0.0, 0.0, 1};
};

// Everything normalized on read: matrix mu = 1, R = 1. mu_Pa and R_m keep the
// physical scales when the file used units (0 otherwise).
struct Scenario {
  std::string source;
  Shape shape = Shape::sphere;
  InterfaceModel model = InterfaceModel::classical;
  BulkMaterial matrix;
  BulkMaterial inhom;
  bool cavity = false;
  SurfaceParams surf;
  double sigma_d = 0.0;
  double sigma_h = 0.0;
  FarField2D general;  // disk only, added to the shear and hydrostatic parts
  GridSpec grid;
  double mu_Pa = 0.0;
  double R_m = 0.0;

  DiskProblem disk() const;
  SphereProblem sphere() const;
};

class ScenarioError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

Scenario parse_scenario_text(const std::string& text, const std::string& source);
Scenario parse_scenario_file(const std::string& path);

std::string model_name(InterfaceModel m);

}  // namespace surfel::cli
