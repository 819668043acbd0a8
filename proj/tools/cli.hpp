#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cosc/oscillator.hpp"

namespace cosc::cli {

enum ExitCode { kSuccess = 0, kValidation = 1, kCertification = 2 };

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

struct RunConfig {
  std::string theta_text = "pi/6";
  double theta = 0.0;
  std::string epsilon_text;
  cplx epsilon;
  std::string nu_text = "0";
  cplx nu;
  int order = 1;
  std::string seed_text = "general";
  SeedKind kind = SeedKind::General;
  int j = 0;
  std::optional<GridSpec> grid;
  std::string format = "csv";
  std::string out;
  int levels = 10;
  double decay_radius = 8.0;
  std::vector<int> states;
  int role = 2;
  bool compare_h0 = false;
  bool parametric = false;
  double delta_w = 1e-12;
  double delta_g = 1e-3;
  double tol_analytic = 1e-6;
  double tol_fd = 1e-4;
  double fd_step = 1e-3;
  bool all = false;
};

GridSpec parse_grid(const std::string& text);

/// Parses the textual fields of `config` and checks the invariants
/// (theta in [0, pi/2), |nu| < 1, at least 16 grid points, x_min > 0 for
/// odd bound seeds). Throws cosc::Error.
void resolve(RunConfig& config);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cosc::cli
