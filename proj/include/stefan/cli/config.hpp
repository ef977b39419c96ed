#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stefan/coefficients.hpp"
#include "stefan/lambda_solver.hpp"
#include "stefan/pde_verifier.hpp"

namespace stefan::cli {

struct CoefficientsConfig {
  std::string family;  // constant | linear | table
  double peclet = 0;
  double alpha = 0;
  double beta = 0;
  std::optional<double> T_hot, T_cold;
  std::string table_path;  // resolved against the config file's directory
  std::optional<CoefficientBounds> bounds;
};

struct ReferenceConfig {
  double k0 = 1, rho0 = 1, c0 = 1, ell = 1, T_m = 0;
};

struct NumericsConfig {
  std::size_t grid = 512;
  double inner_tol = 1e-10;
  double outer_tol = 1e-9;
  int max_iter = 200;
  double lambda_max = 10;
  int scan_points = 64;
  bool estimate_bounds = true;
};

struct OutputsConfig {
  std::string dir = "out";
  bool profile_csv = true;
  bool field_csv = true;
  bool front_csv = true;
  std::vector<double> times{1.0};
  std::size_t field_points = 101;
};

/// Cartesian grid over dotted parameter paths such as "bc.T_star".
struct SweepConfig {
  std::vector<std::pair<std::string, std::vector<double>>> parameters;
};

struct RunConfig {
  BoundaryCondition bc;
  CoefficientsConfig coefficients;
  ReferenceConfig reference;
  NumericsConfig numerics;
  OutputsConfig outputs;
  std::optional<SweepConfig> sweep;
  FrontFixedScheme verify;

  nlohmann::json source;  // the parsed document, kept for sweeps
  std::string base_dir;

  ThermalModel model() const;
  OuterSettings outer_settings() const;
  BuildOptions build_options() const;
};

/// Throws StefanError(InvalidInput) naming the offending key.
RunConfig parse_config(const nlohmann::json& doc, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

/// Copy of `doc` with the dotted path set to value; the path must exist.
nlohmann::json with_parameter(const nlohmann::json& doc, const std::string& path, double value);

}  // namespace stefan::cli
