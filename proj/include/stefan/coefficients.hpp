#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace stefan {

using ScalarFunction = std::function<double(double)>;

/// Bounds and Lipschitz constants of the dimensional coefficients over the
/// temperature range a solution can visit.
struct CoefficientBounds {
  double k_min = 0, k_max = 0, k_lip = 0;
  double rho_c_min = 0, rho_c_max = 0, rho_c_lip = 0;
  double mu_min = 0, mu_max = 0, mu_lip = 0;
};

/// Result of estimate_bounds(). Sampled bounds are never a proof.
struct SampledBounds {
  CoefficientBounds bounds;
  bool certified = false;
};

enum class BoundsSource { User, Exact, Sampled };

/// Tabulated coefficients, interpolated piecewise-linearly in T and held
/// constant outside the tabulated range.
struct CoefficientTable {
  std::vector<double> T, k, rho_c, mu;
};

/// Dimensional thermal model: conductivity k(T), volumetric heat capacity
/// rho(T)c(T) and convective amplitude mu(T), with v(T) = mu(T)/sqrt(t).
struct ThermalModel {
  ScalarFunction k;
  ScalarFunction rho_c;
  ScalarFunction mu;
  double k0 = 1, rho0 = 1, c0 = 1;
  double ell = 1;  // latent heat per unit mass

  /// User-supplied bounds; take precedence over everything else.
  std::optional<CoefficientBounds> bounds;
  /// Closed-form bounds over [T_lo, T_hi], available for the built-in families.
  std::function<CoefficientBounds(double, double)> exact_bounds;
  /// Temperatures where the coefficients have kinks (table nodes); sampling
  /// includes them so extrema on nodes are hit exactly.
  std::vector<double> breakpoints;

  double alpha0() const { return k0 / (rho0 * c0); }
};

/// k = k0, rho c = rho0 c0, mu = rho0 c0 sqrt(alpha0) Pe.
ThermalModel constant_model(double k0, double rho0, double c0, double ell, double peclet);

/// Linear family anchored at (T_hot, T_cold):
///   k = k0 (1 + beta theta), c = c0 (1 + alpha theta), rho = rho0,
///   mu = rho0 c(T) sqrt(alpha0) Pe,  theta = (T - T_hot)/(T_cold - T_hot).
ThermalModel linear_model(double k0, double rho0, double c0, double ell, double alpha,
                          double beta, double peclet, double T_hot, double T_cold);

ThermalModel table_model(CoefficientTable table, double k0, double rho0, double c0, double ell);

/// Reads a `T,k,rho_c,mu` CSV with a mandatory header and strictly
/// increasing T.
CoefficientTable read_coefficient_table(std::istream& in);
CoefficientTable read_coefficient_table(const std::string& path);

struct Dirichlet {
  double T_star;
};
struct Neumann {
  double q;
};
struct Robin {
  double h;
  double T_star;
};
struct Radiative {
  double h;
  double sigma;
  double epsilon;
  double T_star;
};

enum class BcKind { Dirichlet, Neumann, Robin, Radiative };

const char* to_string(BcKind kind);
BcKind bc_kind_from_string(const std::string& name);

struct BoundaryCondition {
  std::variant<Dirichlet, Neumann, Robin, Radiative> face;
  double T_m = 0;  // phase-change temperature

  BcKind kind() const;
  /// Imposed or bulk temperature at the fixed face; absent for Neumann.
  std::optional<double> T_star() const;
  /// Throws StefanError(InvalidInput) when the data is inadmissible.
  void validate() const;
};

struct FunctionBounds {
  double min = 0;
  double max = 0;
  double lipschitz = 0;
};

/// Dimensionless data of one boundary-value problem. The three functions are
/// the conductivity L*, heat capacity N* and convective speed mu* as
/// functions of the similarity profile value f.
struct DimensionlessProblem {
  BcKind kind = BcKind::Dirichlet;
  ScalarFunction conductivity;
  ScalarFunction capacity;
  ScalarFunction speed;
  FunctionBounds L, N, mu;

  double stefan = 0;  // Dirichlet, Robin, Radiative
  double q_star = 0;  // Neumann
  double M = 0;       // Neumann
  double biot = 0;    // Robin, Radiative
  double r = 0;       // Radiative
  double D5 = 0;      // Radiative
  double T_star = 0;
  double T_m = 0;

  BoundsSource bounds_source = BoundsSource::Exact;
};

struct BuildOptions {
  bool estimate_bounds = true;
  std::size_t samples = 257;
  /// Overrides the default sampling range ([T_m, T*], or [T_m, 2 T_m] for Neumann).
  std::optional<std::pair<double, double>> temperature_range;
};

/// Temperature range the profile is mapped onto for this boundary condition.
std::pair<double, double> default_temperature_range(const BoundaryCondition& bc);

/// User bounds, else family bounds, else sampled estimates (when allowed).
std::pair<CoefficientBounds, BoundsSource> resolve_bounds(const ThermalModel& model,
                                                          std::pair<double, double> range,
                                                          const BuildOptions& options = {});

DimensionlessProblem build_dimensionless(const ThermalModel& model, const BoundaryCondition& bc,
                                         const BuildOptions& options = {});

SampledBounds estimate_bounds(const ThermalModel& model, std::pair<double, double> range,
                              std::size_t samples);

/// Temperature corresponding to profile value f for this boundary condition.
double temperature_of_profile(const BoundaryCondition& bc, double f);

}  // namespace stefan
