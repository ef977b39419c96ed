#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "stefan/coefficients.hpp"
#include "stefan/kernels.hpp"

namespace stefan::testing {

// Unit reference constants throughout: k0 = rho0 = c0 = 1, so alpha0 = 1.

/// Constant coefficients, T_m = 0 and T* = 1, so Ste = 1 / ell.
inline ThermalModel constant_unit(double stefan, double peclet) {
  return constant_model(1, 1, 1, 1.0 / stefan, peclet);
}

/// Linear family with theta = f for the Dirichlet-type map (T_m = 0, T* = 1).
inline ThermalModel linear_unit(double stefan, double alpha, double beta, double peclet) {
  return linear_model(1, 1, 1, 1.0 / stefan, alpha, beta, peclet, 1.0, 0.0);
}

inline BoundaryCondition dirichlet_bc() { return {Dirichlet{1.0}, 0.0}; }
inline BoundaryCondition robin_bc(double biot) { return {Robin{biot, 1.0}, 0.0}; }
/// With unit constants Bi = h and r = 2 sigma epsilon.
inline BoundaryCondition radiative_bc(double biot, double epsilon) { return {Radiative{biot, 1.0, epsilon, 1.0}, 0.0}; }
/// T_m = 1 and ell = 1: load = q, q* = 2q, M = 2.
inline BoundaryCondition neumann_bc(double load) { return {Neumann{load}, 1.0}; }

inline DimensionlessProblem problem(const ThermalModel& m, const BoundaryCondition& bc) {
  return build_dimensionless(m, bc);
}

/// Smooth random profile with values in [0, 1].
inline ProfileGrid random_profile(std::mt19937_64& rng, double lambda, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a0 = u(rng), a1 = u(rng), a2 = u(rng), a3 = u(rng);
  const double p1 = 3 * u(rng), p2 = 3 * u(rng), p3 = 3 * u(rng);
  ProfileGrid g{lambda, std::vector<double>(n + 1)};
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n);
    const double v = a0 + a1 * std::sin(3.1 * s + p1) + 0.5 * a2 * std::sin(6.7 * s + p2) +
                     0.25 * a3 * std::sin(11.3 * s + p3);
    g.f[i] = 0.5 + 0.5 * std::tanh(v);
  }
  return g;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Five-node table; piecewise linear so sampled bounds are exact.
inline CoefficientTable sample_table() {
  return {{0.0, 0.25, 0.5, 0.75, 1.0},
          {1.0, 1.02, 1.05, 1.08, 1.1},
          {1.0, 1.05, 1.05, 1.1, 1.15},
          {0.2, 0.21, 0.22, 0.23, 0.24}};
}

}  // namespace stefan::testing
