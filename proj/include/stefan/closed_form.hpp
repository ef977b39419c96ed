#pragma once

#include <functional>
#include <vector>

#include "stefan/coefficients.hpp"

namespace stefan {

/// Explicit similarity solution for constant coefficients.
struct ClosedFormSolution {
  BcKind kind = BcKind::Dirichlet;
  double lambda = 0;
  std::function<double(double)> profile;
  bool unique = true;
  /// Every root located on the scan; lambda is the smallest.
  std::vector<double> roots;
};

/// sqrt(pi) lambda (erf(Pe) - erf(Pe - lambda)) exp((Pe - lambda)^2) - Ste
double dirichlet_constant_residual(double stefan, double peclet, double lambda);

/// lambda exp(lambda^2 - 2 lambda Pe) - load
double neumann_constant_residual(double load, double peclet, double lambda);

/// Root by bisection on (0, lambda_max]; profile
/// (erf(Pe) - erf(Pe - xi)) / (erf(Pe) - erf(Pe - lambda)).
ClosedFormSolution dirichlet_constant(double stefan, double peclet, double lambda_max = 10.0);

/// load = q / (rho0 ell sqrt(alpha0)). All sign-change roots of a 1024-point
/// scan of (0, lambda_max] are reported; unique is Pe <= sqrt(2). The profile
/// q* sqrt(pi) exp(Pe^2)/2 (erf(Pe - xi) - erf(Pe - lambda)) needs q* in
/// addition to the load; the default q* = load corresponds to M = 1.
ClosedFormSolution neumann_constant(double load, double peclet, double q_star = 0.0,
                                    double lambda_max = 10.0);

}  // namespace stefan
