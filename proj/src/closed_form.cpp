#include "stefan/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stefan/error.hpp"
#include "stefan/quadrature.hpp"

namespace stefan {

namespace {
constexpr int kNeumannScan = 1024;
constexpr double kRootTol = 1e-15;
}  // namespace

double dirichlet_constant_residual(double stefan, double peclet, double lambda) {
  const double d = peclet - lambda;
  return std::sqrt(std::numbers::pi) * lambda * (std::erf(peclet) - std::erf(d)) * std::exp(d * d) - stefan;
}

double neumann_constant_residual(double load, double peclet, double lambda) {
  return lambda * std::exp(lambda * lambda - 2 * lambda * peclet) - load;
}

ClosedFormSolution dirichlet_constant(double stefan, double peclet, double lambda_max) {
  if (!(stefan > 0)) throw StefanError(ErrorKind::InvalidInput, "oracle", "Ste must be positive");
  if (!(peclet >= 0)) throw StefanError(ErrorKind::InvalidInput, "oracle", "Pe must be non-negative");
  auto g = [&](double x) { return dirichlet_constant_residual(stefan, peclet, x); };
  if (!(g(lambda_max) > 0))
    throw StefanError(ErrorKind::NoRoot, "oracle",
                      "Dirichlet equation has no root below lambda_max=" + std::to_string(lambda_max));
  ClosedFormSolution sol;
  sol.kind = BcKind::Dirichlet;
  sol.lambda = bisect_root(g, 0.0, lambda_max, kRootTol);
  sol.roots = {sol.lambda};
  const double denom = std::erf(peclet) - std::erf(peclet - sol.lambda);
  sol.profile = [peclet, denom](double xi) { return (std::erf(peclet) - std::erf(peclet - xi)) / denom; };
  return sol;
}

ClosedFormSolution neumann_constant(double load, double peclet, double q_star, double lambda_max) {
  if (!(load > 0)) throw StefanError(ErrorKind::InvalidInput, "oracle", "load must be positive");
  if (!(peclet >= 0)) throw StefanError(ErrorKind::InvalidInput, "oracle", "Pe must be non-negative");
  if (q_star <= 0) q_star = load;
  auto g = [&](double x) { return neumann_constant_residual(load, peclet, x); };
  ClosedFormSolution sol;
  sol.kind = BcKind::Neumann;
  // g(0) = -load < 0, so the scan starts exactly at 0.
  for (auto [a, b] : scan_sign_changes(g, 0.0, lambda_max, kNeumannScan))
    sol.roots.push_back(bisect_root(g, a, b, kRootTol));
  if (sol.roots.empty())
    throw StefanError(ErrorKind::NoRoot, "oracle",
                      "Neumann equation has no root below lambda_max=" + std::to_string(lambda_max));
  sol.lambda = sol.roots.front();
  sol.unique = peclet <= std::numbers::sqrt2;
  const double scale = q_star * std::sqrt(std::numbers::pi) * std::exp(peclet * peclet) / 2;
  const double tail = std::erf(peclet - sol.lambda);
  sol.profile = [scale, tail, peclet](double xi) { return scale * (std::erf(peclet - xi) - tail); };
  return sol;
}

}  // namespace stefan
