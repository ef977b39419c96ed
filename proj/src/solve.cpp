#include "stefan/solve.hpp"

#include <algorithm>
#include <cmath>

#include "stefan/error.hpp"

namespace stefan {

double front_flux_residual(const DimensionlessProblem& prob, const ProfileGrid& profile) {
  const auto& f = profile.f;
  const std::size_t n = profile.intervals();
  if (n < 2) throw StefanError(ErrorKind::InvalidInput, "front_flux_residual", "grid too coarse");
  const double slope = (3 * f[n] - 4 * f[n - 1] + f[n - 2]) / (2 * profile.step());
  const double lambda = profile.lambda;
  if (prob.kind == BcKind::Neumann) return std::abs(slope / (-prob.M * lambda) - 1);
  return std::abs(prob.conductivity(f[n]) * slope * prob.stefan / (2 * lambda) - 1);
}

SolveReport solve_lambda(const DimensionlessProblem& prob, const OuterSettings& settings) {
  SolveReport rep;
  rep.kind = prob.kind;
  rep.existence = certify(prob, settings);

  auto root = find_lambda(prob, settings);
  rep.lambda = root.lambda;
  rep.bracket = root.bracket;
  rep.outer_iterations = root.outer_iterations;
  rep.outer_residual = root.outer_residual;
  rep.additional_sign_changes = root.additional_sign_changes;

  const auto& inner = root.at_root.inner;
  rep.profile = inner.profile;
  rep.inner_iterations = inner.iterations;
  rep.inner_residual = inner.residual;
  rep.contraction_observed = inner.contraction_observed;
  rep.contraction_theoretical = inner.contraction_theoretical;
  rep.clamped = inner.clamped;
  rep.max_profile = *std::max_element(rep.profile.f.begin(), rep.profile.f.end());
  rep.front_flux_residual = front_flux_residual(prob, rep.profile);
  return rep;
}

}  // namespace stefan
