#pragma once

#include <optional>

#include "stefan/existence.hpp"
#include "stefan/lambda_solver.hpp"

namespace stefan {

/// Full result of the double fixed point for one problem.
struct SolveReport {
  BcKind kind = BcKind::Dirichlet;
  double lambda = 0;
  ProfileGrid profile;
  Bracket bracket;

  int outer_iterations = 0;
  double outer_residual = 0;
  int additional_sign_changes = 0;

  int inner_iterations = 0;
  double inner_residual = 0;
  std::optional<double> contraction_observed;
  double contraction_theoretical = 0;
  bool clamped = false;

  double max_profile = 0;
  /// Relative residual of the front condition, f'(lambda) by a second-order
  /// one-sided difference.
  double front_flux_residual = 0;

  ExistenceReport existence;
};

/// Relative residual of L*(f(lambda)) f'(lambda) = 2 lambda / Ste
/// (f'(lambda) = -M lambda for Neumann) on a converged profile.
double front_flux_residual(const DimensionlessProblem& prob, const ProfileGrid& profile);

SolveReport solve_lambda(const DimensionlessProblem& prob, const OuterSettings& settings = {});

}  // namespace stefan
