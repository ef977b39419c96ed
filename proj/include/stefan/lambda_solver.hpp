#pragma once

#include <cstddef>
#include <vector>

#include "stefan/fixed_point.hpp"

namespace stefan {

struct OuterSettings {
  std::size_t grid = 512;  // intervals of the profile grid
  InnerSettings inner;
  double tol = 1e-9;         // bisection tolerance on lambda and on |V - lambda|
  double lambda_max = 10.0;  // upper end of the fallback bracket
  int scan_points = 64;
};

enum class BracketProvenance { Analytic, Fallback };

const char* to_string(BracketProvenance p);

struct Bracket {
  double lower = 0;
  double upper = 0;
  BracketProvenance provenance = BracketProvenance::Analytic;
};

/// Outer map evaluated on a converged profile.
struct VEvaluation {
  double lambda = 0;
  double value = 0;
  InnerResult inner;
  KernelEval kernels;
};

/// Value of the outer map from a profile and its kernels:
///   Dirichlet  Ste/2 E(lambda)/Phi(lambda)
///   Neumann    q* E(lambda) / (M L*(f(lambda)))
///   Robin      Ste Bi E(lambda) / (1 + 2 Bi Phi(lambda))
///   Radiative  Ste G(f)(0)/2 E(lambda)
double v_from_kernels(const DimensionlessProblem& prob, const ProfileGrid& profile, const KernelEval& kernels);

/// Solves the profile at lambda (from `warm` when given, else the default
/// start) and evaluates V. Throws StefanError(NonConvergence) naming lambda if
/// the inner iteration fails.
VEvaluation evaluate_v(const DimensionlessProblem& prob, double lambda, const OuterSettings& settings,
                       const std::vector<double>* warm = nullptr);

double v_value(const DimensionlessProblem& prob, double lambda, const OuterSettings& settings);

/// Lower sandwich function (V1, V1^q; identically 0 for Robin and radiative).
double sandwich_lower(const DimensionlessProblem& prob, double lambda);
/// Upper sandwich function (V2, V2^q, V2 for Robin, V2^r).
double sandwich_upper(const DimensionlessProblem& prob, double lambda);

/// lambda1 = root of the lower sandwich function (0 when it has none),
/// lambda2 = smallest root of the upper one above lambda1. Falls back to
/// [1e-6, lambda_max] when lambda2 cannot be located.
Bracket bracket(const DimensionlessProblem& prob, const OuterSettings& settings);

struct LambdaRoot {
  double lambda = 0;
  VEvaluation at_root;
  Bracket bracket;
  int outer_iterations = 0;
  double outer_residual = 0;  // |V(lambda) - lambda|
  int additional_sign_changes = 0;
  std::vector<double> failed_scan_points;  // lambdas where the inner solve failed
};

/// Smallest root of V(lambda) = lambda in the bracket: a left-to-right scan
/// locates the first sign change, bisection refines it. Throws
/// StefanError(NoRoot) when the scan sees no sign change.
LambdaRoot find_lambda(const DimensionlessProblem& prob, const OuterSettings& settings);

}  // namespace stefan
