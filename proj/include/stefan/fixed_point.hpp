#pragma once

#include <cstddef>
#include <optional>

#include "stefan/kernels.hpp"

namespace stefan {

struct OperatorImage {
  ProfileGrid profile;
  /// Radiative image left [0, 1] somewhere (self-map hypothesis violated).
  bool escaped_unit_interval = false;
};

/// Image of the profile under the integral operator of prob.kind:
///   Dirichlet  Phi(xi)/Phi(lambda)
///   Neumann    q* (Phi(lambda) - Phi(xi))
///   Robin      (1 + 2 Bi Phi(xi)) / (1 + 2 Bi Phi(lambda))
///   Radiative  1 - G(f)(0) (Phi(lambda) - Phi(xi)),  G(f)(0) = 2 Bi f(0) + r F(f)(0)
OperatorImage apply_operator(const DimensionlessProblem& prob, const ProfileGrid& profile);

/// Same, reusing kernels already evaluated for this profile.
OperatorImage apply_operator(const DimensionlessProblem& prob, const ProfileGrid& profile,
                             const KernelEval& kernels);

/// G(f)(0) of the radiative-convective condition.
double radiative_face_gain(const DimensionlessProblem& prob, double f0);

struct InnerSettings {
  double tol = 1e-10;
  int max_iter = 200;
};

struct InnerResult {
  ProfileGrid profile;
  int iterations = 0;
  double residual = 0;  // max-node |H(f) - f| of the returned profile
  std::optional<double> contraction_observed;
  double contraction_theoretical = 0;  // contraction_bound(lambda); NaN when undefined
  bool converged = false;
  bool clamped = false;  // radiative iterate clamped into [0, 1]
};

/// Starting iterate: xi/lambda, or zero for Neumann.
ProfileGrid initial_profile(const DimensionlessProblem& prob, double lambda, std::size_t intervals);

/// Picard iteration f <- H(f) for fixed lambda. Never throws on
/// non-convergence; the result carries converged = false instead.
InnerResult solve_profile(const DimensionlessProblem& prob, double lambda, const InnerSettings& settings,
                          const ProfileGrid& start);

/// Upper bound on the operator's Lipschitz constant at lambda = z
/// (the contraction function matching prob.kind).
double contraction_bound(const DimensionlessProblem& prob, double z);

/// Left-hand side of the radiative self-map condition
///   (2 Bi + r T*^4) sqrt(pi) exp(mu_M^2 L_M / (L_m^2 N_m)) / (L_m sqrt(N_m / L_M)),
/// or with T*^4 - T_m^4 in place of T*^4 when `subtract_melt_term` is set.
double radiative_self_map_constant(const DimensionlessProblem& prob, bool subtract_melt_term = false);

/// Whether the radiative operator provably maps [0,1]-valued profiles into themselves.
bool radiative_self_map_holds(const DimensionlessProblem& prob);

}  // namespace stefan
