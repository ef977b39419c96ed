#pragma once

#include <cstddef>

#include "stefan/coefficients.hpp"
#include "stefan/reconstruct.hpp"

namespace stefan {

/// Explicit front-fixed finite-difference scheme in y = x / s(t) on [0, 1].
struct FrontFixedScheme {
  std::size_t nodes = 200;
  double t0 = 1.0;
  double t1 = 2.0;
  /// dt = safety * dy^2 * s^2 * (rho c)_min / k_max
  double safety = 0.4;
};

struct PdeDiscrepancy {
  std::size_t nodes = 0;
  std::size_t steps = 0;
  double final_time = 0;
  double s_numeric = 0;
  double s_similarity = 0;
  double s_rel_final = 0;  // |s - s_sim| / s_sim at t1
  double s_rel_max = 0;    // maximum over all steps
  /// Max over steps and nodes of |u - T_sim| at equal y, relative to the
  /// temperature span of the problem.
  double T_rel_max = 0;
};

/// Advances the scheme from similarity data at t0 to t1, moving the front
/// with the discrete Stefan condition, and compares with the similarity
/// solution. Throws StefanError(NonConvergence) when the iterate blows up.
PdeDiscrepancy verify(const PhysicalSolution& sol, const ThermalModel& model, const BoundaryCondition& bc,
                      const FrontFixedScheme& scheme);

}  // namespace stefan
