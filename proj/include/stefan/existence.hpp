#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stefan/lambda_solver.hpp"

namespace stefan {

enum class FlagState { Holds, Fails, NotApplicable };

const char* to_string(FlagState s);

// Condition names used as keys in ExistenceReport::flags.
namespace condition {
inline constexpr const char* kLipschitzRatio = "2L_M L̃/L_m² < 1";
inline constexpr const char* kContractionAtLambda2 = "𝓔(λ2) < 1";
inline constexpr const char* kNeumannContraction = "𝓔_q(λ_2q) < 1";
inline constexpr const char* kRobinContraction = "𝓔_h(λ2) < 1";
inline constexpr const char* kRadiativeContraction = "𝓔_r(λ_2r) < 1";
inline constexpr const char* kRadiativeSelfMap =
    "(2Bi + r T*⁴) √π exp(μ_M² L_M/(L_m² N_m)) / (L_m √(N_m/L_M)) ≤ 1";
inline constexpr const char* kRadiativeSelfMapDimensional =
    "(2Bi + r(T*⁴ − T_m⁴)) √π exp(μ_M² L_M/(L_m² N_m)) / (L_m √(N_m/L_M)) < 1";
inline constexpr const char* kRadiativeLipschitz = "(2Bi + r D5)/μ_M < 1";
inline constexpr const char* kAnalyticBracket = "analytic bracket";
}  // namespace condition

struct ExistenceReport {
  BcKind kind = BcKind::Dirichlet;
  /// Unique root of the contraction function = 1; absent when there is none.
  std::optional<double> lambda_bar;
  std::string lambda_bar_note;
  Bracket bracket;
  double epsilon_at_lambda2 = 0;
  std::vector<std::pair<std::string, FlagState>> flags;
  bool certified = false;
  /// "certified", "heuristic" (every condition holds but the coefficient
  /// bounds were sampled) or "not certified".
  std::string status;
  BoundsSource bounds_source = BoundsSource::Exact;

  FlagState flag(const std::string& name) const;
};

/// Root of contraction_bound(z) = 1 by bisection. Empty with a note when the
/// contraction function is identically zero ("unconditional contraction") or
/// already at least 1 at z = 0.
std::pair<std::optional<double>, std::string> contraction_threshold(const DimensionlessProblem& prob);

ExistenceReport certify(const DimensionlessProblem& prob, const OuterSettings& settings = {});

}  // namespace stefan
