#include "stefan/existence.hpp"

#include <cmath>

#include "stefan/error.hpp"
#include "stefan/quadrature.hpp"

namespace stefan {

const char* to_string(FlagState s) {
  switch (s) {
    case FlagState::Holds: return "holds";
    case FlagState::Fails: return "fails";
    case FlagState::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

FlagState ExistenceReport::flag(const std::string& name) const {
  for (const auto& [key, state] : flags)
    if (key == name) return state;
  return FlagState::NotApplicable;
}

std::pair<std::optional<double>, std::string> contraction_threshold(const DimensionlessProblem& prob) {
  if (prob.kind == BcKind::Radiative && !(prob.mu.max > 0))
    return {std::nullopt, "contraction function undefined (mu_M = 0)"};

  const bool no_lipschitz = prob.L.lipschitz == 0 && prob.N.lipschitz == 0 && prob.mu.lipschitz == 0;
  const bool no_face_term = prob.kind != BcKind::Radiative || (2 * prob.biot + prob.r * prob.D5) == 0;
  if (no_lipschitz && no_face_term) return {std::nullopt, "unconditional contraction"};

  auto excess = [&](double z) { return contraction_bound(prob, z) - 1.0; };
  if (excess(0.0) >= 0) return {std::nullopt, "contraction function is at least 1 at z = 0"};

  double hi = 1e-3;
  while (!(excess(hi) >= 0)) {
    hi *= 2;
    if (hi > 1e4) return {std::nullopt, "contraction function stays below 1 up to z = 1e4"};
  }
  return {bisect_root(excess, 0.0, hi, 1e-15), ""};
}

ExistenceReport certify(const DimensionlessProblem& prob, const OuterSettings& settings) {
  ExistenceReport rep;
  rep.kind = prob.kind;
  rep.bounds_source = prob.bounds_source;
  std::tie(rep.lambda_bar, rep.lambda_bar_note) = contraction_threshold(prob);
  rep.bracket = bracket(prob, settings);

  const bool radiative_defined = prob.kind != BcKind::Radiative || prob.mu.max > 0;
  rep.epsilon_at_lambda2 = radiative_defined ? contraction_bound(prob, rep.bracket.upper) : std::nan("");

  auto state = [](bool applicable, bool holds) {
    if (!applicable) return FlagState::NotApplicable;
    return holds ? FlagState::Holds : FlagState::Fails;
  };
  const BcKind k = prob.kind;
  const bool dirichlet_like = k == BcKind::Dirichlet || k == BcKind::Robin;
  const bool eps_ok = rep.epsilon_at_lambda2 < 1.0;
  const double lip_ratio = 2 * prob.L.max * prob.L.lipschitz / (prob.L.min * prob.L.min);

  rep.flags.emplace_back(condition::kLipschitzRatio, state(dirichlet_like, lip_ratio < 1));
  rep.flags.emplace_back(condition::kContractionAtLambda2, state(k == BcKind::Dirichlet, eps_ok));
  rep.flags.emplace_back(condition::kNeumannContraction, state(k == BcKind::Neumann, eps_ok));
  rep.flags.emplace_back(condition::kRobinContraction, state(k == BcKind::Robin, eps_ok));
  rep.flags.emplace_back(condition::kRadiativeContraction, state(k == BcKind::Radiative, eps_ok));

  const bool radiative = k == BcKind::Radiative;
  rep.flags.emplace_back(condition::kRadiativeSelfMap,
                         state(radiative, radiative && radiative_self_map_constant(prob) <= 1));
  rep.flags.emplace_back(condition::kRadiativeSelfMapDimensional,
                         state(radiative, radiative && radiative_self_map_constant(prob, true) < 1));
  const bool face_lip = prob.mu.max > 0 && (2 * prob.biot + prob.r * prob.D5) / prob.mu.max < 1;
  rep.flags.emplace_back(condition::kRadiativeLipschitz, state(radiative, face_lip));
  rep.flags.emplace_back(condition::kAnalyticBracket,
                         state(true, rep.bracket.provenance == BracketProvenance::Analytic));

  bool all_hold = true;
  for (const auto& [name, s] : rep.flags) all_hold = all_hold && s != FlagState::Fails;
  if (!all_hold) {
    rep.certified = false;
    rep.status = "not certified";
  } else if (prob.bounds_source == BoundsSource::Sampled) {
    rep.certified = false;
    rep.status = "heuristic";
  } else {
    rep.certified = true;
    rep.status = "certified";
  }
  return rep;
}

}  // namespace stefan
