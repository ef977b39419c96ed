#include "stefan/lambda_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "stefan/error.hpp"
#include "stefan/quadrature.hpp"

namespace stefan {

namespace {

constexpr double kFallbackLower = 1e-6;
constexpr int kBracketScan = 4096;
// The sandwich bounds are attained for constant coefficients (Pe = 0), so the
// discrete root may sit a quadrature error outside [lambda1, lambda2].
constexpr double kBracketSlack = 1e-3;

std::string describe(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

const char* to_string(BracketProvenance p) {
  return p == BracketProvenance::Analytic ? "analytic" : "fallback";
}

double v_from_kernels(const DimensionlessProblem& prob, const ProfileGrid& profile, const KernelEval& kernels) {
  const double E_end = kernels.E.back();
  const double Phi_end = kernels.Phi.back();
  switch (prob.kind) {
    case BcKind::Dirichlet:
      return 0.5 * prob.stefan * E_end / Phi_end;
    case BcKind::Neumann:
      return prob.q_star * E_end / (prob.M * prob.conductivity(profile.f.back()));
    case BcKind::Robin:
      return prob.stefan * prob.biot * E_end / (1 + 2 * prob.biot * Phi_end);
    case BcKind::Radiative:
      return 0.5 * prob.stefan * radiative_face_gain(prob, profile.f.front()) * E_end;
  }
  return std::nan("");
}

VEvaluation evaluate_v(const DimensionlessProblem& prob, double lambda, const OuterSettings& settings,
                       const std::vector<double>* warm) {
  ProfileGrid start = warm && warm->size() == settings.grid + 1
                          ? ProfileGrid{lambda, *warm}
                          : initial_profile(prob, lambda, settings.grid);
  VEvaluation ev;
  ev.lambda = lambda;
  ev.inner = solve_profile(prob, lambda, settings.inner, start);
  if (!ev.inner.converged)
    throw StefanError(ErrorKind::NonConvergence, "v_value",
                      "inner iteration did not converge at lambda=" + describe(lambda) + " after " +
                          std::to_string(ev.inner.iterations) + " iterations (residual " +
                          describe(ev.inner.residual) + ")");
  ev.kernels = eval_kernels(ev.inner.profile, prob);
  ev.value = v_from_kernels(prob, ev.inner.profile, ev.kernels);
  return ev;
}

double v_value(const DimensionlessProblem& prob, double lambda, const OuterSettings& settings) {
  return evaluate_v(prob, lambda, settings).value;
}

double sandwich_lower(const DimensionlessProblem& prob, double lambda) {
  const double Lm = prob.L.min, LM = prob.L.max, NM = prob.N.max, muM = prob.mu.max;
  switch (prob.kind) {
    case BcKind::Dirichlet:
      return prob.stefan * muM * std::exp(-2 * lambda * muM / Lm - 2 * lambda * lambda * NM / Lm);
    case BcKind::Neumann:
      return prob.q_star / (prob.M * LM) * std::exp(-lambda * lambda * NM / Lm);
    case BcKind::Robin:
    case BcKind::Radiative:
      return 0.0;
  }
  return 0.0;
}

double sandwich_upper(const DimensionlessProblem& prob, double lambda) {
  const double Lm = prob.L.min, LM = prob.L.max, Nm = prob.N.min, NM = prob.N.max, muM = prob.mu.max;
  const double envelope = std::exp(2 * lambda * muM / Lm - lambda * lambda * Nm / LM);
  switch (prob.kind) {
    case BcKind::Dirichlet:
    case BcKind::Robin: {
      const double e = std::erf(std::sqrt(NM / Lm) * lambda);
      if (e == 0) return std::numeric_limits<double>::infinity();
      return prob.stefan / std::sqrt(std::numbers::pi) * std::sqrt(NM / Lm) * LM * envelope / e;
    }
    case BcKind::Neumann:
      return prob.q_star / (prob.M * Lm) * envelope;
    case BcKind::Radiative:
      return 0.5 * prob.stefan * (2 * prob.biot + prob.r * std::pow(prob.T_star, 4)) * envelope;
  }
  return 0.0;
}

Bracket bracket(const DimensionlessProblem& prob, const OuterSettings& settings) {
  Bracket b;
  const double top = sandwich_lower(prob, 0.0);
  if (top > 0) {
    // The lower sandwich function decreases from top, so its crossing lies in (0, top].
    b.lower = bisect_root([&](double x) { return sandwich_lower(prob, x) - x; }, 0.0, top);
  }
  auto upper_gap = [&](double x) { return sandwich_upper(prob, x) - x; };
  const double scan_hi = std::max(settings.lambda_max, 2 * b.lower + 1.0);
  const auto changes = scan_sign_changes(upper_gap, b.lower, scan_hi, kBracketScan);
  if (changes.empty() || !(upper_gap(b.lower) > 0)) {
    return Bracket{kFallbackLower, settings.lambda_max, BracketProvenance::Fallback};
  }
  auto [a, c] = changes.front();
  b.upper = bisect_root(upper_gap, a, c);
  if (!(b.upper > b.lower)) return Bracket{kFallbackLower, settings.lambda_max, BracketProvenance::Fallback};
  b.provenance = BracketProvenance::Analytic;
  return b;
}

LambdaRoot find_lambda(const DimensionlessProblem& prob, const OuterSettings& settings) {
  LambdaRoot out;
  out.bracket = bracket(prob, settings);
  const double hi = out.bracket.upper * (1 + kBracketSlack);
  const double lo = out.bracket.lower > 0 ? out.bracket.lower * (1 - kBracketSlack) : out.bracket.upper * 1e-6;

  std::vector<double> warm;
  auto g = [&](double lambda, VEvaluation* keep) {
    auto ev = evaluate_v(prob, lambda, settings, warm.empty() ? nullptr : &warm);
    warm = ev.inner.profile.f;
    const double gap = ev.value - lambda;
    if (keep) *keep = std::move(ev);
    return gap;
  };

  // Left-to-right scan; points where the inner solve fails are skipped.
  const int points = std::max(settings.scan_points, 1);
  std::vector<std::pair<double, double>> changes;
  double prev_x = std::nan(""), prev_g = std::nan("");
  for (int i = 0; i <= points; ++i) {
    const double x = lo + (hi - lo) * i / points;
    double gx;
    try {
      gx = g(x, nullptr);
    } catch (const StefanError& e) {
      if (e.kind() != ErrorKind::NonConvergence && e.kind() != ErrorKind::Overflow) throw;
      out.failed_scan_points.push_back(x);
      warm.clear();
      continue;
    }
    if (!std::isnan(prev_g) && (prev_g < 0) != (gx < 0)) changes.emplace_back(prev_x, x);
    prev_x = x;
    prev_g = gx;
  }
  if (changes.empty()) {
    throw StefanError(ErrorKind::NoRoot, "solve_lambda",
                      "V(lambda) - lambda has no sign change on [" + describe(lo) + ", " + describe(hi) +
                          "] (" + to_string(out.bracket.provenance) + " bracket, " +
                          std::to_string(points + 1) + " scan points, " +
                          std::to_string(out.failed_scan_points.size()) + " inner failures)");
  }
  out.additional_sign_changes = static_cast<int>(changes.size()) - 1;

  auto [a, b] = changes.front();
  warm.clear();
  const bool left_positive = g(a, nullptr) > 0;
  VEvaluation ev;
  double mid = 0.5 * (a + b);
  double gm = 0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (a + b);
    gm = g(mid, &ev);
    ++out.outer_iterations;
    if ((b - a) <= settings.tol && std::abs(gm) <= settings.tol) break;
    if (b - a <= 4 * std::numeric_limits<double>::epsilon() * mid) break;
    if ((gm > 0) == left_positive)
      a = mid;
    else
      b = mid;
  }
  out.lambda = mid;
  out.outer_residual = std::abs(gm);
  out.at_root = std::move(ev);
  return out;
}

}  // namespace stefan
