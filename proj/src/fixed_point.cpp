#include "stefan/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stefan/error.hpp"

namespace stefan {

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Below this the residual ratio is dominated by rounding.
constexpr double kRatioFloor = 1e-12;

double contraction_bound_or_nan(const DimensionlessProblem& prob, double z) {
  if (prob.kind == BcKind::Radiative && !(prob.mu.max > 0)) return std::nan("");
  return contraction_bound(prob, z);
}

}  // namespace

double radiative_face_gain(const DimensionlessProblem& prob, double f0) {
  const double face_T = (prob.T_m - prob.T_star) * f0 + prob.T_star;
  const double F = std::pow(prob.T_star, 4) - std::pow(face_T, 4);
  return 2 * prob.biot * f0 + prob.r * F;
}

OperatorImage apply_operator(const DimensionlessProblem& prob, const ProfileGrid& profile) {
  return apply_operator(prob, profile, eval_kernels(profile, prob));
}

OperatorImage apply_operator(const DimensionlessProblem& prob, const ProfileGrid& profile,
                             const KernelEval& kernels) {
  const auto& Phi = kernels.Phi;
  const double Phi_end = Phi.back();
  OperatorImage img{ProfileGrid{profile.lambda, std::vector<double>(Phi.size())}, false};
  auto& g = img.profile.f;

  switch (prob.kind) {
    case BcKind::Dirichlet:
      if (!(Phi_end > 0))
        throw StefanError(ErrorKind::InvalidInput, "apply_operator", "Phi(lambda) is not positive");
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = Phi[i] / Phi_end;
      g.back() = 1.0;
      break;
    case BcKind::Neumann:
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = prob.q_star * (Phi_end - Phi[i]);
      g.back() = 0.0;
      break;
    case BcKind::Robin: {
      const double denom = 1 + 2 * prob.biot * Phi_end;
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = (1 + 2 * prob.biot * Phi[i]) / denom;
      g.back() = 1.0;
      break;
    }
    case BcKind::Radiative: {
      const double gain = radiative_face_gain(prob, profile.f.front());
      for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = 1 - gain * (Phi_end - Phi[i]);
        if (g[i] < 0 || g[i] > 1) img.escaped_unit_interval = true;
      }
      g.back() = 1.0;
      break;
    }
  }
  return img;
}

ProfileGrid initial_profile(const DimensionlessProblem& prob, double lambda, std::size_t intervals) {
  if (prob.kind == BcKind::Neumann) return ProfileGrid::constant(lambda, intervals, 0.0);
  return ProfileGrid::linear(lambda, intervals);
}

InnerResult solve_profile(const DimensionlessProblem& prob, double lambda, const InnerSettings& settings,
                          const ProfileGrid& start) {
  if (!(lambda > 0) || !(settings.tol > 0) || settings.max_iter < 1)
    throw StefanError(ErrorKind::InvalidInput, "solve_profile",
                      "need lambda > 0, tol > 0 and max_iter >= 1");
  const bool clamp = prob.kind == BcKind::Radiative && !radiative_self_map_holds(prob);

  InnerResult out;
  out.contraction_theoretical = contraction_bound_or_nan(prob, lambda);

  auto image_of = [&](const ProfileGrid& f) {
    auto img = apply_operator(prob, f).profile;
    if (clamp) {
      for (double& v : img.f) {
        const double c = std::clamp(v, 0.0, 1.0);
        if (c != v) out.clamped = true;
        v = c;
      }
    }
    return img;
  };

  ProfileGrid f{lambda, start.f};
  ProfileGrid g = image_of(f);
  double residual = max_abs_diff(g.f, f.f);
  while (residual > settings.tol && out.iterations < settings.max_iter) {
    f = std::move(g);
    ++out.iterations;
    g = image_of(f);
    const double next = max_abs_diff(g.f, f.f);
    if (out.iterations >= 2 && residual > kRatioFloor) {
      const double ratio = next / residual;
      out.contraction_observed = std::max(out.contraction_observed.value_or(0.0), ratio);
    }
    residual = next;
    if (!std::isfinite(residual)) break;
  }
  out.profile = std::move(f);
  out.residual = residual;
  out.converged = residual <= settings.tol;
  return out;
}

double contraction_bound(const DimensionlessProblem& prob, double z) {
  const auto d = lipschitz_constants(z, prob);
  const double Lm = prob.L.min, LM = prob.L.max, NM = prob.N.max, muM = prob.mu.max;
  switch (prob.kind) {
    case BcKind::Dirichlet:
    case BcKind::Robin:
      return 2 * d.D4 * LM * std::exp(NM / Lm * z * z);
    case BcKind::Neumann:
      return 2 * prob.q_star * z * d.D4;
    case BcKind::Radiative: {
      if (!(muM > 0))
        throw StefanError(ErrorKind::InvalidInput, "contraction_bound",
                          "radiative contraction function is undefined for mu_M = 0");
      const double face = 2 * prob.biot + prob.r * std::pow(prob.T_star, 4);
      return 2 * face * z * d.D4 + std::exp(2 * muM / Lm * z) * (2 * prob.biot + prob.r * prob.D5) / muM;
    }
  }
  return 0;
}

double radiative_self_map_constant(const DimensionlessProblem& prob, bool subtract_melt_term) {
  const double Lm = prob.L.min, LM = prob.L.max, Nm = prob.N.min, muM = prob.mu.max;
  double power = std::pow(prob.T_star, 4);
  if (subtract_melt_term) power -= std::pow(prob.T_m, 4);
  return (2 * prob.biot + prob.r * power) / (Lm * std::sqrt(Nm / LM)) * std::sqrt(std::numbers::pi) *
         std::exp(muM * muM * LM / (Lm * Lm * Nm));
}

bool radiative_self_map_holds(const DimensionlessProblem& prob) {
  return radiative_self_map_constant(prob) <= 1.0;
}

}  // namespace stefan
