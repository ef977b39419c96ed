#include "stefan/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stefan/error.hpp"
#include "stefan/quadrature.hpp"

namespace stefan {

std::vector<double> ProfileGrid::nodes() const {
  std::vector<double> xs(f.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = xi(i);
  return xs;
}

ProfileGrid ProfileGrid::linear(double lambda, std::size_t intervals) {
  ProfileGrid g{lambda, std::vector<double>(intervals + 1)};
  for (std::size_t i = 0; i <= intervals; ++i)
    g.f[i] = static_cast<double>(i) / static_cast<double>(intervals);
  return g;
}

ProfileGrid ProfileGrid::constant(double lambda, std::size_t intervals, double value) {
  return ProfileGrid{lambda, std::vector<double>(intervals + 1, value)};
}

KernelEval eval_kernels(const ProfileGrid& profile, const DimensionlessProblem& prob) {
  const std::string stage = "eval_kernels";
  const std::size_t count = profile.f.size();
  if (count < 2 || !(profile.lambda > 0))
    throw StefanError(ErrorKind::InvalidInput, stage, "profile grid needs lambda > 0 and two nodes");
  const double h = profile.step();

  std::vector<double> inv_L(count), drift(count), sink(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = profile.f[i];
    const double L = prob.conductivity(f);
    const double N = prob.capacity(f);
    const double mu = prob.speed(f);
    if (!std::isfinite(L) || !std::isfinite(N) || !std::isfinite(mu) || !(L > 0))
      throw StefanError(ErrorKind::InvalidInput, stage,
                        "non-finite or non-positive coefficient at node " + std::to_string(i) +
                            " (f=" + std::to_string(f) + ")");
    inv_L[i] = 1.0 / L;
    drift[i] = 2.0 * mu * inv_L[i];
    sink[i] = 2.0 * profile.xi(i) * N * inv_L[i];
  }

  const auto log_U = cumulative_trapezoid(drift, h);
  const auto log_I = cumulative_trapezoid(sink, h);

  KernelEval k;
  k.U.resize(count);
  k.I.resize(count);
  k.E.resize(count);
  std::vector<double> weight(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double log_E = log_U[i] - log_I[i];
    for (double e : {log_U[i], log_I[i], log_E})
      if (e > kMaxExponent)
        throw StefanError(ErrorKind::Overflow, stage,
                          "kernel exponent " + std::to_string(e) + " at node " + std::to_string(i) +
                              " (xi=" + std::to_string(profile.xi(i)) + ")");
    k.U[i] = std::exp(log_U[i]);
    k.I[i] = std::exp(log_I[i]);
    k.E[i] = std::exp(log_E);
    weight[i] = k.E[i] * inv_L[i];
  }
  k.Phi = cumulative_trapezoid(weight, h);
  return k;
}

KernelEnvelopes kernel_bounds(double lambda, std::size_t intervals, const DimensionlessProblem& prob) {
  if (!(lambda > 0) || intervals < 1)
    throw StefanError(ErrorKind::InvalidInput, "kernel_bounds", "lambda must be positive");
  const double Lm = prob.L.min, LM = prob.L.max;
  const double Nm = prob.N.min, NM = prob.N.max;
  const double mum = prob.mu.min, muM = prob.mu.max;

  KernelEnvelopes env;
  env.phi_upper_substituted = !(muM > 0);
  const std::size_t count = intervals + 1;
  env.z.resize(count);
  for (auto* e : {&env.U, &env.I, &env.E, &env.Phi}) {
    e->lower.resize(count);
    e->upper.resize(count);
  }
  const double erf_scale = std::sqrt(NM / Lm);
  const double phi_low_coeff = 0.5 * std::sqrt(std::numbers::pi) * std::sqrt(Lm) / (LM * std::sqrt(NM));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = i == intervals ? lambda : lambda * static_cast<double>(i) / static_cast<double>(intervals);
    env.z[i] = z;
    env.U.lower[i] = std::exp(2 * mum / LM * z);
    env.U.upper[i] = std::exp(2 * muM / Lm * z);
    env.I.lower[i] = 1.0;
    env.I.upper[i] = std::exp(NM / Lm * z * z);
    env.E.lower[i] = std::exp(2 * mum / LM * z - NM / Lm * z * z);
    env.E.upper[i] = std::exp(2 * muM / Lm * z - Nm / LM * z * z);
    env.Phi.lower[i] = phi_low_coeff * std::erf(erf_scale * z);
    env.Phi.upper[i] = env.phi_upper_substituted ? z / Lm : std::exp(2 * muM / Lm * z) / (2 * muM);
  }
  return env;
}

LipschitzConstants lipschitz_constants(double z, const DimensionlessProblem& prob) {
  const double Lm = prob.L.min, Lt = prob.L.lipschitz;
  const double NM = prob.N.max, Nt = prob.N.lipschitz;
  const double muM = prob.mu.max, mut = prob.mu.lipschitz;

  LipschitzConstants d;
  d.D1 = 2 * std::exp(2 * muM / Lm) / (Lm * Lm) * z * (muM * Lt + Lm * mut);
  d.D2 = std::exp(NM / Lm * z * z) / (Lm * Lm) * z * z * (NM * Lt + Lm * Nt);
  d.D3 = std::exp(NM / Lm * z * z) * d.D1 + std::exp(2 * muM / Lm * z) * d.D2;
  d.D4 = (Lt * std::exp(2 * z * muM / Lm) + Lm * d.D3) / (Lm * Lm);
  if (prob.kind == BcKind::Radiative) d.D5 = prob.D5;
  return d;
}

}  // namespace stefan
