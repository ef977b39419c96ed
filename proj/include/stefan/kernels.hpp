#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stefan/coefficients.hpp"

namespace stefan {

/// Similarity profile f sampled at n+1 uniformly spaced nodes of [0, lambda].
struct ProfileGrid {
  double lambda = 0;
  std::vector<double> f;

  std::size_t intervals() const { return f.size() - 1; }
  double step() const { return lambda / static_cast<double>(intervals()); }
  double xi(std::size_t i) const {
    return i == intervals() ? lambda : static_cast<double>(i) * step();
  }
  std::vector<double> nodes() const;

  static ProfileGrid linear(double lambda, std::size_t intervals);
  static ProfileGrid constant(double lambda, std::size_t intervals, double value);
};

/// Nested kernels of a profile, aligned with its grid.
///   U = exp(2 int mu*/L*),  I = exp(2 int s N*/L*),  E = U/I,  Phi = int E/L*.
struct KernelEval {
  std::vector<double> U, I, E, Phi;
};

/// Exponents beyond this abort the evaluation rather than produce infinities.
inline constexpr double kMaxExponent = 700.0;

/// Throws StefanError(Overflow) naming the node whose exponent is too large,
/// and StefanError(InvalidInput) on non-finite or non-positive coefficients.
KernelEval eval_kernels(const ProfileGrid& profile, const DimensionlessProblem& prob);

struct Envelope {
  std::vector<double> lower, upper;
};

/// Node-wise analytic envelopes of the kernels for any admissible profile.
/// U and I use the weaker lower bounds exp(2 mu_m z / L_M) and 1.
struct KernelEnvelopes {
  std::vector<double> z;
  Envelope U, I, E, Phi;
  /// True when mu_M = 0 and Phi's upper bound is the direct z / L_m.
  bool phi_upper_substituted = false;
};

KernelEnvelopes kernel_bounds(double lambda, std::size_t intervals, const DimensionlessProblem& prob);

struct LipschitzConstants {
  double D1 = 0, D2 = 0, D3 = 0, D4 = 0;
  std::optional<double> D5;  // radiative problems only
};

/// D1(z)..D4(z) as printed in the kernel Lipschitz lemma; note D1 carries
/// exp(2 mu_M / L_m) without a factor z in the exponent.
LipschitzConstants lipschitz_constants(double z, const DimensionlessProblem& prob);

}  // namespace stefan
