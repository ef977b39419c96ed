#include "stefan/pde_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stefan/error.hpp"

namespace stefan {

namespace {

constexpr double kBlowUpFactor = 10.0;

// Face value from a one-sided second-order flux condition, k lagged at the old value.
double face_value(const BoundaryCondition& bc, const ThermalModel& model, double u0, double u1, double u2,
                  double dy, double s, double t) {
  const double a = model.k(u0) / (2 * dy * s);  // k u_y(0) / s = a (-3 u0 + 4 u1 - u2)
  const double inner = a * (4 * u1 - u2);
  const double root_t = std::sqrt(t);
  return std::visit(
      [&](const auto& face) -> double {
        using F = std::decay_t<decltype(face)>;
        if constexpr (std::is_same_v<F, Dirichlet>) {
          return face.T_star;
        } else if constexpr (std::is_same_v<F, Neumann>) {
          // k T_x(0) = -q / sqrt(t)
          return (inner + face.q / root_t) / (3 * a);
        } else if constexpr (std::is_same_v<F, Robin>) {
          // k T_x(0) = h (T(0) - T*) / sqrt(t)
          const double b = face.h / root_t;
          return (inner + b * face.T_star) / (3 * a + b);
        } else {
          // k T_x(0) = (h (T(0) - T*) + sigma eps (T(0)^4 - T*^4)) / sqrt(t), by Newton.
          const double bh = face.h / root_t;
          const double bs = face.sigma * face.epsilon / root_t;
          const double rhs = inner + bh * face.T_star + bs * std::pow(face.T_star, 4);
          double x = u0;
          for (int it = 0; it < 50; ++it) {
            const double g = (3 * a + bh) * x + bs * x * x * x * x - rhs;
            const double dg = 3 * a + bh + 4 * bs * x * x * x;
            const double step = g / dg;
            x -= step;
            if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) break;
          }
          return x;
        }
      },
      bc.face);
}

}  // namespace

PdeDiscrepancy verify(const PhysicalSolution& sol, const ThermalModel& model, const BoundaryCondition& bc,
                      const FrontFixedScheme& scheme) {
  if (!(scheme.t0 > 0) || scheme.t1 < scheme.t0)
    throw StefanError(ErrorKind::InvalidInput, "verify-pde", "need 0 < t0 <= t1");
  if (scheme.nodes < 4) throw StefanError(ErrorKind::InvalidInput, "verify-pde", "need at least 4 nodes");
  if (!(scheme.safety > 0) || scheme.safety > 0.5)
    throw StefanError(ErrorKind::InvalidInput, "verify-pde", "safety factor must lie in (0, 0.5]");

  const CoefficientBounds cb = resolve_bounds(model, default_temperature_range(bc)).first;
  const std::size_t N = scheme.nodes;
  const double dy = 1.0 / static_cast<double>(N - 1);
  const double T_m = bc.T_m;
  const double span = std::abs(temperature_of_profile(bc, 0.0) - temperature_of_profile(bc, 1.0));

  // In y the similarity field does not depend on t.
  std::vector<double> u_sim(N);
  for (std::size_t j = 0; j < N; ++j) u_sim[j] = temperature_of_profile(bc, sol.profile_at(sol.lambda() * j * dy));
  std::vector<double> u = u_sim, next(N);
  u.back() = T_m;
  double s = front_position(sol, scheme.t0);
  double t = scheme.t0;

  double initial_range = 0;
  for (double v : u) initial_range = std::max(initial_range, std::abs(v - T_m));
  const double blow_up = kBlowUpFactor * std::max(initial_range, 1e-300);

  PdeDiscrepancy rep;
  rep.nodes = N;
  const double latent = model.rho0 * model.ell;
  const double k_front = model.k(T_m);

  while (t < scheme.t1) {
    double dt = scheme.safety * dy * dy * s * s * cb.rho_c_min / cb.k_max;
    if (t + dt > scheme.t1) dt = scheme.t1 - t;
    const double u_y_front = (u[N - 1] - u[N - 2]) / dy;
    const double s_dot = -k_front * u_y_front / (s * latent);
    const double root_t = std::sqrt(t);

    for (std::size_t j = 1; j + 1 < N; ++j) {
      const double y = j * dy;
      const double u_y = (u[j + 1] - u[j - 1]) / (2 * dy);
      const double k_plus = 0.5 * (model.k(u[j]) + model.k(u[j + 1]));
      const double k_minus = 0.5 * (model.k(u[j]) + model.k(u[j - 1]));
      const double diffusion = (k_plus * (u[j + 1] - u[j]) - k_minus * (u[j] - u[j - 1])) / (dy * dy * s * s);
      const double advection = model.mu(u[j]) / root_t * u_y / s;
      next[j] = u[j] + dt * (y * s_dot / s * u_y + (diffusion - advection) / model.rho_c(u[j]));
    }
    next[N - 1] = T_m;
    s += dt * s_dot;
    t += dt;
    next[0] = face_value(bc, model, u[0], next[1], next[2], dy, s, t);
    u.swap(next);
    ++rep.steps;

    for (std::size_t j = 0; j < N; ++j) {
      if (!(std::abs(u[j] - T_m) <= blow_up))
        throw StefanError(ErrorKind::NonConvergence, "verify-pde",
                          "instability at t=" + std::to_string(t) + ", node " + std::to_string(j) +
                              ": |T - T_m| exceeds 10x the initial range");
      rep.T_rel_max = std::max(rep.T_rel_max, std::abs(u[j] - u_sim[j]) / span);
    }
    const double s_exact = front_position(sol, t);
    rep.s_rel_max = std::max(rep.s_rel_max, std::abs(s - s_exact) / s_exact);
  }

  rep.final_time = t;
  rep.s_numeric = s;
  rep.s_similarity = front_position(sol, t);
  rep.s_rel_final = std::abs(s - rep.s_similarity) / rep.s_similarity;
  return rep;
}

}  // namespace stefan
