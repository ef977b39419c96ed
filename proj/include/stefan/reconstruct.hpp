#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "stefan/coefficients.hpp"
#include "stefan/kernels.hpp"

namespace stefan {

/// Dimensional solution built from a similarity profile.
class PhysicalSolution {
 public:
  PhysicalSolution(double lambda, double alpha0, BoundaryCondition bc, ProfileGrid profile);

  double lambda() const { return lambda_; }
  double alpha0() const { return alpha0_; }
  const BoundaryCondition& bc() const { return bc_; }
  const ProfileGrid& profile() const { return profile_; }

  /// Monotone cubic interpolant of f on [0, lambda].
  double profile_at(double xi) const;

 private:
  double lambda_;
  double alpha0_;
  BoundaryCondition bc_;
  ProfileGrid profile_;
  std::function<double(double)> interp_;
};

/// Empty beyond the front (xi > lambda), where the liquid-phase model does
/// not define T.
std::optional<double> temperature_at(const PhysicalSolution& sol, double x, double t);

/// s(t) = 2 lambda sqrt(alpha0 t)
double front_position(const PhysicalSolution& sol, double t);
double front_velocity(const PhysicalSolution& sol, double t);

/// |k(T_m) T_x(s,t) + rho0 ell s'(t)| / (rho0 ell s'(t)), with T_x from a
/// second-order one-sided difference of the grid profile. Independent of t.
double stefan_condition_residual(const PhysicalSolution& sol, const ThermalModel& model);

/// `x,t,T` rows on `points` evenly spaced x in [0, s(t)] for each time.
void write_field_csv(std::ostream& out, const PhysicalSolution& sol, const std::vector<double>& times,
                     std::size_t points);
/// `t,s` rows.
void write_front_csv(std::ostream& out, const PhysicalSolution& sol, const std::vector<double>& times);
/// `xi,f` rows on the grid nodes.
void write_profile_csv(std::ostream& out, const ProfileGrid& profile);

}  // namespace stefan
