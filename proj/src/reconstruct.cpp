#include "stefan/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

// Boost 1.74's pchip calls isnan unqualified; make std::isnan visible to it.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>

#include "stefan/error.hpp"
#include "stefan/format.hpp"

namespace stefan {

namespace {

std::function<double(double)> make_interp(const ProfileGrid& profile) {
  if (profile.f.size() < 4)
    throw StefanError(ErrorKind::InvalidInput, "reconstruct", "profile needs at least 4 nodes");
  return boost::math::interpolators::pchip<std::vector<double>>(profile.nodes(), std::vector<double>(profile.f));
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << shortest(v);
    first = false;
  }
  out << '\n';
}

}  // namespace

PhysicalSolution::PhysicalSolution(double lambda, double alpha0, BoundaryCondition bc, ProfileGrid profile)
    : lambda_(lambda),
      alpha0_(alpha0),
      bc_(std::move(bc)),
      profile_(std::move(profile)),
      interp_(make_interp(profile_)) {
  if (!(lambda > 0) || !(alpha0 > 0))
    throw StefanError(ErrorKind::InvalidInput, "reconstruct", "lambda and alpha0 must be positive");
}

double PhysicalSolution::profile_at(double xi) const { return interp_(std::clamp(xi, 0.0, lambda_)); }

std::optional<double> temperature_at(const PhysicalSolution& sol, double x, double t) {
  if (!(t > 0) || !std::isfinite(x))
    throw StefanError(ErrorKind::InvalidInput, "reconstruct", "temperature_at needs finite x and t > 0");
  const double xi = x / (2 * std::sqrt(sol.alpha0() * t));
  if (xi > sol.lambda()) return std::nullopt;
  return temperature_of_profile(sol.bc(), sol.profile_at(xi));
}

double front_position(const PhysicalSolution& sol, double t) {
  return 2 * sol.lambda() * std::sqrt(sol.alpha0() * t);
}

double front_velocity(const PhysicalSolution& sol, double t) {
  return sol.lambda() * std::sqrt(sol.alpha0() / t);
}

double stefan_condition_residual(const PhysicalSolution& sol, const ThermalModel& model) {
  const auto& f = sol.profile().f;
  const std::size_t n = sol.profile().intervals();
  const double df = (3 * f[n] - 4 * f[n - 1] + f[n - 2]) / (2 * sol.profile().step());
  const double dT_df = temperature_of_profile(sol.bc(), 1.0) - temperature_of_profile(sol.bc(), 0.0);
  // At t = 1: T_x = dT/df f'(lambda) / (2 sqrt(alpha0)); both terms scale as 1/sqrt(t).
  const double t = 1.0;
  const double Tx = dT_df * df / (2 * std::sqrt(sol.alpha0() * t));
  const double latent = model.rho0 * model.ell * front_velocity(sol, t);
  return std::abs(model.k(sol.bc().T_m) * Tx + latent) / latent;
}

void write_field_csv(std::ostream& out, const PhysicalSolution& sol, const std::vector<double>& times,
                     std::size_t points) {
  out << "x,t,T\n";
  if (points < 2) points = 2;
  for (double t : times) {
    const double s = front_position(sol, t);
    for (std::size_t i = 0; i < points; ++i) {
      const double x = s * static_cast<double>(i) / static_cast<double>(points - 1);
      const auto T = temperature_at(sol, std::min(x, s), t);
      write_row(out, {x, t, T.value_or(sol.bc().T_m)});
    }
  }
}

void write_front_csv(std::ostream& out, const PhysicalSolution& sol, const std::vector<double>& times) {
  out << "t,s\n";
  for (double t : times) write_row(out, {t, front_position(sol, t)});
}

void write_profile_csv(std::ostream& out, const ProfileGrid& profile) {
  out << "xi,f\n";
  for (std::size_t i = 0; i < profile.f.size(); ++i) write_row(out, {profile.xi(i), profile.f[i]});
}

}  // namespace stefan
