#include "stefan/quadrature.hpp"

#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

#include "stefan/error.hpp"

namespace stefan {

std::vector<double> cumulative_trapezoid(std::span<const double> y, double step) {
  std::vector<double> out(y.size(), 0.0);
  double acc = 0;
  for (std::size_t i = 1; i < y.size(); ++i) {
    acc += 0.5 * step * (y[i - 1] + y[i]);
    out[i] = acc;
  }
  return out;
}

double bisect_root(const std::function<double(double)>& fn, double lo, double hi, double x_tol) {
  const double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if ((f_lo < 0) == (f_hi < 0))
    throw StefanError(ErrorKind::NoRoot, "bisect_root",
                      "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  std::uintmax_t max_iter = 400;
  auto done = [x_tol](double a, double b) { return std::abs(b - a) <= x_tol; };
  auto [a, b] = boost::math::tools::bisect(fn, lo, hi, done, max_iter);
  return 0.5 * (a + b);
}

std::vector<std::pair<double, double>> scan_sign_changes(const std::function<double(double)>& fn,
                                                         double lo, double hi, int points) {
  std::vector<std::pair<double, double>> out;
  double prev_x = lo;
  double prev_v = fn(lo);
  for (int i = 1; i <= points; ++i) {
    const double x = lo + (hi - lo) * i / points;
    const double v = fn(x);
    if (std::isnan(v)) continue;
    if (!std::isnan(prev_v) && (prev_v < 0) != (v < 0)) out.emplace_back(prev_x, x);
    prev_x = x;
    prev_v = v;
  }
  return out;
}

}  // namespace stefan
