#pragma once

#include <functional>
#include <span>
#include <vector>

namespace stefan {

/// Cumulative composite trapezoid on a uniform grid: out[0] = 0 and
/// out[i] approximates the integral of y from node 0 to node i.
std::vector<double> cumulative_trapezoid(std::span<const double> y, double step);

/// Root of fn on [lo, hi] by bisection; fn(lo) and fn(hi) must differ in sign.
/// Stops when the bracket is narrower than x_tol.
double bisect_root(const std::function<double(double)>& fn, double lo, double hi,
                   double x_tol = 1e-13);

/// Sub-intervals of a uniform scan of [lo, hi] (points+1 samples) on which fn
/// changes sign, in left-to-right order. Samples where fn is NaN are skipped;
/// infinities count with their sign.
std::vector<std::pair<double, double>> scan_sign_changes(const std::function<double(double)>& fn,
                                                         double lo, double hi, int points);

}  // namespace stefan
