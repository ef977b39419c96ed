#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "stefan/error.hpp"
#include "stefan/kernels.hpp"
#include "stefan/quadrature.hpp"
#include "support.hpp"

using namespace stefan;
using namespace stefan::testing;
using doctest::Approx;

namespace {

// Plain trapezoid integral of fn over [0, x] with m panels.
double trapezoid(const std::function<double(double)>& fn, double x, int m) {
  const double h = x / m;
  double s = 0.5 * (fn(0) + fn(x));
  for (int i = 1; i < m; ++i) s += fn(i * h);
  return s * h;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("cumulative trapezoid integrates linear data exactly") {
    std::vector<double> y{0, 1, 2, 3, 4};
    const auto c = cumulative_trapezoid(y, 0.5);
    CHECK(c[0] == 0);
    CHECK(c[4] == Approx(4.0));
    CHECK(c[2] == Approx(1.0));
  }

  TEST_CASE("bisection and sign-change scanning") {
    CHECK(bisect_root([](double x) { return x * x - 2; }, 0, 2) == Approx(std::numbers::sqrt2).epsilon(1e-12));
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1; }, 0, 2), StefanError);
    const auto changes = scan_sign_changes([](double x) { return std::sin(x); }, 0.5, 10, 100);
    REQUIRE(changes.size() == 3);
    CHECK(changes[0].first < std::numbers::pi);
    CHECK(changes[0].second > std::numbers::pi);
  }

  TEST_CASE("constant coefficients, Pe = 0, reproduce the erf kernels") {
    const auto prob = problem(constant_unit(1, 0), dirichlet_bc());
    std::mt19937_64 rng(1);
    const auto g = random_profile(rng, 1.0, 512);
    const auto k = eval_kernels(g, prob);
    for (std::size_t i = 0; i <= 512; i += 64) {
      const double xi = g.xi(i);
      CHECK(k.E[i] == Approx(std::exp(-xi * xi)).epsilon(1e-6));
      CHECK(k.Phi[i] == Approx(std::sqrt(std::numbers::pi) / 2 * std::erf(xi)).epsilon(1e-6));
    }
  }

  TEST_CASE("node-0 values and monotonicity") {
    const auto prob = problem(linear_unit(1, 0.1, 0.2, 0.5), dirichlet_bc());
    std::mt19937_64 rng(2);
    const auto k = eval_kernels(random_profile(rng, 0.7, 256), prob);
    CHECK(k.U[0] == 1);
    CHECK(k.I[0] == 1);
    CHECK(k.E[0] == 1);
    CHECK(k.Phi[0] == 0);
    for (std::size_t i = 1; i < k.U.size(); ++i) {
      CHECK(k.U[i] > k.U[i - 1]);
      CHECK(k.I[i] > k.I[i - 1]);
      CHECK(k.Phi[i] >= k.Phi[i - 1]);
      CHECK(k.E[i] > 0);
    }
  }

  TEST_CASE("linear family kernels match a 10x denser trapezoid oracle") {
    const double lambda = 0.5, alpha = 0.1, beta = 0.1, Pe = 0.5;
    const std::size_t n = 2048;
    const auto prob = problem(linear_unit(1, alpha, beta, Pe), dirichlet_bc());
    const auto k = eval_kernels(ProfileGrid::linear(lambda, n), prob);
    auto L = [&](double s) { return 1 + beta * s / lambda; };
    auto N = [&](double s) { return 1 + alpha * s / lambda; };
    auto mu = [&](double s) { return Pe * (1 + alpha * s / lambda); };
    const int dense = 10 * static_cast<int>(n);
    auto U = [&](double z) { return std::exp(2 * trapezoid([&](double s) { return mu(s) / L(s); }, z, std::max(1, static_cast<int>(dense * z / lambda)))); };
    auto I = [&](double z) { return std::exp(2 * trapezoid([&](double s) { return s * N(s) / L(s); }, z, std::max(1, static_cast<int>(dense * z / lambda)))); };
    for (std::size_t i : {std::size_t{0}, n / 4, n / 2, n}) {
      const double z = static_cast<double>(i) * lambda / n;
      CHECK(std::abs(k.U[i] - U(z)) <= 1e-8);
      CHECK(std::abs(k.I[i] - I(z)) <= 1e-8);
    }
    const double phi = trapezoid([&](double s) { return U(s) / I(s) / L(s); }, lambda, 4000);
    CHECK(std::abs(k.Phi[n] - phi) <= 1e-8);
  }

  TEST_CASE("Phi converges at second order under refinement") {
    const auto prob = problem(linear_unit(1, 0.2, 0.2, 0.8), dirichlet_bc());
    auto phi_end = [&](std::size_t n) {
      ProfileGrid g{0.9, std::vector<double>(n + 1)};
      for (std::size_t i = 0; i <= n; ++i) g.f[i] = std::sin(1.3 * g.xi(i)) / std::sin(1.3 * 0.9);
      return eval_kernels(g, prob).Phi.back();
    };
    const double a = phi_end(64), b = phi_end(128), c = phi_end(256);
    const double ratio = (a - b) / (b - c);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
  }

  TEST_CASE("overflow guard") {
    const auto prob = problem(constant_unit(1, 400), dirichlet_bc());
    CHECK_THROWS_AS(eval_kernels(ProfileGrid::linear(1.0, 64), prob), StefanError);
  }

  TEST_CASE("envelopes") {
    SUBCASE("z = 0 collapses every envelope to its node-0 value") {
      const auto env = kernel_bounds(0.8, 16, problem(linear_unit(1, 0.1, 0.1, 0.5), dirichlet_bc()));
      CHECK(env.U.lower[0] == 1);
      CHECK(env.U.upper[0] == 1);
      CHECK(env.E.lower[0] == 1);
      CHECK(env.E.upper[0] == 1);
      CHECK(env.I.lower[0] == 1);
      CHECK(env.Phi.lower[0] == 0);
    }
    SUBCASE("constant coefficients, Pe = 1: E envelope collapses to exp(2z - z^2)") {
      const auto prob = problem(constant_unit(1, 1), dirichlet_bc());
      const auto env = kernel_bounds(1.0, 128, prob);
      const auto k = eval_kernels(ProfileGrid::linear(1.0, 128), prob);
      for (std::size_t i = 0; i <= 128; i += 16) {
        const double z = env.z[i];
        CHECK(env.E.lower[i] == Approx(std::exp(2 * z - z * z)));
        CHECK(env.E.upper[i] == Approx(std::exp(2 * z - z * z)));
        CHECK(k.E[i] == Approx(std::exp(2 * z - z * z)).epsilon(1e-8));
      }
    }
    SUBCASE("upper minus lower is non-negative, linear family") {
      const auto env = kernel_bounds(0.8, 256, problem(linear_unit(1, 0.2, 0.3, 0.4), dirichlet_bc()));
      for (const Envelope* e : {&env.U, &env.I, &env.E, &env.Phi})
        for (std::size_t i = 0; i < e->lower.size(); ++i) CHECK(e->upper[i] >= e->lower[i]);
    }
    SUBCASE("mu_M = 0 substitutes z / L_m for the Phi upper bound") {
      const auto env = kernel_bounds(0.5, 8, problem(linear_unit(1, 0.0, 0.2, 0.0), dirichlet_bc()));
      CHECK(env.phi_upper_substituted);
      CHECK(env.Phi.upper[8] == Approx(0.5));
    }
  }

  TEST_CASE("Lipschitz constants") {
    SUBCASE("constant coefficients give zero") {
      const auto d = lipschitz_constants(0.7, problem(constant_unit(1, 0.5), dirichlet_bc()));
      CHECK(d.D1 == 0);
      CHECK(d.D2 == 0);
      CHECK(d.D3 == 0);
      CHECK(d.D4 == 0);
    }
    SUBCASE("D1 of the linear family") {
      const auto d = lipschitz_constants(0.5, problem(linear_unit(1, 0.1, 0.1, 0.5), dirichlet_bc()));
      const double muM = 0.55, mut = 0.05;
      CHECK(d.D1 == Approx(2 * std::exp(2 * muM) * 0.5 * (muM * 0.1 + mut)));
    }
    SUBCASE("D4 is non-decreasing in z") {
      const auto prob = problem(linear_unit(1, 0.2, 0.1, 0.3), dirichlet_bc());
      double prev = 0;
      for (double z = 0.05; z < 2; z += 0.05) {
        const double d4 = lipschitz_constants(z, prob).D4;
        CHECK(d4 >= prev);
        prev = d4;
      }
    }
    SUBCASE("D5 only for radiative problems") {
      CHECK_FALSE(lipschitz_constants(0.5, problem(constant_unit(1, 0.5), dirichlet_bc())).D5);
      CHECK(lipschitz_constants(0.5, problem(constant_unit(1, 0.5), radiative_bc(0.1, 0.1))).D5);
    }
  }

  TEST_CASE("Phi Lipschitz property on random pairs") {
    const auto prob = problem(linear_unit(1, 0.1, 0.2, 0.5), dirichlet_bc());
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const double lambda = 0.2 + 0.6 * trial / 20.0;
      const auto f1 = random_profile(rng, lambda, 512);
      const auto f2 = random_profile(rng, lambda, 512);
      const auto k1 = eval_kernels(f1, prob), k2 = eval_kernels(f2, prob);
      const double bound = lambda * lipschitz_constants(lambda, prob).D4 * max_abs_diff(f1.f, f2.f);
      CHECK(max_abs_diff(k1.Phi, k2.Phi) <= bound + 1e-8);
    }
  }
}
