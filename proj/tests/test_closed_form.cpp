#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stefan/closed_form.hpp"
#include "stefan/error.hpp"
#include "stefan/solve.hpp"
#include "support.hpp"

using namespace stefan;
using namespace stefan::testing;
using doctest::Approx;

TEST_SUITE("closed_form") {
  TEST_CASE("Dirichlet oracle") {
    const auto s = dirichlet_constant(1.0, 0.0);
    CHECK(s.lambda == Approx(0.6201).epsilon(1e-4));
    CHECK(std::abs(dirichlet_constant_residual(0.5, 1.0, dirichlet_constant(0.5, 1.0).lambda)) <= 1e-10);
    CHECK(s.profile(0) == 0);
    CHECK(s.profile(s.lambda) == Approx(1.0));
    CHECK(dirichlet_constant(1e-8, 0.0).lambda < 1e-3);
    CHECK_THROWS_AS(dirichlet_constant(-1, 0), StefanError);
    CHECK_THROWS_AS(dirichlet_constant(100, 0, 0.5), StefanError);
  }

  TEST_CASE("Neumann oracle") {
    const auto s = neumann_constant(0.5, 0.0);
    CHECK(s.lambda * std::exp(s.lambda * s.lambda) == Approx(0.5).epsilon(1e-12));
    CHECK(s.profile(s.lambda) == Approx(0.0));
    CHECK(s.unique);
    CHECK(neumann_constant(0.5, std::numbers::sqrt2).unique);
    CHECK(neumann_constant(1e-9, 0.0).lambda < 1e-6);
  }

  TEST_CASE("Neumann roots beyond Pe = sqrt(2) are all reported") {
    // lambda exp(lambda^2 - 2 lambda Pe) has a local max and min for Pe > sqrt(2).
    const double Pe = 2.0;
    const auto s = neumann_constant(0.05, Pe);
    CHECK_FALSE(s.unique);
    REQUIRE(s.roots.size() == 3);
    CHECK(s.lambda == s.roots.front());
    for (double r : s.roots) CHECK(std::abs(neumann_constant_residual(0.05, Pe, r)) <= 1e-10);
  }

  TEST_CASE("generic pipeline reproduces the oracles") {
    for (double Ste : {0.1, 0.5, 1.0, 2.0})
      for (double Pe : {0.0, 0.5, 1.0}) {
        const auto rep = solve_lambda(problem(constant_unit(Ste, Pe), dirichlet_bc()));
        const auto oracle = dirichlet_constant(Ste, Pe);
        CHECK(std::abs(rep.lambda - oracle.lambda) <= 1e-6);
        for (std::size_t i = 0; i < rep.profile.f.size(); ++i)
          CHECK(std::abs(rep.profile.f[i] - oracle.profile(rep.profile.xi(i))) <= 1e-6);
      }
    // The Neumann profile scales with q*, so the 1e-6 profile match needs a finer grid.
    OuterSettings fine;
    fine.grid = 2048;
    for (double load : {0.1, 0.5, 1.0})
      for (double Pe : {0.0, 0.5, 1.0}) {
        const auto prob = problem(constant_unit(1, Pe), neumann_bc(load));
        const auto rep = solve_lambda(prob, fine);
        const auto oracle = neumann_constant(load, Pe, prob.q_star);
        CHECK(std::abs(rep.lambda - oracle.lambda) <= 1e-6);
        for (std::size_t i = 0; i < rep.profile.f.size(); ++i)
          CHECK(std::abs(rep.profile.f[i] - oracle.profile(rep.profile.xi(i))) <= 1e-6);
      }
  }
}
