#include <doctest.h>

#include <cmath>
#include <random>

#include "stefan/fixed_point.hpp"
#include "support.hpp"

using namespace stefan;
using namespace stefan::testing;
using doctest::Approx;

TEST_SUITE("fixed_point") {
  TEST_CASE("Dirichlet image has the endpoint values 0 and 1") {
    const auto prob = problem(linear_unit(1, 0.2, 0.2, 0.3), dirichlet_bc());
    std::mt19937_64 rng(4);
    const auto img = apply_operator(prob, random_profile(rng, 0.6, 128)).profile;
    CHECK(img.f.front() == 0);
    CHECK(img.f.back() == 1);
  }

  TEST_CASE("constant coefficients, Pe = 1: image is the erf ratio") {
    const double Pe = 1, lambda = 0.5;
    const auto prob = problem(constant_unit(1, Pe), dirichlet_bc());
    const auto img = apply_operator(prob, ProfileGrid::constant(lambda, 512, 0.3)).profile;
    const double den = std::erf(Pe) - std::erf(Pe - lambda);
    for (std::size_t i = 0; i <= 512; ++i)
      CHECK(std::abs(img.f[i] - (std::erf(Pe) - std::erf(Pe - img.xi(i))) / den) <= 1e-6);
  }

  TEST_CASE("radiative with Bi = 0 and epsilon = 0 maps to the constant 1") {
    const auto prob = problem(constant_unit(1, 0.5), radiative_bc(0.0, 0.0));
    std::mt19937_64 rng(5);
    const auto img = apply_operator(prob, random_profile(rng, 0.5, 64)).profile;
    for (double v : img.f) CHECK(v == Approx(1.0));
  }

  TEST_CASE("Neumann image vanishes at the front") {
    const auto prob = problem(constant_unit(1, 0.5), neumann_bc(0.5));
    const auto img = apply_operator(prob, ProfileGrid::constant(0.5, 64, 0.0)).profile;
    CHECK(img.f.back() == 0);
    CHECK(img.f.front() > 0);
  }

  TEST_CASE("constant coefficients converge after one operator application") {
    // The radiative image depends on f(0) through G, so it is excluded here.
    for (const auto& bc : {dirichlet_bc(), neumann_bc(0.5), robin_bc(1.0)}) {
      const auto prob = problem(constant_unit(1, 0.5), bc);
      const auto r = solve_profile(prob, 0.5, {}, initial_profile(prob, 0.5, 256));
      CHECK(r.converged);
      CHECK(r.iterations == 1);
      CHECK_FALSE(r.contraction_observed);
    }
  }

  TEST_CASE("constant coefficients, radiative face: converges with a small observed ratio") {
    const auto prob = problem(constant_unit(0.5, 0.5), radiative_bc(0.1, 0.01));
    const auto r = solve_profile(prob, 0.3, {}, initial_profile(prob, 0.3, 256));
    CHECK(r.converged);
    REQUIRE(r.contraction_observed);
    CHECK(*r.contraction_observed < contraction_bound(prob, 0.3));
  }

  TEST_CASE("linear family contracts at the predicted rate") {
    const auto prob = problem(linear_unit(1, 0.1, 0.1, 0.5), dirichlet_bc());
    const auto r = solve_profile(prob, 0.4, {1e-10, 200}, initial_profile(prob, 0.4, 512));
    CHECK(r.converged);
    CHECK(r.residual <= 1e-10);
    REQUIRE(r.contraction_observed);
    CHECK(*r.contraction_observed <= contraction_bound(prob, 0.4) + 0.05);
    CHECK(r.contraction_theoretical == Approx(contraction_bound(prob, 0.4)));
  }

  TEST_CASE("converged profiles are monotone and stay fixed") {
    SUBCASE("Dirichlet") {
      const auto prob = problem(linear_unit(1, 0.2, 0.2, 0.5), dirichlet_bc());
      const auto r = solve_profile(prob, 0.5, {}, initial_profile(prob, 0.5, 256));
      for (std::size_t i = 1; i < r.profile.f.size(); ++i) CHECK(r.profile.f[i] >= r.profile.f[i - 1]);
      const auto again = apply_operator(prob, r.profile).profile;
      CHECK(max_abs_diff(again.f, r.profile.f) <= r.residual * 1.0000001);
    }
    SUBCASE("Neumann with a large load may exceed 1 and still converges") {
      const auto prob = problem(linear_model(1, 1, 1, 1, 0.1, 0.1, 0.2, 2.0, 1.0), neumann_bc(2.0));
      const auto r = solve_profile(prob, 0.8, {}, initial_profile(prob, 0.8, 256));
      CHECK(r.converged);
      CHECK(r.profile.f.back() == 0);
      CHECK(r.profile.f.front() > 1);
      for (std::size_t i = 1; i < r.profile.f.size(); ++i) CHECK(r.profile.f[i] <= r.profile.f[i - 1]);
    }
  }

  TEST_CASE("non-convergence is reported, not thrown") {
    const auto prob = problem(linear_unit(1, 0.2, 0.3, 0.5), dirichlet_bc());
    const auto r = solve_profile(prob, 0.6, {1e-14, 2}, initial_profile(prob, 0.6, 64));
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 2);
  }

  TEST_CASE("contraction functions") {
    CHECK(contraction_bound(problem(constant_unit(1, 0.5), dirichlet_bc()), 0.8) == 0);
    const auto lin = problem(linear_unit(1, 0, 0.1, 0), dirichlet_bc());
    CHECK(contraction_bound(lin, 1e-12) == Approx(0.22));
    const auto robin = problem(linear_unit(1, 0.1, 0.2, 0.3), robin_bc(2.0));
    const auto dir = problem(linear_unit(1, 0.1, 0.2, 0.3), dirichlet_bc());
    for (double z : {0.1, 0.4, 0.9}) CHECK(contraction_bound(robin, z) == Approx(contraction_bound(dir, z)));
  }

  TEST_CASE("empirical contraction on random pairs, every operator") {
    std::mt19937_64 rng(6);
    const std::vector<DimensionlessProblem> probs = {
        problem(linear_unit(0.5, 0.1, 0.1, 0.5), dirichlet_bc()),
        problem(linear_model(1, 1, 1, 1, 0.1, 0.1, 0.5, 2.0, 1.0), neumann_bc(0.3)),
        problem(linear_unit(0.5, 0.1, 0.1, 0.5), robin_bc(1.0)),
        problem(linear_unit(0.5, 0.1, 0.1, 0.5), radiative_bc(0.1, 0.01)),
    };
    for (const auto& prob : probs)
      for (double lambda : {0.1, 0.2, 0.3}) {
        const auto f1 = random_profile(rng, lambda, 256), f2 = random_profile(rng, lambda, 256);
        const double lhs = max_abs_diff(apply_operator(prob, f1).profile.f, apply_operator(prob, f2).profile.f);
        CHECK(lhs <= contraction_bound(prob, lambda) * max_abs_diff(f1.f, f2.f) + 1e-6);
      }
  }

  TEST_CASE("radiative self-map constant") {
    const auto ok = problem(constant_unit(0.5, 0.5), radiative_bc(0.1, 0.0));
    CHECK(radiative_self_map_holds(ok));
    const auto bad = problem(constant_unit(0.5, 0.5), radiative_bc(2.0, 0.0));
    CHECK_FALSE(radiative_self_map_holds(bad));
    CHECK(radiative_self_map_constant(ok, true) <= radiative_self_map_constant(ok));
  }
}
