#include <doctest.h>

#include <cmath>

#include "stefan/existence.hpp"
#include "stefan/solve.hpp"
#include "support.hpp"

using namespace stefan;
using namespace stefan::testing;
using doctest::Approx;

TEST_SUITE("existence") {
  TEST_CASE("constant coefficients are certified unconditionally") {
    const auto rep = certify(problem(constant_unit(1, 0.5), dirichlet_bc()));
    CHECK(rep.certified);
    CHECK(rep.status == "certified");
    CHECK_FALSE(rep.lambda_bar);
    CHECK(rep.lambda_bar_note == "unconditional contraction");
    CHECK(rep.epsilon_at_lambda2 == 0);
    CHECK(rep.flag(condition::kContractionAtLambda2) == FlagState::Holds);
    CHECK(rep.flag(condition::kRadiativeSelfMap) == FlagState::NotApplicable);
  }

  TEST_CASE("linear family threshold on beta") {
    const double threshold = (std::sqrt(3.0) - 1) / 2;
    for (double beta : {0.1, 0.3, 0.36, 0.37, 0.5}) {
      const auto rep = certify(problem(linear_unit(0.01, 0, beta, 0), dirichlet_bc()));
      CHECK(rep.certified == (beta < threshold));
      CHECK((rep.flag(condition::kLipschitzRatio) == FlagState::Holds) == (2 * (1 + beta) * beta < 1));
    }
  }

  TEST_CASE("lambda_bar solves E(lambda_bar) = 1") {
    const auto prob = problem(linear_unit(1, 0.1, 0.2, 0.4), dirichlet_bc());
    const auto [lambda_bar, note] = contraction_threshold(prob);
    REQUIRE(lambda_bar);
    CHECK(std::abs(contraction_bound(prob, *lambda_bar) - 1) <= 1e-9);
  }

  TEST_CASE("Robin and Dirichlet share lambda_bar") {
    const auto d = contraction_threshold(problem(linear_unit(1, 0.1, 0.2, 0.4), dirichlet_bc())).first;
    const auto h = contraction_threshold(problem(linear_unit(1, 0.1, 0.2, 0.4), robin_bc(3))).first;
    REQUIRE(d);
    REQUIRE(h);
    CHECK(*d == Approx(*h));
  }

  TEST_CASE("contraction already violated at z = 0") {
    const auto [lambda_bar, note] = contraction_threshold(problem(linear_unit(1, 0, 0.5, 0), dirichlet_bc()));
    CHECK_FALSE(lambda_bar);
    CHECK(note.find("at least 1") != std::string::npos);
  }

  TEST_CASE("radiative with a large emissivity fails its hypotheses") {
    const auto rep = certify(problem(constant_unit(0.5, 0.5), radiative_bc(0.1, 50.0)));
    CHECK_FALSE(rep.certified);
    CHECK(rep.flag(condition::kRadiativeContraction) == FlagState::Fails);
    CHECK(rep.flag(condition::kRadiativeLipschitz) == FlagState::Fails);
    CHECK(rep.flag(condition::kLipschitzRatio) == FlagState::NotApplicable);
  }

  TEST_CASE("radiative without convection has no contraction function") {
    const auto rep = certify(problem(constant_unit(0.5, 0.0), radiative_bc(0.1, 0.01)));
    CHECK_FALSE(rep.certified);
    CHECK_FALSE(rep.lambda_bar);
    CHECK(std::isnan(rep.epsilon_at_lambda2));
  }

  TEST_CASE("sampled bounds downgrade to heuristic") {
    const auto rep = certify(problem(table_model(sample_table(), 1, 1, 1, 10), dirichlet_bc()));
    CHECK_FALSE(rep.certified);
    CHECK(rep.status == "heuristic");
  }

  TEST_CASE("certified problems solve inside the analytic bracket") {
    for (const auto& prob : {problem(linear_unit(0.2, 0.1, 0.1, 0.3), dirichlet_bc()),
                             problem(linear_unit(0.2, 0.1, 0.1, 0.3), robin_bc(1.0)),
                             problem(constant_unit(0.5, 0.5), radiative_bc(0.1, 0.01))}) {
      const auto cert = certify(prob);
      REQUIRE(cert.certified);
      CHECK(cert.bracket.provenance == BracketProvenance::Analytic);
      const auto rep = solve_lambda(prob);
      CHECK(rep.lambda >= cert.bracket.lower);
      CHECK(rep.lambda <= cert.bracket.upper * (1 + 1e-3));
    }
  }
}
