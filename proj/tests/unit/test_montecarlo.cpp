#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "forklab/error.hpp"
#include "forklab/montecarlo.hpp"
#include "forklab/settlement_dp.hpp"
#include "oracles.hpp"

using namespace forklab;

namespace {

McConfig cfg(std::uint64_t samples, std::uint64_t seed = 1) { return McConfig{samples, seed}; }

// |estimate - exact| within three standard errors plus the horizon bias.
void check_agrees(const Estimate& e, double exact) {
  REQUIRE(e.sufficient());
  const double slack = 3.0 * e.std_error + e.horizon_error + 1e-12;
  CHECK_MESSAGE(std::abs(e.value - exact) <= slack, "estimate " << e.value << " exact " << exact << " se "
                                                                << e.std_error << " horizon " << e.horizon_error);
}

}  // namespace

TEST_CASE("degenerate parameters") {
  // No uniquely honest symbols at all.
  CHECK(estimate_no_unique_catalan(10, 0.3, 0.0, cfg(5000)).value == 1.0);
  // eps = 1 with every slot uniquely honest: each one is Catalan.
  CHECK(estimate_no_unique_catalan(5, 1.0, 1.0, cfg(5000)).value == 0.0);
  CHECK(estimate_no_two_catalan(5, 1.0, cfg(5000)).value == 0.0);
  // Zero horizon: the margin starts at the reach, which is never negative.
  CHECK(estimate_settlement_violation(0, 0.3, 0.5, cfg(5000)).value == 1.0);
  // Without an adversary the margin drops below zero at the first h.
  CHECK(estimate_settlement_violation(3, 0.0, 1.0, cfg(5000)).value == 0.0);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(estimate_no_unique_catalan(5, 0.0, 0.2, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_no_unique_catalan(5, 0.4, 0.9, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_no_unique_catalan(-1, 0.4, 0.2, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_settlement_violation(5, 0.5, 0.2, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_delta_walk(0, 0, 0.2, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_delta_walk(-1, 5, 0.2, cfg(10)), DomainError);
  CHECK_THROWS_AS(estimate_no_two_catalan(5, 0.2, cfg(0)), DomainError);
}

TEST_CASE("results depend on the seed only") {
  const McConfig c = cfg(3 * kChunk + 123, 99);
  const Estimate a = estimate_no_unique_catalan(12, 0.3, 0.25, c);
  const Estimate b = estimate_no_unique_catalan(12, 0.3, 0.25, c);
  CHECK(a.hits == b.hits);
  CHECK(a.horizon_error == b.horizon_error);
  CHECK(a.samples == c.samples);
  CHECK(a.seed == 99);

  const int saved = omp_get_max_threads();
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(estimate_no_unique_catalan(12, 0.3, 0.25, c).hits == a.hits);
    CHECK(estimate_settlement_violation(20, 0.3, 0.3, c).hits == estimate_settlement_violation(20, 0.3, 0.3, c).hits);
  }
  omp_set_num_threads(saved);

  CHECK(estimate_no_unique_catalan(12, 0.3, 0.25, cfg(c.samples, 100)).hits != a.hits);
}

TEST_CASE("settlement estimate against the DP") {
  DpParams p;
  p.k = 100;
  p.alpha = 0.4;
  p.p_h = 0.6;
  const double exact = violation_prob(p);
  CHECK(exact == doctest::Approx(1.37e-1).epsilon(5e-3));
  check_agrees(estimate_settlement_violation(100, 0.4, 0.6, cfg(400000, 5)), exact);

  p.k = 30;
  p.alpha = 0.25;
  p.p_h = 0.3;
  check_agrees(estimate_settlement_violation(30, 0.25, 0.3, cfg(400000, 6)), violation_prob(p));
}

TEST_CASE("window estimates against exhaustive sums") {
  // No warm-up: the exhaustive sums place the window at the start.
  for (double eps : {0.2, 0.5}) {
    const double q = (1 + eps) / 2;
    for (double q_h : {0.3 * q, q}) {
      const double exact = static_cast<double>(oracle::no_unique_catalan_exact(8, eps, q_h));
      check_agrees(estimate_no_unique_catalan(8, eps, q_h, cfg(200000, 11), 0), exact);
    }
    check_agrees(estimate_no_two_catalan(8, eps, cfg(200000, 12), 0), static_cast<double>(oracle::no_two_catalan_exact(8, eps)));
  }
}

TEST_CASE("delta walk") {
  for (int delta : {0, 2, 5}) {
    const double exact = static_cast<double>(oracle::delta_walk_exact(delta, 30, 0.3));
    check_agrees(estimate_delta_walk(delta, 30, 0.3, cfg(200000, 21)), exact);
  }
  // One sample path serves every delta, so the events nest exactly.
  const Estimate tight = estimate_delta_walk(0, 40, 0.2, cfg(50000, 3));
  const Estimate loose = estimate_delta_walk(4, 40, 0.2, cfg(50000, 3));
  CHECK(tight.hits <= loose.hits);
  CHECK(tight.value < loose.value);
}

TEST_CASE("few hits are flagged") {
  const Estimate e = estimate_settlement_violation(200, 0.05, 0.9, cfg(2000));
  CHECK(e.hits < 25);
  CHECK_FALSE(e.sufficient());
  CHECK(e.samples == 2000);
}
