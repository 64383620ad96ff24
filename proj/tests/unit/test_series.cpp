#include <doctest.h>

#include <omp.h>

#include <random>

#include "forklab/error.hpp"
#include "forklab/series.hpp"

using namespace forklab;

namespace {
PowerSeries P(std::vector<Coef> c) { return PowerSeries(std::move(c)); }

PowerSeries random_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Coef> c(n + 1);
  for (auto& x : c) x = u(rng);
  return PowerSeries(c);
}
}  // namespace

TEST_CASE("coefficients must be non-negative and finite") {
  CHECK_THROWS_AS(P({1, -1}), DomainError);
  CHECK_THROWS_AS(P({1, std::numeric_limits<Coef>::infinity()}), DomainError);
  CHECK_THROWS_AS(combine(P({1, 1}), 1, P({2, 0}), -1), DomainError);
}

TEST_CASE("basic arithmetic") {
  CHECK(multiply(P({1, 1, 0}), P({1, 1, 0})).coeffs() == std::vector<Coef>{1, 2, 1});
  // Truncated at the smaller order.
  CHECK(multiply(P({1, 1}), P({1, 1, 0})).coeffs() == std::vector<Coef>{1, 2});
  CHECK(add(P({1, 2}), P({0, 1, 5})).coeffs() == std::vector<Coef>{1, 3});
  CHECK(scale(P({1, 2}), 0.5).coeffs() == std::vector<Coef>{0.5, 1});
  CHECK(shift(P({1, 2, 3}), 1).coeffs() == std::vector<Coef>{0, 1, 2});
  CHECK(PowerSeries::monomial(3, 2, 4).coeffs() == std::vector<Coef>{0, 0, 3, 0, 0});
  CHECK(P({1, 2, 3}).partial_sum(2) == 3);
  CHECK(P({1, 2, 3}).truncated(1).coeffs() == std::vector<Coef>{1, 2});
}

TEST_CASE("composition") {
  const PowerSeries z2 = PowerSeries::monomial(1, 2, 5);
  CHECK(compose(z2, P({0, 1, 1, 0, 0, 0})).coeffs() == std::vector<Coef>{0, 0, 1, 2, 1, 0});
  CHECK_THROWS_AS(compose(z2, P({1, 1, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("division by 1 - F") {
  // 1/(1 - Z/2) = sum 2^-n Z^n.
  const PowerSeries r = divide_one_minus(P({1, 0, 0, 0}), P({0, 0.5, 0, 0}));
  CHECK(r.coeffs() == std::vector<Coef>{1, 0.5, 0.25, 0.125});
  CHECK_THROWS_AS(divide_one_minus(P({1, 0}), P({0.5, 0})), DomainError);
}

TEST_CASE("parallel product is bitwise the serial product") {
  for (std::size_t n : {0u, 1u, 17u, 600u}) {
    const PowerSeries a = random_series(n, 1 + n), b = random_series(n, 99 + n);
    const PowerSeries s = multiply_serial(a, b);
    for (int threads : {1, 3, 8}) {
      omp_set_num_threads(threads);
      CHECK(multiply(a, b).coeffs() == s.coeffs());
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("dominance") {
  const std::vector<Coef> a = {0.2, 0.3, 0.5};
  CHECK(dominates(a, a));
  // Delaying a stopping time makes it dominate the original.
  const PowerSeries s = P({0.2, 0.3, 0.5, 0});
  CHECK(dominates(shift(s, 1), s));
  CHECK_FALSE(dominates(s, shift(s, 1)));
  CHECK_THROWS_AS(dominates(std::vector<Coef>{1}, std::vector<Coef>{1, 0}), DomainError);
}
