#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "forklab/error.hpp"
#include "forklab/settlement_dp.hpp"
#include "oracles.hpp"

using namespace forklab;

namespace {

DpParams params(double alpha, double ratio, int k) {
  DpParams p;
  p.alpha = alpha;
  p.p_h = ratio * (1.0 - alpha);
  p.k = k;
  return p;
}

DpParams finite(double alpha, double p_h, int k, int m) {
  DpParams p;
  p.alpha = alpha;
  p.p_h = p_h;
  p.k = k;
  p.init = InitKind::FinitePrefix;
  p.prefix_len = m;
  return p;
}

// Three significant digits, as printed in the published table.
std::string sig3(DpReal v) { return format_scientific(v, 3); }

long double value(long double v) { return v; }
long double value(const XReal& v) { return v.to_long_double(); }

}  // namespace

TEST_CASE("initial matrices") {
  const auto M = init_matrix<long double>(params(0.0, 1.0, 10), 10, 10);
  CHECK(M.at(0, 0) == 1.0L);
  CHECK(M.total_mass() == doctest::Approx(1.0));

  const auto S = init_matrix<long double>(params(0.4, 1.0, 10), 10, 10);
  CHECK(static_cast<double>(S.at(0, 0)) == doctest::Approx(1.0 / 3.0));
  CHECK(static_cast<double>(S.total_mass()) == doctest::Approx(1.0));

  const auto F = init_matrix<long double>(finite(0.3, 0.5, 5, 0), 5, 5);
  CHECK(F.at(0, 0) == 1.0L);
}

TEST_CASE("one step from the origin") {
  const DpParams p = finite(0.3, 0.5, 1, 0);
  const auto M0 = init_matrix<long double>(p, 3, 3);
  ProbMatrix<long double> M1(3, 3);
  step_serial(M0, M1, p);
  CHECK(static_cast<double>(M1.at(1, 1)) == doctest::Approx(0.3));
  CHECK(static_cast<double>(M1.at(0, -1)) == doctest::Approx(0.5));
  CHECK(static_cast<double>(M1.at(0, 0)) == doctest::Approx(0.2));
  CHECK(static_cast<double>(M1.total_mass()) == doctest::Approx(1.0));
}

TEST_CASE("honest step with positive reach and zero margin keeps the margin") {
  DpParams p = finite(0.0, 1.0, 1, 0);
  ProbMatrix<long double> M(3, 3), out(3, 3);
  M.at(2, 0) = 1.0L;
  step_serial(M, out, p);
  CHECK(out.at(1, 0) == 1.0L);
  step_parallel(M, out, p);
  CHECK(out.at(1, 0) == 1.0L);
}

TEST_CASE("mass is conserved and the two kernels agree") {
  const DpParams p = params(0.35, 0.6, 80);
  const int K = 80;
  auto a = init_matrix<long double>(p, K, K);
  auto b = a;
  ProbMatrix<long double> na(K, K), nb(K, K);
  for (int t = 0; t < K; ++t) {
    step_serial(a, na, p);
    step_parallel(b, nb, p);
    std::swap(a, na);
    std::swap(b, nb);
    CHECK(static_cast<double>(a.total_mass()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(static_cast<double>(b.total_mass()) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_FALSE(a.has_margin_above_reach());
  for (int r = 0; r <= K; ++r) {
    for (int s = -K; s <= K; ++s) {
      const long double x = a.at(r, s), y = b.at(r, s);
      CHECK(std::abs(x - y) <= 1e-15L * std::max(x, y) + 1e-300L);
    }
  }
}

TEST_CASE("parallel kernel does not depend on the thread count") {
  const DpParams p = params(0.3, 0.8, 60);
  auto run = [&](int threads) {
    omp_set_num_threads(threads);
    auto a = init_matrix<long double>(p, 60, 60);
    ProbMatrix<long double> n(60, 60);
    for (int t = 0; t < 60; ++t) {
      step_parallel(a, n, p, 60);
      std::swap(a, n);
    }
    return a;
  };
  const auto one = run(1);
  const auto four = run(4);
  omp_set_num_threads(omp_get_num_procs());
  bool same = one.pruned == four.pruned && one.absorbed == four.absorbed;
  for (int r = 0; r <= 60 && same; ++r) {
    for (int s = -60; s <= 60 && same; ++s) same = one.at(r, s) == four.at(r, s);
  }
  CHECK(same);
}

TEST_CASE("extended-range cells agree with long double") {
  const DpParams p = params(0.1, 0.5, 120);
  auto a = init_matrix<long double>(p, 120, 120);
  auto x = init_matrix<XReal>(p, 120, 120);
  ProbMatrix<long double> na(120, 120);
  ProbMatrix<XReal> nx(120, 120);
  for (int t = 0; t < 120; ++t) {
    step_serial(a, na, p, 120);
    step_serial(x, nx, p, 120);
    std::swap(a, na);
    std::swap(x, nx);
  }
  const long double va = value(a.violation_mass()), vx = value(x.violation_mass());
  CHECK(std::abs(va - vx) <= 1e-12L * va);
}

TEST_CASE("published table entries") {
  CHECK(sig3(violation_prob_ext(params(0.30, 1.0, 100))) == "8.00E-04");
  CHECK(sig3(violation_prob_ext(params(0.10, 0.5, 200))) == "6.31E-27");
  CHECK(sig3(violation_prob_ext(params(0.01, 1.0, 100))) == "5.70E-54");
  CHECK(sig3(violation_prob_ext(params(0.40, 0.25, 300))) == "4.94E-02");
  CHECK(sig3(violation_prob_ext(params(0.49, 0.01, 500))) == "9.54E-01");
}

TEST_CASE("one pass serves every horizon") {
  const DpParams p = params(0.2, 0.9, 0);
  const std::vector<int> ks = {0, 10, 25, 40};
  const auto all = violation_probs(p, ks);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    DpParams q = p;
    q.k = ks[i];
    CHECK(value(all[i]) == doctest::Approx(static_cast<double>(value(violation_prob_ext(q)))).epsilon(1e-12));
  }
  CHECK(value(all[0]) == doctest::Approx(1.0));
}

TEST_CASE("violation probability matches every string of a short prefix and window") {
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 4; ++k) {
      const long double exact = oracle::settlement_violation(m, k, 0.3, 0.45);
      CHECK(violation_prob(finite(0.3, 0.45, k, m)) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));
    }
  }
}

TEST_CASE("violation at any horizon") {
  const DpParams p = finite(0.4, 0.6, 2, 0);
  CHECK(violation_prob_any_horizon(p, 2) == doctest::Approx(violation_prob(p)).epsilon(1e-14));
  CHECK(violation_prob_any_horizon(p, 3) >= violation_prob(p));
  const long double exact = oracle::settlement_violation_any_horizon(0, 2, 4, 0.4, 0.6);
  CHECK(violation_prob_any_horizon(p, 4) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));
  const long double exact2 = oracle::settlement_violation_any_horizon(2, 2, 5, 0.3, 0.4);
  CHECK(violation_prob_any_horizon(finite(0.3, 0.4, 2, 2), 5) ==
        doctest::Approx(static_cast<double>(exact2)).epsilon(1e-12));

  const DpParams s = params(0.3, 0.7, 20);
  double prev = 0;
  for (int t = 20; t <= 40; t += 5) {
    const double v = violation_prob_any_horizon(s, t);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("grid order and validation") {
  const auto grid = settlement_table({0.1, 0.3}, {1.0, 0.5}, {10, 20});
  REQUIRE(grid.size() == 8);
  CHECK(grid[0].alpha == 0.1);
  CHECK(grid[1].k == 20);
  CHECK(grid[2].ratio == 0.5);
  CHECK(grid[4].alpha == 0.3);
  CHECK_THROWS_AS(violation_prob(params(0.5, 1.0, 10)), DomainError);
  CHECK_THROWS_AS(violation_prob(params(0.3, 1.2, 10)), DomainError);
  CHECK_THROWS_AS(settlement_table({0.1}, {0.0}, {10}), DomainError);
}
