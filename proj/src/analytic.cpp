#include "forklab/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "forklab/error.hpp"

namespace forklab {

void WalkParams::check() const {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  if (!(q_h >= 0.0 && q_h <= q() + 1e-15)) throw DomainError("q_h must lie in [0, q]");
}

std::size_t default_truncation(int k) { return static_cast<std::size_t>(std::max(4000, 20 * std::max(k, 0))); }

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
}

// X = a Z + b Z X^2, coefficient by coefficient.
PowerSeries quadratic_fixed_point(Coef a, Coef b, std::size_t N) {
  std::vector<Coef> x(N + 1, 0), sq(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    x[n] = (n == 1 ? a : Coef(0)) + b * sq[n - 1];
    Coef s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += x[j] * x[n - j];
    sq[n] = s;
  }
  return PowerSeries(std::move(x));
}

}  // namespace

PowerSeries gf_descent(double eps, std::size_t N) {
  check_eps(eps);
  const WalkParams w{eps, 0.0};
  return quadratic_fixed_point(w.q(), w.p(), N);
}

PowerSeries gf_ascent(double eps, std::size_t N) {
  check_eps(eps);
  const WalkParams w{eps, 0.0};
  return quadratic_fixed_point(w.p(), w.q(), N);
}

PowerSeries gf_ascent_then_descent(double eps, std::size_t N) {
  const PowerSeries D = gf_descent(eps, N);
  const WalkParams w{eps, 0.0};
  const Coef p = w.p(), q = w.q();
  // A(U) for U = Z D(Z) obeys the same quadratic as A with Z replaced by U.
  std::vector<Coef> u(N + 1, 0), g(N + 1, 0), sq(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) u[n] = D[n - 1];
  for (std::size_t n = 1; n <= N; ++n) {
    Coef acc = p * u[n];
    for (std::size_t i = 1; i <= n; ++i) acc += q * u[i] * sq[n - i];
    g[n] = acc;
    Coef s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += g[j] * g[n - j];
    sq[n] = s;
  }
  return PowerSeries(std::move(g));
}

PowerSeries gf_restart(const WalkParams& w, std::size_t N) {
  w.check();
  const PowerSeries D = gf_descent(w.eps, N);
  const PowerSeries G = gf_ascent_then_descent(w.eps, N);
  PowerSeries F = add(scale(shift(D, 1), w.p()), scale(shift(G, 1), w.q_h));
  return add(F, PowerSeries::monomial(w.q_H(), 1, N));
}

PowerSeries gf_unique_catalan(const WalkParams& w, std::size_t N) {
  w.check();
  if (!(w.q_h > 0.0)) throw DomainError("the unique-Catalan series needs q_h > 0");
  const PowerSeries F = gf_restart(w, N);
  const PowerSeries num = PowerSeries::monomial(Coef(w.q_h) * w.eps / w.q(), 1, N);
  return divide_one_minus(num, F);
}

PowerSeries gf_epoch(double eps, std::size_t N) {
  check_eps(eps);
  const WalkParams w{eps, 0.0};
  const PowerSeries D = gf_descent(eps, N);
  const PowerSeries G = gf_ascent_then_descent(eps, N);
  const Coef a1 = Coef(w.p()) / w.q();  // A(1), the gambler's-ruin ascent probability
  return add(scale(shift(D, 1), w.p()), scale(shift(G, 1), Coef(w.q()) / a1));
}

PowerSeries gf_two_catalan(double eps, std::size_t N) {
  const PowerSeries D = gf_descent(eps, N);
  const PowerSeries E = gf_epoch(eps, N);
  // M = D (eps + (1 - eps) E M): every restart begins with a fresh descent,
  // so D stays inside the denominator.
  return divide_one_minus(scale(D, eps), scale(multiply(D, E), 1.0 - eps));
}

PowerSeries gf_two_catalan_as_printed(double eps, std::size_t N) {
  const PowerSeries D = gf_descent(eps, N);
  const PowerSeries E = gf_epoch(eps, N);
  return divide_one_minus(scale(D, eps), scale(E, 1.0 - eps));
}

PowerSeries gf_stationary_descent(double eps, std::size_t N) {
  check_eps(eps);
  const Coef beta = Coef(1.0 - eps) / (1.0 + eps);
  const PowerSeries D = gf_descent(eps, N);
  return divide_one_minus(PowerSeries::monomial(1 - beta, 0, N), scale(D, beta));
}

namespace {

TailBound tail_of(const PowerSeries& c, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (static_cast<std::size_t>(k) > c.order()) throw DomainError("truncation order must be at least k");
  TailBound out;
  out.value = std::clamp<Coef>(1 - c.partial_sum(static_cast<std::size_t>(k)), 0, 1);
  out.remainder = std::max<Coef>(0, 1 - c.partial_sum(c.size()));
  return out;
}

}  // namespace

TailBound bound_unique_catalan_tail(double eps, double q_h, int k, std::size_t N, bool with_prefix) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (N < static_cast<std::size_t>(k)) throw DomainError("truncation order must be at least k");
  const WalkParams w{eps, q_h};
  PowerSeries c = gf_unique_catalan(w, N);
  if (with_prefix) c = multiply(gf_stationary_descent(eps, N), c);
  return tail_of(c, k);
}

TailBound bound_two_catalan_tail(double eps, int k, std::size_t N, bool with_prefix) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (N < static_cast<std::size_t>(k)) throw DomainError("truncation order must be at least k");
  PowerSeries m = gf_two_catalan(eps, N);
  if (with_prefix) m = multiply(gf_stationary_descent(eps, N), m);
  return tail_of(m, k);
}

double radius_R1(double eps) {
  if (!(eps > 0.0 && eps <= 0.97)) throw DomainError("R1 is defined here for eps in (0, 0.97]");
  const double inner = (2.0 / std::sqrt(1.0 - eps * eps) - 1.0 / (1.0 + eps)) / (1.0 + eps);
  return std::sqrt(inner);
}

double restart_derivative_at_one(const WalkParams& w) {
  w.check();
  const double p = w.p(), q = w.q(), e = w.eps;
  return p * (1.0 + 1.0 / e) + w.q_h * (p / q) * (1.0 + (1.0 + 1.0 / e) / e) + w.q_H();
}

double radius_R2_star(double eps, double q_h) {
  const WalkParams w{eps, q_h};
  w.check();
  if (!(q_h > 0.0)) throw DomainError("R2* needs q_h > 0");
  return 1.0 + eps * (q_h / w.q()) / restart_derivative_at_one(w);
}

TailBound delta_walk_tail(int delta, int k, double eps) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("eps must lie in (0, 1]");
  const long double p = (1.0L - eps) / 2.0L, q = (1.0L + eps) / 2.0L;
  const long double lp = p > 0 ? std::log(p) : -std::numeric_limits<long double>::infinity();
  const long double lq = std::log(q);
  // Pr[walk sits j below its start after t steps].
  auto f = [&](long t, long j) -> long double {
    if (j > t || ((t - j) & 1)) return 0.0L;
    const long up = (t - j) / 2, down = (t + j) / 2;
    if (up > 0 && p == 0) return 0.0L;
    const long double lc = std::lgamma(static_cast<long double>(t) + 1) -
                           std::lgamma(static_cast<long double>(down) + 1) -
                           std::lgamma(static_cast<long double>(up) + 1);
    return std::exp(lc + (up > 0 ? up * lp : 0.0L) + down * lq);
  };
  // For t >= delta^2 - 2 every term shrinks by at least 4pq per two steps.
  const long double rho = 4 * p * q;
  const long settle = std::max<long>(k, static_cast<long>(delta) * delta);
  long double sum = 0, prev = 0;
  TailBound out;
  for (long t = k;; ++t) {
    long double g = 0;
    for (long j = 0; j <= delta; ++j) g += f(t, j);
    sum += g;
    const long double pair = g + prev;
    prev = g;
    if (t >= settle + 1) {
      if (pair == 0 && (rho == 0 || sum == 0)) break;
      if (pair <= 1e-30L * sum) {
        out.remainder = rho < 1 ? pair * rho / (1 - rho) : std::numeric_limits<long double>::infinity();
        break;
      }
    }
    if (t > 100000000L) throw DomainError("delta-walk series did not converge");
  }
  out.value = sum + out.remainder;
  return out;
}

}  // namespace forklab
