#pragma once

#include <cstddef>

#include "forklab/series.hpp"

namespace forklab {

// The +-1 walk behind the bounds: it rises with p = (1 - eps)/2 (adversarial
// slots) and falls with q = (1 + eps)/2, split into q_h + q_H.
struct WalkParams {
  double eps = 0.0;
  double q_h = 0.0;

  double p() const { return (1.0 - eps) / 2.0; }
  double q() const { return (1.0 + eps) / 2.0; }
  double q_H() const { return q() - q_h; }
  void check() const;
};

// max(4000, 20k).
std::size_t default_truncation(int k);

// First-descent time D = qZ + pZ D^2 and first-ascent time A = pZ + qZ A^2.
PowerSeries gf_descent(double eps, std::size_t N);
PowerSeries gf_ascent(double eps, std::size_t N);
// A(Z D(Z)), solved directly as G = pU + qU G^2 with U = Z D(Z).
PowerSeries gf_ascent_then_descent(double eps, std::size_t N);
// F = pZ D + q_h Z A(Z D) + q_H Z.
PowerSeries gf_restart(const WalkParams& w, std::size_t N);
// C-hat = (q_h eps / q) Z / (1 - F): dominates the first uniquely honest
// Catalan slot.
PowerSeries gf_unique_catalan(const WalkParams& w, std::size_t N);
// E-hat = pZ D + qZ A(Z D)/A(1), and M-hat solving M = D (eps + (1 - eps) E-hat M),
// i.e. eps D / (1 - (1 - eps) D E-hat).
PowerSeries gf_epoch(double eps, std::size_t N);
PowerSeries gf_two_catalan(double eps, std::size_t N);
// eps D / (1 - (1 - eps) E-hat), the closed form with the restart descent
// dropped. It puts too much mass on early slots and is kept for comparison.
PowerSeries gf_two_catalan_as_printed(double eps, std::size_t N);
// X_inf(D(Z)) = (1 - beta)/(1 - beta D(Z)): the law of the extra descent
// needed when the window follows a prefix.
PowerSeries gf_stationary_descent(double eps, std::size_t N);

struct TailBound {
  Coef value = 0;      // the bound itself
  Coef remainder = 0;  // mass the truncated series places beyond order N
};

// 1 - sum_{t<k} c_t for C-hat (empty prefix) or X_inf(D) * C-hat (prefix).
TailBound bound_unique_catalan_tail(double eps, double q_h, int k, std::size_t N, bool with_prefix);
// Same for M-hat, in the bivalent setting (q_h = 0).
TailBound bound_two_catalan_tail(double eps, int k, std::size_t N, bool with_prefix);

// Radius of convergence of A(Z D(Z)) and the first-order root of F(z) = 1.
double radius_R1(double eps);
double radius_R2_star(double eps, double q_h);
// F'(1) from its closed form.
double restart_derivative_at_one(const WalkParams& w);

// sum_{t >= k} sum_{j <= delta, j = t mod 2} C(t, (t+j)/2) p^{(t-j)/2} q^{(t+j)/2}:
// union bound on the walk coming back within delta of its start after k
// steps. The geometric remainder past the cut-off is folded into `value`
// and also reported alone.
TailBound delta_walk_tail(int delta, int k, double eps);

}  // namespace forklab
