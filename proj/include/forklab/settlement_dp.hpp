#pragma once

#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "forklab/xreal.hpp"

namespace forklab {

// Cell type for the settlement DP. x87 long double keeps a 15-bit exponent
// (down to ~1e-4951), far below the ~1e-300 cells the DP produces; where long
// double is only a double, fall back to the mantissa/exponent pair.
using DpReal = std::conditional_t<(std::numeric_limits<long double>::min_exponent10 < -4000), long double, XReal>;

enum class InitKind { Stationary, FinitePrefix };

struct DpParams {
  int k = 0;
  double alpha = 0.0;  // Pr[A]
  double p_h = 0.0;
  InitKind init = InitKind::Stationary;
  int prefix_len = 0;  // FinitePrefix only

  double p_H() const { return 1.0 - alpha - p_h; }
  double epsilon() const { return 1.0 - 2.0 * alpha; }
  void check() const;
};

// M_t(r, s) = Pr[rho(xy) = r and mu_x(y) = s] over |y| = t, for r in
// [0, r_max] and s in [-s_span, r_max]. Reach beyond r_max is folded into
// `absorbed`; mass whose margin can no longer climb back to zero by the
// horizon is moved to `pruned`.
template <class Real>
class ProbMatrix {
 public:
  ProbMatrix() = default;
  ProbMatrix(int r_max, int s_span)
      : r_max_(r_max), s_span_(s_span), width_(r_max + s_span + 1),
        cells_(static_cast<std::size_t>(r_max + 1) * width_, Real(0.0)) {}

  int r_max() const { return r_max_; }
  int s_min() const { return -s_span_; }
  int t = 0;
  Real absorbed = Real(0.0);
  Real pruned = Real(0.0);

  Real& at(int r, int s) { return cells_[index(r, s)]; }
  const Real& at(int r, int s) const { return cells_[index(r, s)]; }
  // Value or zero outside the stored window.
  Real get(int r, int s) const {
    if (r < 0 || r > r_max_ || s < -s_span_ || s > r_max_) return Real(0.0);
    return cells_[index(r, s)];
  }
  Real* row(int r) { return &cells_[static_cast<std::size_t>(r) * width_]; }
  const Real* row(int r) const { return &cells_[static_cast<std::size_t>(r) * width_]; }
  int width() const { return width_; }

  void clear();
  // Sum of all cells, plus absorbed and pruned mass.
  long double total_mass() const;
  // Pr[s >= 0] over cells, plus absorbed mass.
  Real violation_mass() const;
  // True when some nonzero cell has s > r.
  bool has_margin_above_reach() const;

 private:
  std::size_t index(int r, int s) const {
    return static_cast<std::size_t>(r) * width_ + static_cast<std::size_t>(s + s_span_);
  }
  int r_max_ = 0;
  int s_span_ = 0;
  int width_ = 0;
  std::vector<Real> cells_;
};

// Initial matrix for a DP run with reach cap r_max and margins down to -s_span.
template <class Real>
ProbMatrix<Real> init_matrix(const DpParams& params, int r_max, int s_span);

// One symbol of the (reach, margin) chain. `prune_horizon` >= 0 moves mass with
// s < -(prune_horizon - t') into the pruned ledger; -1 disables pruning.
// step_serial pushes each cell along its three transitions; step_parallel
// gathers every target cell from its fixed stencil, one OpenMP task per row.
template <class Real>
void step_serial(const ProbMatrix<Real>& in, ProbMatrix<Real>& out, const DpParams& params, int prune_horizon = -1);
template <class Real>
void step_parallel(const ProbMatrix<Real>& in, ProbMatrix<Real>& out, const DpParams& params,
                   int prune_horizon = -1);

// Pr[mu_x(y) >= 0] with |y| = params.k.
double violation_prob(const DpParams& params);
DpReal violation_prob_ext(const DpParams& params);
// One DP pass up to max(ks); entry i is the violation probability at ks[i].
std::vector<DpReal> violation_probs(const DpParams& params, const std::vector<int>& ks);
// Pr[mu_x(y_1..y_t) >= 0 for some t in [k, t_max]].
double violation_prob_any_horizon(const DpParams& params, int t_max);

struct TableEntry {
  double alpha;
  double ratio;  // p_h / (1 - alpha)
  int k;
  DpReal prob;
};

// Grid in row order alpha, then ratio, then k (stationary initial reach).
std::vector<TableEntry> settlement_table(const std::vector<double>& alphas, const std::vector<double>& ratios,
                                         const std::vector<int>& ks);

}  // namespace forklab
