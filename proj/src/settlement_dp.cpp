#include "forklab/settlement_dp.hpp"

#include <algorithm>
#include <cmath>

#include "forklab/error.hpp"
#include "forklab/margin.hpp"

namespace forklab {

namespace {

inline long double to_ld(long double v) { return v; }
inline long double to_ld(const XReal& v) { return v.to_long_double(); }
inline bool nonzero(long double v) { return v != 0.0L; }
inline bool nonzero(const XReal& v) { return !v.is_zero(); }

// Lowest margin that can still matter at step t: margins start at >= 0 and
// move by one per symbol, and a margin below -(horizon - t) never gets back
// to zero by the horizon.
int lower_bound(int t, int s_min, int horizon) {
  int lo = std::max(s_min, -t);
  if (horizon >= 0) lo = std::max(lo, -(horizon - t));
  return lo;
}

}  // namespace

void DpParams::check() const {
  if (k < 0) throw DomainError("horizon k must be non-negative");
  if (!(alpha >= 0.0 && p_h >= 0.0 && p_H() >= -1e-15 && alpha + p_h <= 1.0 + 1e-15)) {
    throw DomainError("symbol probabilities must form a distribution");
  }
  if (init == InitKind::Stationary && !(alpha < 0.5)) throw DomainError("stationary reach needs alpha < 1/2");
  if (init == InitKind::FinitePrefix && prefix_len < 0) throw DomainError("prefix length must be non-negative");
}

template <class Real>
void ProbMatrix<Real>::clear() {
  std::fill(cells_.begin(), cells_.end(), Real(0.0));
  absorbed = Real(0.0);
  pruned = Real(0.0);
}

template <class Real>
long double ProbMatrix<Real>::total_mass() const {
  long double sum = to_ld(absorbed) + to_ld(pruned);
  for (const Real& v : cells_) sum += to_ld(v);
  return sum;
}

template <class Real>
Real ProbMatrix<Real>::violation_mass() const {
  Real sum = absorbed;
  for (int r = 0; r <= r_max_; ++r) {
    for (int s = 0; s <= r; ++s) sum += at(r, s);
  }
  return sum;
}

template <class Real>
bool ProbMatrix<Real>::has_margin_above_reach() const {
  for (int r = 0; r <= r_max_; ++r) {
    for (int s = r + 1; s <= r_max_; ++s) {
      if (nonzero(at(r, s))) return true;
    }
  }
  return false;
}

template <class Real>
ProbMatrix<Real> init_matrix(const DpParams& params, int r_max, int s_span) {
  params.check();
  if (r_max < 0 || s_span < 0) throw DomainError("matrix bounds must be non-negative");
  ProbMatrix<Real> M(r_max, s_span);
  if (params.init == InitKind::Stationary) {
    // X_inf(r) = (1 - beta) beta^r with beta = (1 - eps)/(1 + eps) = alpha/(1 - alpha).
    const double beta = params.alpha / (1.0 - params.alpha);
    Real w = Real(1.0 - beta);
    for (int r = 0; r <= r_max; ++r) {
      M.at(r, r) = w;
      w = w * Real(beta);
    }
    // Geometric tail beyond r_max: beta^(r_max + 1).
    Real tail = Real(1.0);
    for (int r = 0; r <= r_max; ++r) tail = tail * Real(beta);
    M.absorbed = tail;
  } else {
    const std::vector<double> dist =
        rho_distribution(static_cast<std::size_t>(params.prefix_len), params.epsilon(), params.p_h);
    for (int r = 0; r < static_cast<int>(dist.size()); ++r) {
      if (r <= r_max) {
        M.at(r, r) = Real(dist[r]);
      } else {
        M.absorbed += Real(dist[r]);
      }
    }
  }
  return M;
}

template <class Real>
void step_serial(const ProbMatrix<Real>& in, ProbMatrix<Real>& out, const DpParams& params, int prune_horizon) {
  const int R = in.r_max();
  if (out.r_max() != R || out.s_min() != in.s_min()) out = ProbMatrix<Real>(R, -in.s_min());
  out.clear();
  out.t = in.t + 1;
  out.absorbed = in.absorbed;
  out.pruned = in.pruned;
  const int lo_in = lower_bound(in.t, in.s_min(), prune_horizon);
  const int lo_out = lower_bound(out.t, in.s_min(), prune_horizon);
  const Real pa(params.alpha), ph(params.p_h), pH(params.p_H());
  auto push = [&](int r, int s, const Real& v) {
    if (s < lo_out) {
      out.pruned += v;
    } else {
      out.at(r, s) += v;
    }
  };
  for (int r = 0; r <= R; ++r) {
    for (int s = lo_in; s <= r; ++s) {
      const Real v = in.at(r, s);
      if (!nonzero(v)) continue;
      // A: both reach and margin rise.
      if (r == R) {
        out.absorbed += pa * v;
      } else {
        push(r + 1, s + 1, pa * v);
      }
      const int rr = std::max(r - 1, 0);
      if (r > 0) {
        const int s2 = s == 0 ? 0 : s - 1;
        push(rr, s2, ph * v);
        push(rr, s2, pH * v);
      } else {
        push(rr, s - 1, ph * v);
        push(rr, s == 0 ? 0 : s - 1, pH * v);
      }
    }
  }
}

template <class Real>
void step_parallel(const ProbMatrix<Real>& in, ProbMatrix<Real>& out, const DpParams& params, int prune_horizon) {
  const int R = in.r_max();
  if (out.r_max() != R || out.s_min() != in.s_min()) out = ProbMatrix<Real>(R, -in.s_min());
  out.t = in.t + 1;
  const int s_min = in.s_min();
  const int lo_in = lower_bound(in.t, s_min, prune_horizon);
  const int lo_out = lower_bound(out.t, s_min, prune_horizon);
  const int lo_gather = std::max(s_min, lo_in - 1);
  const Real pa(params.alpha), ph(params.p_h), pH(params.p_H());
  std::vector<Real> dropped(static_cast<std::size_t>(R) + 1, Real(0.0));

#pragma omp parallel for schedule(dynamic, 8)
  for (int r2 = 0; r2 <= R; ++r2) {
    Real* dst = out.row(r2);
    std::fill(dst, dst + out.width(), Real(0.0));
    const bool from_above = r2 + 1 <= R;  // source row r = r2 + 1 has r > 0
    Real lost(0.0);
    for (int s2 = lo_gather; s2 <= r2; ++s2) {
      Real acc(0.0);
      if (r2 >= 1 && s2 - 1 >= lo_in) acc += pa * in.at(r2 - 1, s2 - 1);
      if (from_above) {
        if (s2 == 0) {
          const Real v = in.at(r2 + 1, 0) + in.at(r2 + 1, 1);
          acc += ph * v;
          acc += pH * v;
        } else if (s2 != -1 && s2 + 1 >= lo_in) {
          const Real v = in.at(r2 + 1, s2 + 1);
          acc += ph * v;
          acc += pH * v;
        }
      }
      if (r2 == 0) {
        // Source row r = 0 holds margins s <= 0.
        if (s2 + 1 <= 0 && s2 + 1 >= lo_in) acc += ph * in.at(0, s2 + 1);
        if (s2 == 0) {
          acc += pH * in.at(0, 0);
        } else if (s2 <= -2 && s2 + 1 >= lo_in) {
          acc += pH * in.at(0, s2 + 1);
        }
      }
      if (s2 < lo_out) {
        lost += acc;
      } else {
        dst[s2 - s_min] = acc;
      }
    }
    dropped[r2] = lost;
  }

  Real absorbed = in.absorbed;
  for (int s = lo_in; s <= R; ++s) absorbed += pa * in.at(R, s);
  Real pruned = in.pruned;
  for (const Real& v : dropped) pruned += v;
  out.absorbed = absorbed;
  out.pruned = pruned;
}

std::vector<DpReal> violation_probs(const DpParams& params, const std::vector<int>& ks) {
  params.check();
  std::vector<DpReal> result(ks.size(), DpReal(0.0));
  if (ks.empty()) return result;
  for (int k : ks) {
    if (k < 0) throw DomainError("horizon k must be non-negative");
  }
  // Reach at or above K + 1 is a certain violation at every horizon <= K, so
  // the absorbing bucket at r_max = K is exact.
  const int K = *std::max_element(ks.begin(), ks.end());
  ProbMatrix<DpReal> cur = init_matrix<DpReal>(params, K, K);
  ProbMatrix<DpReal> next(K, K);
  auto record = [&]() {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] == cur.t) result[i] = cur.violation_mass();
    }
  };
  record();
  while (cur.t < K) {
    step_parallel(cur, next, params, K);
    std::swap(cur, next);
    record();
  }
  return result;
}

DpReal violation_prob_ext(const DpParams& params) { return violation_probs(params, {params.k}).front(); }

double violation_prob(const DpParams& params) { return static_cast<double>(to_ld(violation_prob_ext(params))); }

double violation_prob_any_horizon(const DpParams& params, int t_max) {
  params.check();
  if (t_max < params.k) throw DomainError("t_max must be at least k");
  ProbMatrix<DpReal> cur = init_matrix<DpReal>(params, t_max, t_max);
  ProbMatrix<DpReal> next(t_max, t_max);
  DpReal flagged(0.0);
  // Once the clock reaches k, any cell with s >= 0 is a violation: freeze it.
  auto sweep = [&]() {
    if (cur.t < params.k) return;
    for (int r = 0; r <= t_max; ++r) {
      for (int s = 0; s <= r; ++s) {
        flagged += cur.at(r, s);
        cur.at(r, s) = DpReal(0.0);
      }
    }
  };
  sweep();
  while (cur.t < t_max) {
    step_parallel(cur, next, params, t_max);
    std::swap(cur, next);
    sweep();
  }
  // Absorbed mass has margin > 0 from step k on (reach >= t_max + 1).
  return static_cast<double>(to_ld(flagged + cur.absorbed));
}

std::vector<TableEntry> settlement_table(const std::vector<double>& alphas, const std::vector<double>& ratios,
                                         const std::vector<int>& ks) {
  std::vector<TableEntry> out;
  for (double a : alphas) {
    for (double ratio : ratios) {
      if (!(ratio > 0.0 && ratio <= 1.0)) throw DomainError("ratio p_h/(1-alpha) must lie in (0, 1]");
      DpParams p;
      p.alpha = a;
      p.p_h = ratio * (1.0 - a);
      const std::vector<DpReal> probs = violation_probs(p, ks);
      for (std::size_t i = 0; i < ks.size(); ++i) out.push_back({a, ratio, ks[i], probs[i]});
    }
  }
  return out;
}

template class ProbMatrix<long double>;
template class ProbMatrix<XReal>;
template ProbMatrix<long double> init_matrix<long double>(const DpParams&, int, int);
template ProbMatrix<XReal> init_matrix<XReal>(const DpParams&, int, int);
template void step_serial<long double>(const ProbMatrix<long double>&, ProbMatrix<long double>&, const DpParams&, int);
template void step_serial<XReal>(const ProbMatrix<XReal>&, ProbMatrix<XReal>&, const DpParams&, int);
template void step_parallel<long double>(const ProbMatrix<long double>&, ProbMatrix<long double>&, const DpParams&,
                                         int);
template void step_parallel<XReal>(const ProbMatrix<XReal>&, ProbMatrix<XReal>&, const DpParams&, int);

}  // namespace forklab
