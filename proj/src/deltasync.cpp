#include "forklab/deltasync.hpp"

#include <cmath>

#include "forklab/error.hpp"
#include "forklab/family.hpp"

namespace forklab {

int Reduction::map(int slot) const {
  if (slot == 0) return 0;
  if (slot < 0 || slot >= static_cast<int>(pi.size())) throw DomainError("slot outside the reduced string");
  return pi[slot];
}

Reduction reduce(const CharString& w, int delta, WindowRule rule) {
  if (delta < 0) throw DomainError("delta must be non-negative");
  const int n = static_cast<int>(w.size());
  Reduction red;
  red.input = w;
  red.delta = delta;
  red.pi.assign(n + 1, 0);
  std::vector<Symbol> out;
  auto quiet = [&](Symbol b) {
    return b == Symbol::Empty || (rule == WindowRule::SilentOrAdversarial && b == Symbol::Adversarial);
  };
  for (int i = 1; i <= n; ++i) {
    const Symbol b = w.at(i);
    if (b == Symbol::Empty) continue;
    Symbol emitted = Symbol::Adversarial;
    if (is_honest(b) && i + delta <= n) {
      bool isolated = true;
      for (int j = i + 1; j <= i + delta && isolated; ++j) isolated = quiet(w.at(j));
      if (isolated) emitted = b;
    }
    out.push_back(emitted);
    red.pi[i] = static_cast<int>(out.size());
  }
  red.output = CharString(std::move(out));
  return red;
}

Fork lift_fork(const Fork& F, const Reduction& red) {
  if (!(F.string() == red.input)) throw DomainError("fork is for a different string than the reduction");
  if (const auto v = validate(F, red.delta); !v.empty()) {
    throw DomainError("not a delta-fork: " + v.front().axiom + ": " + v.front().message);
  }
  Fork out(red.output);
  // Parents precede children in id order, so ids carry over unchanged.
  for (VertexId v = 1; v < F.size(); ++v) out.add_vertex(F.parent(v), red.map(F.label(v)));
  return out;
}

bool is_k_delta_settled_oracle(const CharString& w, int s, int k, int delta, const EnumerationCaps& caps) {
  const int n = static_cast<int>(w.size());
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (s < 1 || k < 0 || s + k > n) throw DomainError("need 1 <= s and s + k <= |w|");
  if (w.at(s) == Symbol::Empty) throw DomainError("slot " + std::to_string(s) + " is empty");
  EnumerationCaps c = caps;
  c.closed_only = true;
  c.delta = delta;
  const int paths = caps.closed_only ? 0 : caps.max_dangling_paths;
  for (int t = s + k; t <= n; ++t) {
    for (const Fork& core : default_fork_cache().get(w.prefix(t), c)) {
      if (family::delta_settlement_broken(core, s, k, paths)) return false;
    }
  }
  return true;
}

ReducedProbs reduced_probs(double f, int delta, double p_A, double p_h) {
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (!(f > 0.0 && f <= 1.0)) throw DomainError("f must lie in (0, 1]");
  if (!(p_A >= 0.0 && p_h >= 0.0 && p_A + p_h <= f + 1e-15)) {
    throw DomainError("need p_A, p_h >= 0 and p_A + p_h <= f");
  }
  const double a = std::pow(1.0 - f, delta);
  const double p_H = f - p_A - p_h;
  return {p_h * a / f, p_H * a / f, 1.0 - a + p_A * a / f};
}

bool theorem71_condition(double p_A, double f, double eps, int delta) {
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (!(f > 0.0 && f <= 1.0) || !(p_A >= 0.0 && p_A <= f)) throw DomainError("need 0 <= p_A <= f <= 1, f > 0");
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("eps must lie in [0, 1]");
  const double b = std::pow(1.0 - f, delta);
  // Tolerance absorbs rounding at the equality case.
  return p_A * b / f + (1.0 - b) <= (1.0 - eps) / 2.0 + 1e-12;
}

}  // namespace forklab
