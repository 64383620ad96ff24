#pragma once

#include <vector>

#include "forklab/charstring.hpp"
#include "forklab/enumerate.hpp"
#include "forklab/fork.hpp"

namespace forklab {

// Which symbols may fill the delta slots after an honest symbol for it to
// stay honest.
enum class WindowRule {
  SilentOrAdversarial,  // the reduction map as defined: every one is empty or A
  SilentOnly,           // every one is empty; the rule the i.i.d. law assumes
};

struct Reduction {
  CharString input;
  int delta = 0;
  CharString output;
  // pi[i] is the output slot of input slot i, or 0 when w_i is empty.
  // Entry 0 is unused.
  std::vector<int> pi;

  int map(int slot) const;
};

// Drops empty slots, keeps an honest symbol when the next delta input
// symbols satisfy the window rule, and emits A otherwise. Fewer than delta
// remaining symbols never satisfy the window.
Reduction reduce(const CharString& w, int delta, WindowRule rule = WindowRule::SilentOrAdversarial);

// Relabels every vertex u of a delta-fork for red.input to pi(l(u)). Throws
// DomainError when F is not a valid delta-fork for that string.
Fork lift_fork(const Fork& F, const Reduction& red);

// Slot s (w_s not empty) is (k, delta)-settled: no delta-fork for a prefix
// of length t >= s + k holds two maximum-length tines, one through a label-s
// vertex, each with at least k vertices labeled after s, meeting at a label
// below s.
bool is_k_delta_settled_oracle(const CharString& w, int s, int k, int delta, const EnumerationCaps& caps = {});

struct ReducedProbs {
  double h;
  double H;
  double A;
};

// Law of the reduced symbols away from the string end: with a = (1 - f)^delta,
// h -> p_h a / f, H -> p_H a / f, A -> 1 - a + p_A a / f.
ReducedProbs reduced_probs(double f, int delta, double p_A, double p_h);

// p_A b / f + (1 - b) <= (1 - eps)/2 with b = (1 - f)^delta.
bool theorem71_condition(double p_A, double f, double eps, int delta);

}  // namespace forklab
