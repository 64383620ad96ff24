#pragma once

#include <string>
#include <vector>

#include "forklab/fork.hpp"

namespace forklab {

// Closed fork built online, with per-vertex reach kept incrementally.
class AdversaryState {
 public:
  AdversaryState() = default;

  const Fork& fork() const { return fork_; }
  const CharString& string() const { return fork_.string(); }
  const std::vector<int>& reaches() const { return reach_; }
  int rho() const;
  // Honest slots at which the fork had no zero-reach tine (A* then extends
  // a maximum-reach tine instead).
  const std::vector<int>& empty_zero_slots() const { return empty_zero_slots_; }
  // H slots met with rho = 0 and a single zero-reach tine, which A* then
  // extends twice.
  const std::vector<int>& doubled_slots() const { return doubled_slots_; }

  // Appends b to the string without touching the tree.
  void absorb(Symbol b);
  // Conservatively extends each tine in `tines` with one honest vertex
  // labeled by the newest slot, which must be honest. Padding adversarial
  // vertices take the earliest unused adversarial slots after each tine.
  void extend(const std::vector<VertexId>& tines);

 private:
  Fork fork_;
  std::vector<int> reach_{0};
  std::vector<int> empty_zero_slots_;
  std::vector<int> doubled_slots_;

  friend AdversaryState astar_step(AdversaryState st, Symbol b);
};

// One move of the optimal online adversary.
AdversaryState astar_step(AdversaryState st, Symbol b);
Fork build_canonical_fork(const CharString& w);

struct CanonicalCheck {
  bool ok = true;
  int split = -1;  // first split with a wrong margin, -1 otherwise
  std::string reason;
};

// Validates F, then compares its reach and every margin with the recurrences.
CanonicalCheck verify_canonical(const Fork& F, const CharString& w);

// Simpler strategy aimed at one split: h extends a zero-reach tine when one
// exists (else a maximum-reach tine), H extends a pair witnessing the
// current margin. Among admissible moves it keeps the best resulting margin.
AdversaryState prefix_aware_step(AdversaryState st, Symbol b, int x_len);
Fork build_prefix_aware_fork(const CharString& w, int x_len);

}  // namespace forklab
