#pragma once

#include <vector>

#include "forklab/enumerate.hpp"
#include "forklab/fork.hpp"

namespace forklab {

// Per-slot flags, indexed by slot (entry 0 unused).
struct CatalanReport {
  std::vector<bool> left_catalan;
  std::vector<bool> right_catalan;
  std::vector<bool> catalan;

  std::vector<int> slots() const;
};

// Left-Catalan: [l, s] is h-heavy for every l <= s. Right-Catalan: [s, r]
// is h-heavy for every r >= s. Only honest slots can qualify.
CatalanReport catalan_slots(const CharString& w);

// --- Single-fork predicates ---------------------------------------------

// Every tine viable at some onset k in [first_onset, |w|+1] passes through a
// label-s vertex.
bool bottleneck_in_fork(const Fork& F, int s, int first_onset);
// ... and all of them pass through the same one.
bool uvp_in_fork(const Fork& F, int s, int first_onset);
// Two maximum-length tines hold different label-s vertices, or exactly one
// of them holds one.
bool diverges_prior_in_fork(const Fork& F, int s);
// Viable t1, t2 with l(t1) <= l(t2) where t1 minus its vertices labeled above
// l(t1) - k is not a prefix of t2.
bool slot_cp_broken_in_fork(const Fork& F, int k);
// Same with the last k vertices of t1 dropped instead.
bool block_cp_broken_in_fork(const Fork& F, int k);

// Honest vertices of slot j all extend the least tine (pi_less) among the
// longest tines labeled below j, whenever every one of those is honest.
bool follows_tie_breaking(const Fork& F);

// --- Oracles and fast characterizations ----------------------------------

// Quantify over every enumerated fork of every prefix of w of length >= s.
bool has_uvp_oracle(const CharString& w, int s, const EnumerationCaps& caps = {});
bool has_bottleneck_oracle(const CharString& w, int s, const EnumerationCaps& caps = {});
// UVP with tines counted from onset `first_onset` on, over explicitly
// enumerated forks that follow the tie-breaking rule.
bool has_uvp_tie_broken_oracle(const CharString& w, int s, int first_onset,
                               const EnumerationCaps& caps = {});

// w_s must be h. True iff mu_x(y) < 0 for x = w_1..w_{s-1} and every y with
// xy a prefix of w, |y| >= 1.
bool has_uvp_fast(const CharString& w, int s);

bool is_settled_oracle(const CharString& w, int s, int k, const EnumerationCaps& caps = {});
// mu_x(y) < 0 for every prefix xy with |xy| >= s + k.
bool is_settled_fast(const CharString& w, int s, int k);

// Oracle over the forks of w itself.
bool violates_k_slot_cp(const CharString& w, int k, const EnumerationCaps& caps = {});
// Sufficient for safety: every window of k slots holds an h slot with the UVP.
bool cp_implied_by_uvp(const CharString& w, int k);

// Largest slot divergence over the enumerated forks of w.
int max_slot_divergence_oracle(const CharString& w, const EnumerationCaps& caps = {});
// Some fork for some prefix xy of w with |y| >= k is x-balanced.
bool has_balanced_decomposition(const CharString& w, int k, const EnumerationCaps& caps = {});

// Bivalent w: slots s-1 and s are both Catalan.
bool two_consecutive_catalan_uvp(const CharString& w, int s);

}  // namespace forklab
