#pragma once

#include <climits>
#include <vector>

#include "forklab/fork.hpp"

// Queries over every open fork built from one closed core. An open fork in
// the oracle family is the core plus at most `paths` adversarial paths, each
// hanging directly off a core vertex and using any later adversarial slots.
// Instead of materializing those forks, each query walks the few path shapes
// that can matter to it:
//  - predicates about viable tines only need, per core vertex, the path that
//    uses every later adversarial slot (it is the deepest path to each label);
//  - predicates about maximum-length tines need paths of an exact length,
//    summarized by whatever the predicate reads off them.
// The explicit-enumeration tests pin each query to the materialized family.
namespace forklab::family {

// min_balanced_split result when no fork is balanced.
inline constexpr int kNever = INT_MAX;

// Some fork has a tine viable at an onset k >= first_onset (k <= |w|+1)
// avoiding every label-s vertex.
bool bottleneck_broken(const Fork& core, int s, int first_onset, int paths);
// Some fork has two such tines through different label-s vertices, or one
// through none.
bool uvp_broken(const Fork& core, int s, int first_onset, int paths);

// Some fork has two maximum-length tines that diverge prior to s.
bool diverges_prior(const Fork& core, int s, int paths);

// Smallest x_len for which some fork is x-balanced, kNever if none is.
int min_balanced_split(const Fork& core, int paths);

// Largest slot divergence of any fork.
int max_slot_divergence(const Fork& core, int paths);

// Some fork has viable tines t1, t2 with l(t1) <= l(t2) and t1 trimmed by k
// slots not a prefix of t2.
bool slot_cp_broken(const Fork& core, int k, int paths);

// Some fork has two maximum-length tines, one through a label-s vertex, both
// with at least k vertices labeled after s, meeting at a label below s.
bool delta_settlement_broken(const Fork& core, int s, int k, int paths);

}  // namespace forklab::family
