#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forklab/charstring.hpp"
#include "forklab/error.hpp"

namespace forklab {

using VertexId = int;
inline constexpr VertexId kRoot = 0;

// Rooted labeled tree for a characteristic string. Vertex 0 is the root with
// label 0. A tine is identified by its terminal vertex.
class Fork {
 public:
  Fork() : Fork(CharString{}) {}
  explicit Fork(CharString w);

  // Appends a child of `parent`. Only structural checks happen here; the fork
  // axioms are checked by validate().
  VertexId add_vertex(VertexId parent, int label);

  const CharString& string() const { return w_; }
  int size() const { return static_cast<int>(label_.size()); }
  int label(VertexId v) const { return label_.at(v); }
  VertexId parent(VertexId v) const { return parent_.at(v); }
  int depth(VertexId v) const { return depth_.at(v); }
  const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
  int height() const { return height_; }

  // Root counts as honest; otherwise honesty follows the label's symbol.
  bool is_honest_vertex(VertexId v) const;
  bool is_leaf(VertexId v) const { return children_.at(v).empty(); }
  bool is_closed() const;

  std::vector<VertexId> path(VertexId v) const;
  std::vector<VertexId> with_label(int label) const;
  bool is_ancestor(VertexId a, VertexId v) const;

  // Same tree, read as a fork for another string of the same length or longer.
  Fork rebind(CharString w) const;

  // Canonical encoding invariant under label-preserving isomorphism.
  std::string canonical() const;

 private:
  CharString w_;
  std::vector<int> label_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<VertexId>> children_;
  int height_ = 0;
};

struct Violation {
  std::string axiom;  // "F1", "F2", "F3", "F4" or "F4_delta"
  std::vector<VertexId> vertices;
  std::string message;
};

// Empty result iff F is a fork (delta = 0) or a delta-fork for its string.
std::vector<Violation> validate(const Fork& F, int delta = 0);

int honest_depth(const Fork& F, int slot);

// Last common vertex of two tines.
VertexId intersect(const Fork& F, VertexId t1, VertexId t2);

// Canonical tine order: label sequences along root paths compared
// lexicographically (a proper prefix comes first), ties by vertex id.
bool pi_less(const Fork& F, VertexId a, VertexId b);

// Ancestor-or-self of t with the largest label not exceeding `max_label`;
// the root when no such vertex exists.
VertexId truncate_to(const Fork& F, VertexId t, int max_label);

// Viability at the onset of slot s: the part of t over slots 0..s-1 is at
// least as long as every honest vertex labeled at most s-1.
bool viable_at(const Fork& F, VertexId t, int s);

// Two tines of maximum length sharing no edge into a label above x_len. The
// two tines must be distinct, so the trivial fork is never balanced.
bool is_x_balanced(const Fork& F, int x_len);
inline bool is_balanced(const Fork& F) { return is_x_balanced(F, 0); }

// l(t1) - l(t1 ∩ t2), with the arguments ordered so that l(t1) <= l(t2).
int slot_divergence_pair(const Fork& F, VertexId t1, VertexId t2);
// Maximum over pairs of tines viable at the onset of slot |w|+1.
int slot_divergence(const Fork& F);

class PinchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Re-parents every vertex of depth depth(u)+1 onto u. Vertex ids of the
// result are renumbered in depth order.
Fork pinch(const Fork& F, VertexId u);

// Line format: "w=<string>", then "v <id> <label>" and "e <parent> <child>".
Fork read_fork(std::istream& in);
void write_fork(std::ostream& out, const Fork& F);

}  // namespace forklab
