#include "forklab/fork.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace forklab {

Fork::Fork(CharString w) : w_(std::move(w)) {
  label_.push_back(0);
  parent_.push_back(-1);
  depth_.push_back(0);
  children_.emplace_back();
}

VertexId Fork::add_vertex(VertexId parent, int label) {
  if (parent < 0 || parent >= size()) throw StructureError("unknown parent vertex");
  if (label < 1 || label > static_cast<int>(w_.size())) {
    throw DomainError("label " + std::to_string(label) + " outside 1.." +
                      std::to_string(w_.size()));
  }
  const VertexId v = size();
  label_.push_back(label);
  parent_.push_back(parent);
  depth_.push_back(depth_[parent] + 1);
  children_.emplace_back();
  children_[parent].push_back(v);
  height_ = std::max(height_, depth_[v]);
  return v;
}

bool Fork::is_honest_vertex(VertexId v) const {
  return v == kRoot || is_honest(w_.at(label_.at(v)));
}

bool Fork::is_closed() const {
  for (VertexId v = 0; v < size(); ++v) {
    if (is_leaf(v) && !is_honest_vertex(v)) return false;
  }
  return true;
}

std::vector<VertexId> Fork::path(VertexId v) const {
  std::vector<VertexId> out;
  for (; v != -1; v = parent_.at(v)) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Fork::with_label(int label) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (label_[v] == label) out.push_back(v);
  }
  return out;
}

bool Fork::is_ancestor(VertexId a, VertexId v) const {
  while (v != -1 && depth_[v] > depth_[a]) v = parent_[v];
  return v == a;
}

Fork Fork::rebind(CharString w) const {
  Fork out(std::move(w));
  for (VertexId v = 1; v < size(); ++v) out.add_vertex(parent_[v], label_[v]);
  return out;
}

std::string Fork::canonical() const {
  // Post-order so every child is encoded before its parent.
  std::vector<std::string> code(size());
  std::vector<VertexId> order;
  order.reserve(size());
  std::vector<VertexId> stack{kRoot};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexId c : children_[v]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    std::vector<const std::string*> kids;
    for (VertexId c : children_[v]) kids.push_back(&code[c]);
    std::sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return *a < *b; });
    // Fixed-width label keeps lexicographic order equal to (label, subtree) order.
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05d(", label_[v]);
    std::string s(buf);
    for (auto* k : kids) s += *k;
    s += ')';
    code[v] = std::move(s);
  }
  return code[kRoot];
}

std::vector<Violation> validate(const Fork& F, int delta) {
  if (delta < 0) throw DomainError("delta must be non-negative");
  const CharString& w = F.string();
  const int n = static_cast<int>(w.size());
  std::vector<Violation> out;
  if (F.label(kRoot) != 0) out.push_back({"F1", {kRoot}, "root label is not 0"});

  std::vector<std::vector<VertexId>> by_label(n + 1);
  for (VertexId v = 1; v < F.size(); ++v) {
    const int l = F.label(v);
    if (l < 1 || l > n) throw DomainError("vertex label outside the string");
    by_label[l].push_back(v);
    const VertexId p = F.parent(v);
    if (F.label(p) >= l) {
      out.push_back({"F2", {p, v},
                     "labels " + std::to_string(F.label(p)) + " -> " + std::to_string(l) +
                         " do not increase"});
    }
  }

  for (int i = 1; i <= n; ++i) {
    const std::size_t c = by_label[i].size();
    switch (w.at(i)) {
      case Symbol::UniqueHonest:
        if (c != 1) {
          out.push_back({"F3", by_label[i],
                         "uniquely honest slot " + std::to_string(i) + " labels " +
                             std::to_string(c) + " vertices"});
        }
        break;
      case Symbol::MultiHonest:
        if (c == 0) {
          out.push_back({"F3", {}, "multiply honest slot " + std::to_string(i) + " is unused"});
        }
        break;
      case Symbol::Empty:
        if (c != 0) {
          out.push_back({"F3", by_label[i], "empty slot " + std::to_string(i) + " labels a vertex"});
        }
        break;
      case Symbol::Adversarial: break;
    }
  }

  const std::string f4 = delta == 0 ? "F4" : "F4_delta";
  for (int i = 1; i <= n; ++i) {
    if (!is_honest(w.at(i))) continue;
    for (int j = i + delta + 1; j <= n; ++j) {
      if (!is_honest(w.at(j))) continue;
      for (VertexId a : by_label[i]) {
        for (VertexId b : by_label[j]) {
          if (F.depth(a) >= F.depth(b)) {
            out.push_back({f4, {a, b},
                           "honest slot " + std::to_string(i) + " is not shallower than slot " +
                               std::to_string(j)});
          }
        }
      }
    }
  }
  return out;
}

int honest_depth(const Fork& F, int slot) {
  if (slot < 1 || slot > static_cast<int>(F.string().size()) || !is_honest(F.string().at(slot))) {
    throw DomainError("slot " + std::to_string(slot) + " is not an honest slot of the string");
  }
  int best = -1;
  for (VertexId v : F.with_label(slot)) best = std::max(best, F.depth(v));
  if (best < 0) throw DomainError("no vertex carries label " + std::to_string(slot));
  return best;
}

VertexId intersect(const Fork& F, VertexId a, VertexId b) {
  while (F.depth(a) > F.depth(b)) a = F.parent(a);
  while (F.depth(b) > F.depth(a)) b = F.parent(b);
  while (a != b) {
    a = F.parent(a);
    b = F.parent(b);
  }
  return a;
}

bool pi_less(const Fork& F, VertexId a, VertexId b) {
  std::vector<int> la, lb;
  for (VertexId v : F.path(a)) la.push_back(F.label(v));
  for (VertexId v : F.path(b)) lb.push_back(F.label(v));
  if (la != lb) return la < lb;
  return a < b;
}

VertexId truncate_to(const Fork& F, VertexId t, int max_label) {
  while (t != kRoot && F.label(t) > max_label) t = F.parent(t);
  return t;
}

bool viable_at(const Fork& F, VertexId t, int s) {
  const int n = static_cast<int>(F.string().size());
  if (s < 1 || s > n + 1) throw DomainError("slot outside 1..|w|+1");
  const int len = F.depth(truncate_to(F, t, s - 1));
  for (VertexId v = 1; v < F.size(); ++v) {
    if (F.label(v) <= s - 1 && F.is_honest_vertex(v) && F.depth(v) > len) return false;
  }
  return true;
}

bool is_x_balanced(const Fork& F, int x_len) {
  std::vector<VertexId> top;
  for (VertexId v = 0; v < F.size(); ++v) {
    if (F.depth(v) == F.height()) top.push_back(v);
  }
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (F.label(intersect(F, top[i], top[j])) <= x_len) return true;
    }
  }
  return false;
}

int slot_divergence_pair(const Fork& F, VertexId t1, VertexId t2) {
  if (F.label(t1) > F.label(t2)) std::swap(t1, t2);
  return F.label(t1) - F.label(intersect(F, t1, t2));
}

int slot_divergence(const Fork& F) {
  const int end = static_cast<int>(F.string().size()) + 1;
  std::vector<VertexId> viable;
  for (VertexId v = 0; v < F.size(); ++v) {
    if (viable_at(F, v, end)) viable.push_back(v);
  }
  int best = 0;
  for (VertexId a : viable) {
    for (VertexId b : viable) best = std::max(best, slot_divergence_pair(F, a, b));
  }
  return best;
}

Fork pinch(const Fork& F, VertexId u) {
  if (u < 0 || u >= F.size()) throw DomainError("pinch vertex does not exist");
  const int d = F.depth(u) + 1;
  std::vector<VertexId> parent(F.size(), -1);
  for (VertexId v = 1; v < F.size(); ++v) {
    parent[v] = F.depth(v) == d ? u : F.parent(v);
    if (F.label(parent[v]) >= F.label(v)) {
      throw PinchError("pinching at vertex " + std::to_string(u) +
                       " breaks label monotonicity at vertex " + std::to_string(v));
    }
  }
  // Rebuild in depth order so every parent exists before its children.
  std::vector<VertexId> order(F.size());
  for (VertexId v = 0; v < F.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return F.depth(a) < F.depth(b); });
  Fork out(F.string());
  std::vector<VertexId> id(F.size(), -1);
  id[kRoot] = kRoot;
  for (VertexId v : order) {
    if (v == kRoot) continue;
    id[v] = out.add_vertex(id[parent[v]], F.label(v));
  }
  return out;
}

Fork read_fork(std::istream& in) {
  std::string line;
  bool have_w = false;
  CharString w;
  std::map<long, int> labels;
  std::vector<std::pair<long, long>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& msg) {
      throw StructureError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (tag.rfind("w=", 0) == 0) {
      if (have_w) fail("string given twice");
      w = CharString::parse(tag.substr(2));
      have_w = true;
    } else if (tag == "v") {
      long id = 0;
      int label = 0;
      if (!(ls >> id >> label)) fail("expected 'v <id> <label>'");
      if (id == 0) fail("id 0 is reserved for the root");
      if (!labels.emplace(id, label).second) fail("vertex " + std::to_string(id) + " declared twice");
    } else if (tag == "e") {
      long p = 0, c = 0;
      if (!(ls >> p >> c)) fail("expected 'e <parent> <child>'");
      edges.emplace_back(p, c);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!have_w) throw StructureError("missing 'w=' line");

  std::map<long, long> parent_of;
  std::map<long, std::vector<long>> kids;
  for (auto [p, c] : edges) {
    if (p != 0 && !labels.count(p)) throw StructureError("edge from undeclared vertex " + std::to_string(p));
    if (c == 0) throw StructureError("edge into the root");
    if (!labels.count(c)) throw StructureError("edge to undeclared vertex " + std::to_string(c));
    if (!parent_of.emplace(c, p).second) {
      throw StructureError("vertex " + std::to_string(c) + " has two parents");
    }
    kids[p].push_back(c);
  }
  for (auto& [id, label] : labels) {
    if (!parent_of.count(id)) throw StructureError("vertex " + std::to_string(id) + " is a second root");
  }

  Fork F(w);
  std::map<long, VertexId> internal{{0, kRoot}};
  std::vector<long> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (long c : kids[queue[i]]) {
      const int label = labels[c];
      if (label < 1 || label > static_cast<int>(w.size())) {
        throw StructureError("vertex " + std::to_string(c) + " has label outside the string");
      }
      internal[c] = F.add_vertex(internal[queue[i]], label);
      queue.push_back(c);
    }
  }
  if (internal.size() != labels.size() + 1) throw StructureError("fork contains a cycle");
  return F;
}

void write_fork(std::ostream& out, const Fork& F) {
  out << "w=" << F.string().str() << '\n';
  for (VertexId v = 1; v < F.size(); ++v) out << "v " << v << ' ' << F.label(v) << '\n';
  for (VertexId v = 1; v < F.size(); ++v) out << "e " << F.parent(v) << ' ' << v << '\n';
}

}  // namespace forklab
