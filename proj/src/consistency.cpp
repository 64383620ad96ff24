#include "forklab/consistency.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "forklab/family.hpp"
#include "forklab/margin.hpp"

namespace forklab {

std::vector<int> CatalanReport::slots() const {
  std::vector<int> out;
  for (std::size_t s = 1; s < catalan.size(); ++s) {
    if (catalan[s]) out.push_back(static_cast<int>(s));
  }
  return out;
}

CatalanReport catalan_slots(const CharString& w) {
  if (w.kind() == StringKind::SemiSync) throw DomainError("Catalan slots need a string without empty slots");
  const std::size_t n = w.size();
  // walk[i]: honest minus adversarial count over slots 1..i.
  std::vector<int> walk(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) walk[i] = walk[i - 1] + (is_honest(w.at(i)) ? 1 : -1);
  CatalanReport r{std::vector<bool>(n + 1), std::vector<bool>(n + 1), std::vector<bool>(n + 1)};
  for (std::size_t s = 1; s <= n; ++s) {
    bool left = true, right = true;
    for (std::size_t l = 1; l <= s && left; ++l) left = walk[s] - walk[l - 1] > 0;
    for (std::size_t q = s; q <= n && right; ++q) right = walk[q] - walk[s - 1] > 0;
    r.left_catalan[s] = left;
    r.right_catalan[s] = right;
    r.catalan[s] = left && right;
  }
  return r;
}

namespace {

int slot_count(const Fork& F) { return static_cast<int>(F.string().size()); }

// Label-s vertex on the root path of v, or -1.
VertexId through(const Fork& F, VertexId v, int s) {
  const VertexId u = truncate_to(F, v, s);
  return F.label(u) == s ? u : -1;
}

// Label-s vertices met by viable tines, -1 standing for "none".
std::vector<VertexId> bottlenecks(const Fork& F, int s, int first_onset) {
  std::vector<VertexId> out;
  for (int k = std::max(first_onset, 1); k <= slot_count(F) + 1; ++k) {
    for (VertexId v = 0; v < F.size(); ++v) {
      if (viable_at(F, v, k)) out.push_back(through(F, v, s));
    }
  }
  return out;
}

std::vector<VertexId> viable_tines(const Fork& F) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < F.size(); ++v) {
    if (viable_at(F, v, slot_count(F) + 1)) out.push_back(v);
  }
  return out;
}

template <class Trim>
bool cp_broken(const Fork& F, Trim&& trim) {
  const std::vector<VertexId> viable = viable_tines(F);
  for (VertexId t1 : viable) {
    const VertexId kept = trim(t1);
    for (VertexId t2 : viable) {
      if (F.label(t1) <= F.label(t2) && !F.is_ancestor(kept, t2)) return true;
    }
  }
  return false;
}

void require_honest_slot(const CharString& w, int s) {
  if (s < 1 || s > static_cast<int>(w.size())) throw DomainError("slot outside 1..|w|");
  if (!is_honest(w.at(s))) throw DomainError("slot " + std::to_string(s) + " is not honest");
}

int dangling_paths(const EnumerationCaps& caps) { return caps.closed_only ? 0 : caps.max_dangling_paths; }

EnumerationCaps closed(EnumerationCaps caps) {
  caps.closed_only = true;
  caps.delta = 0;
  return caps;
}

// Per-prefix answers are shared by every string extending the prefix.
class PrefixMemo {
 public:
  template <class Compute>
  bool get(const std::string& key, Compute&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const bool value = compute();
    std::lock_guard lock(mu_);
    memo_.emplace(key, value);
    return value;
  }

 private:
  std::mutex mu_;
  std::map<std::string, bool> memo_;
};

PrefixMemo& memo() {
  static PrefixMemo m;
  return m;
}

// Some core of some prefix of length >= from breaks the property.
template <class Broken>
bool any_prefix_broken(const CharString& w, int from, const EnumerationCaps& caps, const std::string& tag,
                       Broken&& broken) {
  const EnumerationCaps c = closed(caps);
  for (int t = std::max(from, 0); t <= static_cast<int>(w.size()); ++t) {
    const CharString prefix = w.prefix(t);
    const std::string key = tag + "|" + prefix.str() + "|" + caps.key();
    const bool hit = memo().get(key, [&] {
      for (const Fork& core : default_fork_cache().get(prefix, c)) {
        if (broken(core)) return true;
      }
      return false;
    });
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool bottleneck_in_fork(const Fork& F, int s, int first_onset) {
  for (VertexId u : bottlenecks(F, s, first_onset)) {
    if (u < 0) return false;
  }
  return true;
}

bool uvp_in_fork(const Fork& F, int s, int first_onset) {
  const std::vector<VertexId> seen = bottlenecks(F, s, first_onset);
  for (VertexId u : seen) {
    if (u < 0 || u != seen.front()) return false;
  }
  return true;
}

bool diverges_prior_in_fork(const Fork& F, int s) {
  std::vector<VertexId> top;
  for (VertexId v = 0; v < F.size(); ++v) {
    if (F.depth(v) == F.height()) top.push_back(v);
  }
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (through(F, top[i], s) != through(F, top[j], s)) return true;
    }
  }
  return false;
}

bool slot_cp_broken_in_fork(const Fork& F, int k) {
  return cp_broken(F, [&](VertexId t) { return truncate_to(F, t, F.label(t) - k); });
}

bool block_cp_broken_in_fork(const Fork& F, int k) {
  return cp_broken(F, [&](VertexId t) {
    for (int i = 0; i < k && t != kRoot; ++i) t = F.parent(t);
    return t;
  });
}

bool follows_tie_breaking(const Fork& F) {
  const CharString& w = F.string();
  for (int j = 1; j <= slot_count(F); ++j) {
    if (!is_honest(w.at(j))) continue;
    int deepest = -1;
    for (VertexId v = 0; v < F.size(); ++v) {
      if (F.label(v) < j) deepest = std::max(deepest, F.depth(v));
    }
    VertexId least = -1;
    bool all_honest = true;
    for (VertexId v = 0; v < F.size(); ++v) {
      if (F.label(v) >= j || F.depth(v) != deepest) continue;
      all_honest = all_honest && F.is_honest_vertex(v);
      if (least < 0 || pi_less(F, v, least)) least = v;
    }
    if (!all_honest) continue;
    for (VertexId v : F.with_label(j)) {
      if (F.parent(v) != least) return false;
    }
  }
  return true;
}

bool has_uvp_oracle(const CharString& w, int s, const EnumerationCaps& caps) {
  require_honest_slot(w, s);
  const int paths = dangling_paths(caps);
  return !any_prefix_broken(w, s, caps, "uvp" + std::to_string(s), [&](const Fork& core) {
    return family::uvp_broken(core, s, s + 1, paths);
  });
}

bool has_bottleneck_oracle(const CharString& w, int s, const EnumerationCaps& caps) {
  require_honest_slot(w, s);
  const int paths = dangling_paths(caps);
  return !any_prefix_broken(w, s, caps, "bp" + std::to_string(s), [&](const Fork& core) {
    return family::bottleneck_broken(core, s, s + 1, paths);
  });
}

bool has_uvp_tie_broken_oracle(const CharString& w, int s, int first_onset, const EnumerationCaps& caps) {
  require_honest_slot(w, s);
  EnumerationCaps c = caps;
  c.delta = 0;
  for (int t = s; t <= static_cast<int>(w.size()); ++t) {
    for (const Fork& F : default_fork_cache().get(w.prefix(t), c)) {
      if (follows_tie_breaking(F) && !uvp_in_fork(F, s, first_onset)) return false;
    }
  }
  return true;
}

bool has_uvp_fast(const CharString& w, int s) {
  if (s < 1 || s > static_cast<int>(w.size())) throw DomainError("slot outside 1..|w|");
  if (w.at(s) != Symbol::UniqueHonest) {
    throw DomainError("the margin characterization of the UVP covers uniquely honest slots only");
  }
  const CharString x = w.prefix(s - 1);
  MarginState st{rho_recursive(x), rho_recursive(x)};
  for (std::size_t i = s; i <= w.size(); ++i) {
    st = margin_step(st, w.at(i));
    if (st.mu >= 0) return false;
  }
  return true;
}

bool is_settled_oracle(const CharString& w, int s, int k, const EnumerationCaps& caps) {
  if (s < 1 || k < 0 || s + k > static_cast<int>(w.size())) throw DomainError("need 1 <= s and s + k <= |w|");
  const int paths = dangling_paths(caps);
  return !any_prefix_broken(w, s + k, caps, "settle" + std::to_string(s), [&](const Fork& core) {
    return family::diverges_prior(core, s, paths);
  });
}

bool is_settled_fast(const CharString& w, int s, int k) {
  if (s < 1 || k < 0 || s + k > static_cast<int>(w.size())) throw DomainError("need 1 <= s and s + k <= |w|");
  if (w.kind() == StringKind::SemiSync) throw DomainError("reduce semi-synchronous strings first");
  const CharString x = w.prefix(s - 1);
  MarginState st{rho_recursive(x), rho_recursive(x)};
  for (int i = s; i <= static_cast<int>(w.size()); ++i) {
    st = margin_step(st, w.at(i));
    if (i >= s + k && st.mu >= 0) return false;
  }
  return true;
}

bool violates_k_slot_cp(const CharString& w, int k, const EnumerationCaps& caps) {
  if (k < 0 || k > static_cast<int>(w.size())) throw DomainError("need 0 <= k <= |w|");
  const int paths = dangling_paths(caps);
  for (const Fork& core : default_fork_cache().get(w, closed(caps))) {
    if (family::slot_cp_broken(core, k, paths)) return true;
  }
  return false;
}

bool cp_implied_by_uvp(const CharString& w, int k) {
  if (k < 1) throw DomainError("window length must be at least 1");
  const int n = static_cast<int>(w.size());
  std::vector<bool> anchor(n + 1, false);
  for (int s = 1; s <= n; ++s) anchor[s] = w.at(s) == Symbol::UniqueHonest && has_uvp_fast(w, s);
  for (int first = 1; first + k - 1 <= n; ++first) {
    bool found = false;
    for (int s = first; s < first + k && !found; ++s) found = anchor[s];
    if (!found) return false;
  }
  return true;
}

int max_slot_divergence_oracle(const CharString& w, const EnumerationCaps& caps) {
  const int paths = dangling_paths(caps);
  int best = 0;
  for (const Fork& core : default_fork_cache().get(w, closed(caps))) {
    best = std::max(best, family::max_slot_divergence(core, paths));
  }
  return best;
}

bool has_balanced_decomposition(const CharString& w, int k, const EnumerationCaps& caps) {
  if (k < 0) throw DomainError("k must be non-negative");
  const int paths = dangling_paths(caps);
  // x-balance is monotone in |x|, so the smallest balanced split decides.
  for (int m = k; m <= static_cast<int>(w.size()); ++m) {
    for (const Fork& core : default_fork_cache().get(w.prefix(m), closed(caps))) {
      if (family::min_balanced_split(core, paths) <= m - k) return true;
    }
  }
  return false;
}

bool two_consecutive_catalan_uvp(const CharString& w, int s) {
  if (w.kind() != StringKind::Bivalent) throw DomainError("expected a bivalent string");
  if (s < 2 || s > static_cast<int>(w.size())) throw DomainError("need 2 <= s <= |w|");
  const CatalanReport r = catalan_slots(w);
  return r.catalan[s - 1] && r.catalan[s];
}

}  // namespace forklab
