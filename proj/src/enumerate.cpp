#include "forklab/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace forklab {

std::string EnumerationCaps::key() const {
  return std::to_string(max_string_len) + "/" + std::to_string(multi_honest_cap) + "/" +
         (closed_only ? "c" : "o") + "/" + std::to_string(max_dangling_paths) + "/" +
         std::to_string(delta);
}

namespace {

using ForkSet = std::map<std::string, Fork>;

void insert(ForkSet& set, Fork F) {
  std::string key = F.canonical();
  set.emplace(std::move(key), std::move(F));
}

std::vector<int> adversarial_slots(const CharString& w) {
  std::vector<int> out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (w.at(i) == Symbol::Adversarial) out.push_back(static_cast<int>(i));
  }
  return out;
}

// Slots in `slots` strictly between lo and hi.
std::vector<int> between(const std::vector<int>& slots, int lo, int hi) {
  std::vector<int> out;
  for (int s : slots) {
    if (s > lo && s < hi) out.push_back(s);
  }
  return out;
}

// Honest vertex of slot j must be deeper than this (F4 / F4_delta).
int depth_floor(const Fork& F, int j, int delta) {
  int d = 0;
  for (VertexId v = 1; v < F.size(); ++v) {
    if (F.is_honest_vertex(v) && F.label(v) + delta < j) d = std::max(d, F.depth(v));
  }
  return d;
}

// Adds `remaining` honest vertices labeled j. Each hangs off an existing
// vertex through a fresh chain of adversarial vertices; every closed fork
// arises this way because an adversarial vertex of a closed fork lies on
// the root path of some honest vertex with a larger label.
void attach_honest(const Fork& F, int j, int remaining, int floor, const std::vector<int>& adv,
                   ForkSet& out) {
  if (remaining == 0) {
    insert(out, F);
    return;
  }
  for (VertexId p = 0; p < F.size(); ++p) {
    if (F.label(p) >= j) continue;
    const std::vector<int> gap = between(adv, F.label(p), j);
    const unsigned subsets = 1u << gap.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      const int len = __builtin_popcount(mask) + 1;
      if (F.depth(p) + len <= floor) continue;
      Fork G = F;
      VertexId tip = p;
      for (std::size_t b = 0; b < gap.size(); ++b) {
        if (mask & (1u << b)) tip = G.add_vertex(tip, gap[b]);
      }
      G.add_vertex(tip, j);
      attach_honest(G, j, remaining - 1, floor, adv, out);
    }
  }
}

ForkSet closed_forks(const CharString& w, const EnumerationCaps& caps) {
  const std::vector<int> adv = adversarial_slots(w);
  ForkSet level;
  insert(level, Fork(w));
  for (std::size_t j = 1; j <= w.size(); ++j) {
    const Symbol s = w.at(j);
    if (!is_honest(s)) continue;
    const int most = s == Symbol::UniqueHonest ? 1 : caps.multi_honest_cap;
    ForkSet next;
    for (const auto& [key, F] : level) {
      const int floor = depth_floor(F, static_cast<int>(j), caps.delta);
      for (int c = 1; c <= most; ++c) attach_honest(F, static_cast<int>(j), c, floor, adv, next);
    }
    level = std::move(next);
  }
  return level;
}

struct Dangling {
  VertexId base;
  std::vector<int> labels;
};

// Every nonempty adversarial path that may hang below a core vertex.
std::vector<Dangling> dangling_choices(const Fork& core, const std::vector<int>& adv, int n) {
  std::vector<Dangling> out;
  for (VertexId p = 0; p < core.size(); ++p) {
    const std::vector<int> after = between(adv, core.label(p), n + 1);
    const unsigned subsets = 1u << after.size();
    for (unsigned mask = 1; mask < subsets; ++mask) {
      Dangling d{p, {}};
      for (std::size_t b = 0; b < after.size(); ++b) {
        if (mask & (1u << b)) d.labels.push_back(after[b]);
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

void hang(Fork& G, const Dangling& d) {
  VertexId tip = d.base;
  for (int l : d.labels) tip = G.add_vertex(tip, l);
}

// Multisets of at most `paths` dangling paths, each attached to the core.
void add_dangling(const Fork& core, const std::vector<Dangling>& choices, std::size_t first,
                  int paths, const Fork& F, ForkSet& out) {
  if (paths == 0) return;
  for (std::size_t i = first; i < choices.size(); ++i) {
    Fork G = F;
    hang(G, choices[i]);
    add_dangling(core, choices, i, paths - 1, G, out);
    insert(out, std::move(G));
  }
}

}  // namespace

std::vector<Fork> enumerate_forks(const CharString& w, const EnumerationCaps& caps) {
  if (w.size() > caps.max_string_len) {
    throw CapError("string of length " + std::to_string(w.size()) +
                   " exceeds the enumeration cap of " + std::to_string(caps.max_string_len));
  }
  if (caps.multi_honest_cap < 1) throw DomainError("multi_honest_cap must be at least 1");
  if (caps.delta < 0) throw DomainError("delta must be non-negative");

  ForkSet all = closed_forks(w, caps);
  if (!caps.closed_only && caps.max_dangling_paths > 0) {
    const std::vector<int> adv = adversarial_slots(w);
    ForkSet open;
    for (const auto& [key, core] : all) {
      const auto choices = dangling_choices(core, adv, static_cast<int>(w.size()));
      add_dangling(core, choices, 0, caps.max_dangling_paths, core, open);
    }
    all.merge(open);
  }
  std::vector<Fork> out;
  out.reserve(all.size());
  for (auto& [key, F] : all) out.push_back(std::move(F));
  return out;
}

const std::vector<Fork>& ForkCache::get(const CharString& w, const EnumerationCaps& caps) {
  const std::string key = w.str() + "|" + caps.key();
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
  }
  auto forks = std::make_shared<const std::vector<Fork>>(enumerate_forks(w, caps));
  std::lock_guard lock(mu_);
  return *memo_.emplace(key, std::move(forks)).first->second;
}

ForkCache& default_fork_cache() {
  static ForkCache cache;
  return cache;
}

}  // namespace forklab
