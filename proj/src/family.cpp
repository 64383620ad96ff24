#include "forklab/family.hpp"

#include <algorithm>

namespace forklab::family {

namespace {

struct View {
  explicit View(const Fork& core) : F(core), n(static_cast<int>(core.string().size())) {
    const CharString& w = F.string();
    after.resize(F.size());
    for (VertexId v = 0; v < F.size(); ++v) {
      for (int j = F.label(v) + 1; j <= n; ++j) {
        if (w.at(j) == Symbol::Adversarial) after[v].push_back(j);
      }
    }
    honest_upto.assign(n + 1, 0);
    for (VertexId v = 1; v < F.size(); ++v) {
      if (F.is_honest_vertex(v)) {
        honest_upto[F.label(v)] = std::max(honest_upto[F.label(v)], F.depth(v));
      }
    }
    for (int j = 1; j <= n; ++j) honest_upto[j] = std::max(honest_upto[j], honest_upto[j - 1]);
  }

  // Label-s vertex on the root path of v, or -1.
  VertexId through(VertexId v, int s) const {
    const VertexId u = truncate_to(F, v, s);
    return F.label(u) == s ? u : -1;
  }

  int longest_reach() const {
    int h = F.height();
    for (VertexId p = 0; p < F.size(); ++p) {
      h = std::max(h, F.depth(p) + static_cast<int>(after[p].size()));
    }
    return h;
  }

  const Fork& F;
  int n;
  std::vector<std::vector<int>> after;
  std::vector<int> honest_upto;
};

// A core vertex (step == 0) or the step-th vertex of the full dangling path
// below `base`.
struct Tine {
  VertexId base;
  int step;
  int label;
  int depth;
};

std::vector<Tine> full_path_tines(const View& V, int paths) {
  std::vector<Tine> out;
  for (VertexId v = 0; v < V.F.size(); ++v) out.push_back({v, 0, V.F.label(v), V.F.depth(v)});
  if (paths < 1) return out;
  for (VertexId p = 0; p < V.F.size(); ++p) {
    for (std::size_t i = 0; i < V.after[p].size(); ++i) {
      out.push_back({p, static_cast<int>(i) + 1, V.after[p][i], V.F.depth(p) + static_cast<int>(i) + 1});
    }
  }
  return out;
}

int chains(const Tine& a, const Tine& b, bool separate) {
  const int c = (a.step > 0) + (b.step > 0);
  if (c == 2 && a.base == b.base && !separate) return 1;
  return c;
}

// Label where two tines part. Tines on paths off the same base either share
// that path (the shallower is a prefix of the deeper) or sit on copies.
int meet_label(const View& V, const Tine& a, const Tine& b, bool separate) {
  if (a.step > 0 && b.step > 0 && a.base == b.base) {
    return separate ? V.F.label(a.base) : std::min(a.label, b.label);
  }
  return V.F.label(intersect(V.F, a.base, b.base));
}

bool viable_from(const View& V, const Tine& t, int first_onset) {
  const int onset = std::max(first_onset, t.label + 1);
  return onset <= V.n + 1 && t.depth >= V.honest_upto[onset - 1];
}

// Maximum-length tine of a fork of height h, summarized by the few facts a
// query reads. `mark` is query specific; `fresh` marks a path carrying its
// own label-s vertex.
struct Top {
  VertexId base;
  bool dangling;
  VertexId mark;
  bool fresh;
  int count;
};

template <class Emit>
void tops_at(const View& V, int h, int paths, Emit&& emit) {
  if (h == V.F.height()) {
    for (VertexId v = 0; v < V.F.size(); ++v) {
      if (V.F.depth(v) == h) emit(v, -1);
    }
  }
  if (paths < 1) return;
  for (VertexId p = 0; p < V.F.size(); ++p) {
    const int len = h - V.F.depth(p);
    if (len >= 1 && len <= static_cast<int>(V.after[p].size())) emit(p, len);
  }
}

template <class Pred>
bool any_pair(const std::vector<Top>& tops, int paths, Pred&& pred) {
  for (std::size_t i = 0; i < tops.size(); ++i) {
    // A dangling shape may appear twice, as two separate paths.
    const std::size_t from = tops[i].dangling && paths >= 2 ? i : i + 1;
    for (std::size_t j = from; j < tops.size(); ++j) {
      if (tops[i].dangling + tops[j].dangling > paths) continue;
      if (pred(tops[i], tops[j], i == j)) return true;
    }
  }
  return false;
}

int meet_top(const View& V, const Top& a, const Top& b) {
  return V.F.label(intersect(V.F, a.base, b.base));
}

}  // namespace

bool bottleneck_broken(const Fork& core, int s, int first_onset, int paths) {
  const View V(core);
  for (const Tine& t : full_path_tines(V, paths)) {
    if (viable_from(V, t, first_onset) && V.through(t.base, s) < 0) return true;
  }
  return false;
}

bool uvp_broken(const Fork& core, int s, int first_onset, int paths) {
  const View V(core);
  VertexId seen = -1;
  for (const Tine& t : full_path_tines(V, paths)) {
    if (!viable_from(V, t, first_onset)) continue;
    const VertexId u = V.through(t.base, s);
    if (u < 0 || (seen >= 0 && u != seen)) return true;
    seen = u;
  }
  return false;
}

bool diverges_prior(const Fork& core, int s, int paths) {
  const View V(core);
  const bool adversarial_s = s >= 1 && s <= V.n && core.string().at(s) == Symbol::Adversarial;
  for (int h = core.height(); h <= V.longest_reach(); ++h) {
    std::vector<Top> tops;
    tops_at(V, h, paths, [&](VertexId b, int len) {
      if (len < 0) {
        tops.push_back({b, false, V.through(b, s), false, 0});
        return;
      }
      if (!adversarial_s || s <= core.label(b)) {
        tops.push_back({b, true, V.through(b, s), false, 0});
        return;
      }
      tops.push_back({b, true, -1, true, 0});
      if (len < static_cast<int>(V.after[b].size())) tops.push_back({b, true, -1, false, 0});
    });
    const bool hit = any_pair(tops, paths, [](const Top& a, const Top& b, bool) {
      if (a.fresh || b.fresh) return true;
      return a.mark != b.mark;
    });
    if (hit) return true;
  }
  return false;
}

int min_balanced_split(const Fork& core, int paths) {
  const View V(core);
  int best = kNever;
  for (int h = core.height(); h <= V.longest_reach(); ++h) {
    std::vector<Top> tops;
    tops_at(V, h, paths, [&](VertexId b, int len) { tops.push_back({b, len > 0, -1, false, 0}); });
    any_pair(tops, paths, [&](const Top& a, const Top& b, bool) {
      best = std::min(best, meet_top(V, a, b));
      return false;
    });
  }
  return best;
}

int max_slot_divergence(const Fork& core, int paths) {
  const View V(core);
  std::vector<Tine> viable;
  for (const Tine& t : full_path_tines(V, paths)) {
    if (viable_from(V, t, V.n + 1)) viable.push_back(t);
  }
  const bool separate = paths >= 2;
  int best = 0;
  for (const Tine& a : viable) {
    for (const Tine& b : viable) {
      if (chains(a, b, separate) > paths) continue;
      best = std::max(best, std::min(a.label, b.label) - meet_label(V, a, b, separate));
    }
  }
  return best;
}

bool slot_cp_broken(const Fork& core, int k, int paths) {
  const View V(core);
  std::vector<Tine> viable;
  for (const Tine& t : full_path_tines(V, paths)) {
    if (viable_from(V, t, V.n + 1)) viable.push_back(t);
  }
  for (const Tine& t1 : viable) {
    const int cut = t1.label - k;
    const bool cut_in_path = t1.step > 0 && cut >= V.after[t1.base].front();
    if (cut_in_path) {
      // Only t1's own path holds the kept dangling vertex; a second path
      // off the same base (even a copy of t1) does not.
      if (paths >= 2) return true;
      for (const Tine& t2 : viable) {
        if (t2.step == 0 && t2.label >= t1.label) return true;
      }
      continue;
    }
    const VertexId kept = truncate_to(V.F, t1.base, cut);
    for (const Tine& t2 : viable) {
      if (t2.label < t1.label || chains(t1, t2, true) > paths) continue;
      if (!V.F.is_ancestor(kept, t2.base)) return true;
    }
  }
  return false;
}

bool delta_settlement_broken(const Fork& core, int s, int k, int paths) {
  const View V(core);
  const bool adversarial_s = s >= 1 && s <= V.n && core.string().at(s) == Symbol::Adversarial;
  auto later = [&](VertexId v) {
    int c = 0;
    for (; v != kRoot; v = core.parent(v)) c += core.label(v) > s;
    return c;
  };
  for (int h = core.height(); h <= V.longest_reach(); ++h) {
    std::vector<Top> tops;
    tops_at(V, h, paths, [&](VertexId b, int len) {
      const bool on_s = V.through(b, s) >= 0;
      if (len < 0) {
        tops.push_back({b, false, -1, on_s, later(b)});
        return;
      }
      int before = 0, at = 0, beyond = 0;
      for (int l : V.after[b]) (l < s ? before : l == s ? at : beyond)++;
      const bool can_take_s = adversarial_s && at == 1;
      for (int take = 0; take <= (can_take_s ? 1 : 0); ++take) {
        // Fill with slots after s first, then the rest.
        const int m = std::min(beyond, len - take);
        if (m < 0 || len - take - m > before) continue;
        tops.push_back({b, true, -1, on_s || take == 1, later(b) + m});
      }
    });
    const bool hit = any_pair(tops, paths, [&](const Top& a, const Top& b, bool) {
      return (a.fresh || b.fresh) && a.count >= k && b.count >= k && meet_top(V, a, b) <= s - 1;
    });
    if (hit) return true;
  }
  return false;
}

}  // namespace forklab::family
