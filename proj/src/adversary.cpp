#include "forklab/adversary.hpp"

#include <algorithm>
#include <climits>

#include "forklab/margin.hpp"

namespace forklab {

int AdversaryState::rho() const { return *std::max_element(reach_.begin(), reach_.end()); }

void AdversaryState::absorb(Symbol b) {
  if (b == Symbol::Empty) throw DomainError("the adversary works on synchronous strings");
  fork_ = fork_.rebind(fork_.string().with(b));
  // A fresh adversarial slot adds to every reserve.
  if (b == Symbol::Adversarial) {
    for (int& r : reach_) ++r;
  }
}

void AdversaryState::extend(const std::vector<VertexId>& tines) {
  const CharString& w = fork_.string();
  const int slot = static_cast<int>(w.size());
  if (slot == 0 || !is_honest(w.at(slot))) throw DomainError("extensions need an honest newest slot");
  const int height = fork_.height();
  // Reserve of a label inside the string before this slot.
  auto reserve = [&](int label) {
    int c = 0;
    for (int j = label + 1; j < slot; ++j) c += w.at(j) == Symbol::Adversarial;
    return c;
  };
  for (int& r : reach_) --r;  // the height grows by one
  for (VertexId t : tines) {
    const int gap = height - fork_.depth(t);
    std::vector<int> pad;
    for (int j = fork_.label(t) + 1; j < slot && static_cast<int>(pad.size()) < gap; ++j) {
      if (w.at(j) == Symbol::Adversarial) pad.push_back(j);
    }
    if (static_cast<int>(pad.size()) < gap) throw DomainError("tine has negative reach; cannot extend");
    VertexId tip = t;
    for (int label : pad) {
      tip = fork_.add_vertex(tip, label);
      reach_.push_back(reserve(label) - (height + 1 - fork_.depth(tip)));
    }
    fork_.add_vertex(tip, slot);
    reach_.push_back(0);
  }
}

AdversaryState astar_step(AdversaryState st, Symbol b) {
  st.absorb(b);
  if (b == Symbol::Adversarial) return st;
  // Reaches relative to the string before b.
  const Fork& F = st.fork();
  std::vector<int> reach = st.reaches();
  const int rho = *std::max_element(reach.begin(), reach.end());
  std::vector<VertexId> Z, R;
  for (VertexId v = 0; v < F.size(); ++v) {
    if (reach[v] == 0) Z.push_back(v);
    if (reach[v] == rho) R.push_back(v);
  }
  if (Z.empty()) {
    // Every tine sits strictly above zero (so rho >= 1). Any conservative
    // extension meets both recurrences here; take the least maximum-reach one.
    st.empty_zero_slots_.push_back(static_cast<int>(F.string().size()));
    VertexId r = R.front();
    for (VertexId v : R) {
      if (pi_less(F, v, r)) r = v;
    }
    st.extend({r});
    return st;
  }
  if (Z.size() == 1) {
    // With rho = 0 an H slot needs two disjoint zero-reach tines, so the lone
    // zero-reach tine is extended twice.
    if (b == Symbol::MultiHonest && rho == 0) {
      st.doubled_slots_.push_back(static_cast<int>(F.string().size()));
      st.extend({Z.front(), Z.front()});
    } else {
      st.extend({Z.front()});
    }
    return st;
  }
  VertexId z1 = -1, r1 = -1;
  int best = INT_MAX;
  for (VertexId z : Z) {
    for (VertexId r : R) {
      if (r == z) continue;  // only reachable when rho = 0, where two tines are wanted
      const int split = F.label(intersect(F, r, z));
      const bool better = z1 < 0 || split < best ||
                          (split == best && (pi_less(F, z, z1) || (z == z1 && pi_less(F, r, r1))));
      if (better) {
        best = split;
        z1 = z;
        r1 = r;
      }
    }
  }
  if (b == Symbol::UniqueHonest || rho >= 1) {
    st.extend({z1});
  } else {
    st.extend({z1, r1});
  }
  return st;
}

Fork build_canonical_fork(const CharString& w) {
  AdversaryState st;
  for (Symbol b : w.symbols()) st = astar_step(std::move(st), b);
  return st.fork();
}

CanonicalCheck verify_canonical(const Fork& F, const CharString& w) {
  if (!(F.string() == w)) return {false, -1, "fork is for a different string"};
  if (const auto v = validate(F); !v.empty()) return {false, -1, v.front().axiom + ": " + v.front().message};
  if (!F.is_closed()) return {false, -1, "fork is not closed"};
  if (fork_rho(F) != rho_recursive(w)) return {false, -1, "reach differs from the recurrence"};
  for (std::size_t x = 0; x <= w.size(); ++x) {
    const int want = mu_recursive(w.prefix(x), w.substr(x + 1, w.size() - x));
    if (fork_mu(F, static_cast<int>(x)) != want) {
      return {false, static_cast<int>(x), "margin differs from the recurrence"};
    }
  }
  return {};
}

AdversaryState prefix_aware_step(AdversaryState st, Symbol b, int x_len) {
  const int before = static_cast<int>(st.string().size());
  st.absorb(b);
  if (b == Symbol::Adversarial) return st;
  const Fork& F = st.fork();
  const std::vector<int>& reach = st.reaches();
  const int rho = *std::max_element(reach.begin(), reach.end());

  std::vector<std::vector<VertexId>> moves;
  const bool in_y = before >= x_len;
  if (b == Symbol::MultiHonest && in_y) {
    // Pairs witnessing the current margin over y.
    int mu = INT_MIN;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < F.size(); ++a) {
      for (VertexId c = a; c < F.size(); ++c) {
        if (F.label(intersect(F, a, c)) > x_len) continue;
        const int m = std::min(reach[a], reach[c]);
        if (m > mu) pairs.clear();
        if (m >= mu) {
          mu = m;
          pairs.emplace_back(a, c);
        }
      }
    }
    if (mu >= 0) {
      for (auto [a, c] : pairs) moves.push_back({a, c});
    }
  }
  if (moves.empty()) {
    for (VertexId v = 0; v < F.size(); ++v) {
      if (reach[v] == 0) moves.push_back({v});
    }
  }
  if (moves.empty()) {
    for (VertexId v = 0; v < F.size(); ++v) {
      if (reach[v] == rho) moves.push_back({v});
    }
  }
  AdversaryState best;
  int best_mu = INT_MIN;
  for (const auto& m : moves) {
    AdversaryState next = st;
    next.extend(m);
    const int split = std::min(x_len, static_cast<int>(next.string().size()));
    const int mu = fork_mu(next.fork(), split);
    if (mu > best_mu) {
      best_mu = mu;
      best = std::move(next);
    }
  }
  return best;
}

Fork build_prefix_aware_fork(const CharString& w, int x_len) {
  if (x_len < 0 || x_len > static_cast<int>(w.size())) throw DomainError("split outside 0..|w|");
  AdversaryState st;
  for (Symbol b : w.symbols()) st = prefix_aware_step(std::move(st), b, x_len);
  return st.fork();
}

}  // namespace forklab
