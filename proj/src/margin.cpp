#include "forklab/margin.hpp"

#include <algorithm>
#include <climits>

namespace forklab {

namespace {

// Number of adversarial slots strictly after each label.
std::vector<int> reserves(const CharString& w) {
  std::vector<int> after(w.size() + 1, 0);
  for (std::size_t i = w.size(); i >= 1; --i) {
    after[i - 1] = after[i] + (w.at(i) == Symbol::Adversarial);
  }
  return after;
}

void require_closed(const Fork& F) {
  if (!F.is_closed()) throw DomainError("reach is only defined for closed forks");
}

std::vector<int> all_reaches(const Fork& F) {
  const std::vector<int> after = reserves(F.string());
  std::vector<int> r(F.size());
  for (VertexId v = 0; v < F.size(); ++v) r[v] = after[F.label(v)] - (F.height() - F.depth(v));
  return r;
}

// fork_mu for all splits at once.
std::vector<int> all_mus(const Fork& F) {
  const int n = static_cast<int>(F.string().size());
  const std::vector<int> r = all_reaches(F);
  std::vector<int> best(n + 1, INT_MIN);
  for (VertexId a = 0; a < F.size(); ++a) {
    for (VertexId b = a; b < F.size(); ++b) {
      const int split = F.label(intersect(F, a, b));
      const int m = std::min(r[a], r[b]);
      best[split] = std::max(best[split], m);
    }
  }
  // A pair disjoint over the suffix after split s is disjoint for every longer x.
  for (int x = 1; x <= n; ++x) best[x] = std::max(best[x], best[x - 1]);
  return best;
}

}  // namespace

TineMetrics tine_metrics(const Fork& F, VertexId t) {
  require_closed(F);
  const int gap = F.height() - F.depth(t);
  const int reserve = reserves(F.string())[F.label(t)];
  return {gap, reserve, reserve - gap};
}

int fork_rho(const Fork& F) {
  require_closed(F);
  const std::vector<int> r = all_reaches(F);
  return *std::max_element(r.begin(), r.end());
}

int fork_mu(const Fork& F, int x_len) {
  require_closed(F);
  if (x_len < 0 || x_len > static_cast<int>(F.string().size())) {
    throw DomainError("split outside 0..|w|");
  }
  return all_mus(F)[x_len];
}

MarginState margin_step(MarginState st, Symbol b) {
  switch (b) {
    case Symbol::Adversarial: return {st.rho + 1, st.mu + 1};
    case Symbol::UniqueHonest:
    case Symbol::MultiHonest: {
      const int rho = st.rho == 0 ? 0 : st.rho - 1;
      int mu = st.mu - 1;
      if (st.rho > st.mu && st.mu == 0) mu = 0;
      if (st.rho == 0 && st.mu == 0 && b == Symbol::MultiHonest) mu = 0;
      return {rho, mu};
    }
    case Symbol::Empty: break;
  }
  throw DomainError("margins are undefined on empty slots; reduce the string first");
}

int rho_recursive(const CharString& w) {
  MarginState st;
  for (Symbol b : w.symbols()) st = margin_step({st.rho, st.rho}, b);
  return st.rho;
}

MarginState margin_fold(const CharString& x, const CharString& y) {
  const int r = rho_recursive(x);
  MarginState st{r, r};
  for (Symbol b : y.symbols()) {
    st = margin_step(st, b);
    if (st.mu > st.rho) throw DomainError("internal: margin exceeded reach");
  }
  return st;
}

int mu_recursive(const CharString& x, const CharString& y) { return margin_fold(x, y).mu; }

int rho_bruteforce(const CharString& w, const EnumerationCaps& caps) {
  EnumerationCaps c = caps;
  c.closed_only = true;
  int best = INT_MIN;
  for (const Fork& F : default_fork_cache().get(w, c)) best = std::max(best, fork_rho(F));
  return best;
}

std::vector<int> mu_bruteforce_all(const CharString& w, const EnumerationCaps& caps) {
  EnumerationCaps c = caps;
  c.closed_only = true;
  std::vector<int> best(w.size() + 1, INT_MIN);
  for (const Fork& F : default_fork_cache().get(w, c)) {
    const std::vector<int> m = all_mus(F);
    for (std::size_t i = 0; i < m.size(); ++i) best[i] = std::max(best[i], m[i]);
  }
  return best;
}

int mu_bruteforce(const CharString& x, const CharString& y, const EnumerationCaps& caps) {
  return mu_bruteforce_all(x + y, caps)[x.size()];
}

std::vector<double> rho_distribution(std::size_t m, double eps, double p_h) {
  BernoulliParams{eps, p_h}.check();
  const double up = (1.0 - eps) / 2.0;
  std::vector<double> dist(m + 1, 0.0);
  dist[0] = 1.0;
  std::vector<double> next(m + 1);
  for (std::size_t t = 0; t < m; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t r = 0; r <= t; ++r) {
      next[r + 1] += up * dist[r];
      next[r == 0 ? 0 : r - 1] += (1.0 - up) * dist[r];
    }
    dist.swap(next);
  }
  return dist;
}

}  // namespace forklab
