#include "forklab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "forklab/error.hpp"
#include "forklab/margin.hpp"
#include "forklab/rng.hpp"

namespace forklab {

namespace {

// Runs `one(rng, remainder)` per sample; it returns whether the event held
// and may add to `remainder`. Chunk partials are merged in chunk order.
template <class One>
Estimate run_chunks(const McConfig& cfg, One&& one) {
  if (cfg.samples < 1) throw DomainError("need at least one sample");
  const std::uint64_t chunks = (cfg.samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  std::vector<double> rem(chunks, 0.0);
  const long n_chunks = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < n_chunks; ++c) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(c)));
    const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t count = std::min<std::uint64_t>(kChunk, cfg.samples - first);
    std::uint64_t h = 0;
    double r = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) h += one(rng, r) ? 1 : 0;
    hits[c] = h;
    rem[c] = r;
  }
  Estimate e;
  e.samples = cfg.samples;
  e.seed = cfg.seed;
  double r = 0.0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    e.hits += hits[c];
    r += rem[c];
  }
  e.value = static_cast<double>(e.hits) / static_cast<double>(e.samples);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(e.samples));
  e.horizon_error = r / static_cast<double>(e.samples);
  return e;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("eps must lie in (0, 1]");
}

int default_warmup(double eps) { return static_cast<int>(std::ceil(10.0 / eps)); }

// Walk S over sampled symbols (A up, honest down) with its running minimum
// before each slot and maximum from each slot on.
struct Walk {
  std::vector<Symbol> sym;  // 1-based
  std::vector<int> S, prefix_min, suffix_max;

  void resize(int L) {
    sym.assign(L + 1, Symbol::Empty);
    S.assign(L + 1, 0);
    prefix_min.assign(L + 1, 0);
    suffix_max.assign(L + 1, 0);
  }
  void finish() {
    const int L = static_cast<int>(S.size()) - 1;
    for (int i = 1; i <= L; ++i) S[i] = S[i - 1] + (sym[i] == Symbol::Adversarial ? 1 : -1);
    prefix_min[0] = S[0];
    for (int i = 1; i <= L; ++i) prefix_min[i] = std::min(prefix_min[i - 1], S[i]);
    suffix_max[L] = S[L];
    for (int i = L - 1; i >= 0; --i) suffix_max[i] = std::max(suffix_max[i + 1], S[i]);
  }
  // Catalan in the sampled string: a strict new low that is never climbed above.
  bool catalan(int i) const {
    return sym[i] != Symbol::Adversarial && S[i] < prefix_min[i - 1] && suffix_max[i] <= S[i];
  }
};

}  // namespace

Estimate estimate_no_unique_catalan(int k, double eps, double q_h, const McConfig& cfg, int warmup, int tail) {
  check_eps(eps);
  if (k < 0) throw DomainError("k must be non-negative");
  const double p = (1.0 - eps) / 2.0, q = (1.0 + eps) / 2.0;
  if (!(q_h >= 0.0 && q_h <= q + 1e-15)) throw DomainError("q_h must lie in [0, q]");
  if (warmup < 0) warmup = default_warmup(eps);
  if (tail < 0) tail = 10 * k;
  const int L = warmup + k + tail;
  return run_chunks(cfg, [&](Rng& rng, double& rem) {
    thread_local Walk W;
    W.resize(L);
    for (int i = 1; i <= L; ++i) {
      const double u = uniform01(rng);
      W.sym[i] = u < p ? Symbol::Adversarial : u < p + q_h ? Symbol::UniqueHonest : Symbol::MultiHonest;
    }
    W.finish();
    int top = std::numeric_limits<int>::min();
    for (int i = warmup + 1; i <= warmup + k; ++i) {
      if (W.sym[i] == Symbol::UniqueHonest && W.catalan(i)) top = std::max(top, W.S[i]);
    }
    if (top == std::numeric_limits<int>::min()) return true;
    // The unseen future revokes every candidate only by climbing to top + 1.
    if (p > 0.0) rem += std::pow(p / q, top + 1 - W.S[L]);
    return false;
  });
}

Estimate estimate_no_two_catalan(int k, double eps, const McConfig& cfg, int warmup, int tail) {
  check_eps(eps);
  if (k < 0) throw DomainError("k must be non-negative");
  const double p = (1.0 - eps) / 2.0, q = (1.0 + eps) / 2.0;
  if (warmup < 0) warmup = default_warmup(eps);
  if (tail < 0) tail = 10 * k;
  const int L = warmup + k + tail;
  return run_chunks(cfg, [&](Rng& rng, double& rem) {
    thread_local Walk W;
    W.resize(L);
    for (int i = 1; i <= L; ++i) W.sym[i] = uniform01(rng) < p ? Symbol::Adversarial : Symbol::MultiHonest;
    W.finish();
    int top = std::numeric_limits<int>::min();
    for (int c = warmup + 1; c + 1 <= warmup + k; ++c) {
      if (W.catalan(c) && W.catalan(c + 1)) top = std::max(top, W.S[c]);
    }
    if (top == std::numeric_limits<int>::min()) return true;
    // A pair (c, c+1) dies once the walk climbs back to S_c.
    if (p > 0.0) rem += std::pow(p / q, top - W.S[L]);
    return false;
  });
}

Estimate estimate_settlement_violation(int k, double alpha, double p_h, const McConfig& cfg) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (!(alpha >= 0.0 && alpha < 0.5)) throw DomainError("stationary reach needs 0 <= alpha < 1/2");
  if (!(p_h >= 0.0 && alpha + p_h <= 1.0 + 1e-15)) throw DomainError("symbol probabilities must form a distribution");
  const double beta = alpha / (1.0 - alpha);
  const double log_beta = beta > 0.0 ? std::log(beta) : 0.0;
  return run_chunks(cfg, [&](Rng& rng, double&) {
    int r = 0;
    // Inverse transform for Pr[r] = (1 - beta) beta^r.
    if (beta > 0.0) r = static_cast<int>(std::floor(std::log(1.0 - uniform01(rng)) / log_beta));
    MarginState st{r, r};
    for (int i = 0; i < k; ++i) {
      const double u = uniform01(rng);
      const Symbol b = u < alpha ? Symbol::Adversarial : u < alpha + p_h ? Symbol::UniqueHonest : Symbol::MultiHonest;
      st = margin_step(st, b);
    }
    return st.mu >= 0;
  });
}

Estimate estimate_delta_walk(int delta, int k, double eps, const McConfig& cfg, int extra) {
  check_eps(eps);
  if (k < 1) throw DomainError("k must be at least 1");
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (extra < 0) extra = 10 * k;
  const double p = (1.0 - eps) / 2.0, q = (1.0 + eps) / 2.0;
  return run_chunks(cfg, [&](Rng& rng, double& rem) {
    int S = 0;
    for (int t = 1; t <= k + extra; ++t) {
      S += uniform01(rng) < p ? 1 : -1;
      if (t >= k && S >= -delta) return true;
    }
    // Climbing from S back to -delta later happens with probability (p/q)^gap.
    if (p > 0.0) rem += std::pow(p / q, -delta - S);
    return false;
  });
}

bool ReductionFrequencies::within(double sigmas) const {
  return std::abs(z_h) <= sigmas && std::abs(z_H) <= sigmas && std::abs(z_A) <= sigmas;
}

ReductionFrequencies reduction_frequencies(std::size_t T, double f, int delta, double p_A, double p_h,
                                           std::uint64_t seed, WindowRule rule) {
  const SemiSyncParams params{f, p_A, p_h};
  params.check();
  const CharString w = sample_semisync(T, params, seed);
  const Reduction red = reduce(w, delta, rule);
  ReductionFrequencies out;
  out.expected = reduced_probs(f, delta, p_A, p_h);
  const std::size_t n = red.output.size();
  const std::size_t keep = n > static_cast<std::size_t>(delta) ? n - delta : 0;
  for (std::size_t i = 1; i <= keep; ++i) {
    switch (red.output.at(i)) {
      case Symbol::UniqueHonest: ++out.h; break;
      case Symbol::MultiHonest: ++out.H; break;
      default: ++out.A; break;
    }
  }
  out.total = keep;
  auto z = [&](std::uint64_t count, double prob) {
    if (out.total == 0) return 0.0;
    const double N = static_cast<double>(out.total);
    const double sd = std::sqrt(prob * (1.0 - prob) / N);
    const double diff = static_cast<double>(count) / N - prob;
    if (sd == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / sd;
  };
  out.z_h = z(out.h, out.expected.h);
  out.z_H = z(out.H, out.expected.H);
  out.z_A = z(out.A, out.expected.A);
  return out;
}

}  // namespace forklab
