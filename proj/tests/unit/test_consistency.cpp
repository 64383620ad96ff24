#include <doctest.h>

#include "forklab/consistency.hpp"
#include "forklab/enumerate.hpp"
#include "forklab/error.hpp"
#include "forklab/family.hpp"
#include "oracles.hpp"

using namespace forklab;

namespace {

CharString S(const char* s) { return CharString::parse(s); }

std::vector<int> flagged(const CatalanReport& r) { return r.slots(); }

// The same queries answered by walking every materialized open fork.
const EnumerationCaps kOpen{};

bool uvp_explicit(const CharString& w, int s) {
  for (std::size_t t = s; t <= w.size(); ++t) {
    for (const Fork& F : enumerate_forks(w.prefix(t), kOpen)) {
      if (!uvp_in_fork(F, s, s + 1)) return false;
    }
  }
  return true;
}

bool bottleneck_explicit(const CharString& w, int s) {
  for (std::size_t t = s; t <= w.size(); ++t) {
    for (const Fork& F : enumerate_forks(w.prefix(t), kOpen)) {
      if (!bottleneck_in_fork(F, s, s + 1)) return false;
    }
  }
  return true;
}

bool settled_explicit(const CharString& w, int s, int k) {
  for (std::size_t t = s + k; t <= w.size(); ++t) {
    for (const Fork& F : enumerate_forks(w.prefix(t), kOpen)) {
      if (diverges_prior_in_fork(F, s)) return false;
    }
  }
  return true;
}

bool cp_explicit(const CharString& w, int k) {
  for (const Fork& F : enumerate_forks(w, kOpen)) {
    if (slot_cp_broken_in_fork(F, k)) return true;
  }
  return false;
}

int divergence_explicit(const CharString& w) {
  int best = 0;
  for (const Fork& F : enumerate_forks(w, kOpen)) best = std::max(best, slot_divergence(F));
  return best;
}

bool balanced_explicit(const CharString& w, int k) {
  for (int m = k; m <= static_cast<int>(w.size()); ++m) {
    for (const Fork& F : enumerate_forks(w.prefix(m), kOpen)) {
      if (is_x_balanced(F, m - k)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("Catalan slots") {
  CHECK(flagged(catalan_slots(S("hh"))) == std::vector<int>{1, 2});
  CHECK(flagged(catalan_slots(S("hAhAhHAAH"))).empty());
  CHECK(flagged(catalan_slots(S("A"))).empty());
  const CatalanReport r = catalan_slots(S("hAh"));
  CHECK(r.left_catalan[1]);
  CHECK_FALSE(r.right_catalan[1]);
  CHECK_FALSE(r.left_catalan[3]);
}

TEST_CASE("Catalan flags match a direct scan of every interval") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      const CatalanReport r = catalan_slots(w);
      const std::vector<bool> expected = oracle::catalan_by_intervals(w);
      for (std::size_t s = 1; s <= n; ++s) CHECK(r.catalan[s] == expected[s]);
    }
  }
}

TEST_CASE("UVP and bottleneck oracles on small strings") {
  CHECK(has_uvp_oracle(S("hh"), 1));
  CHECK_FALSE(has_uvp_oracle(S("hA"), 1));
  CHECK_FALSE(has_uvp_oracle(S("H"), 1));
  CHECK(has_bottleneck_oracle(S("H"), 1));
  CHECK_FALSE(has_bottleneck_oracle(S("hA"), 1));
  CHECK(has_bottleneck_oracle(S("hh"), 2));
  CHECK_THROWS_AS(has_uvp_oracle(S("hA"), 2), DomainError);
}

TEST_CASE("UVP from margins") {
  CHECK(has_uvp_fast(S("hh"), 1));
  CHECK_FALSE(has_uvp_fast(S("hA"), 1));
  CHECK_FALSE(has_uvp_fast(S("hAA"), 1));
  CHECK_THROWS_AS(has_uvp_fast(S("H"), 1), DomainError);
}

TEST_CASE("settlement") {
  CHECK(is_settled_oracle(S("hhhh"), 1, 2));
  CHECK(is_settled_fast(S("hhhh"), 1, 2));
  CHECK_FALSE(is_settled_oracle(S("hAhAhA"), 1, 4));
  CHECK_FALSE(is_settled_fast(S("hAhAhA"), 1, 4));
  CHECK_FALSE(is_settled_oracle(S("hH"), 2, 0));
  CHECK_THROWS_AS(is_settled_fast(S("hh"), 2, 1), DomainError);
}

TEST_CASE("settlement: margins agree with enumeration up to length 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      for (int s = 1; s <= static_cast<int>(n); ++s) {
        for (int k = 0; s + k <= static_cast<int>(n); ++k) {
          INFO(w.str() << " s=" << s << " k=" << k);
          CHECK(is_settled_fast(w, s, k) == is_settled_oracle(w, s, k));
        }
      }
    }
  }
}

TEST_CASE("common prefix") {
  CHECK_FALSE(violates_k_slot_cp(S("hh"), 1));
  CHECK(violates_k_slot_cp(S("hAhAhA"), 3));
  CHECK_FALSE(violates_k_slot_cp(S("hhhhh"), 1));
  CHECK_FALSE(violates_k_slot_cp(S("hhhhh"), 3));
  CHECK(cp_implied_by_uvp(S("hhhh"), 1));
  CHECK_FALSE(cp_implied_by_uvp(S("hAhAhA"), 3));
}

TEST_CASE("UVP cover is sufficient for common prefix") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        if (cp_implied_by_uvp(w, k)) CHECK_FALSE(violates_k_slot_cp(w, k));
      }
    }
  }
}

TEST_CASE("two consecutive Catalan slots in bivalent strings") {
  CHECK(two_consecutive_catalan_uvp(S("HH"), 2));
  CHECK_FALSE(two_consecutive_catalan_uvp(S("HAH"), 3));
  CHECK_FALSE(two_consecutive_catalan_uvp(S("HHA"), 2));
}

TEST_CASE("bottleneck implies Catalan") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      const CatalanReport r = catalan_slots(w);
      for (std::size_t s = 1; s <= n; ++s) {
        if (is_honest(w.at(s)) && has_bottleneck_oracle(w, static_cast<int>(s))) CHECK(r.catalan[s]);
      }
    }
  }
}

TEST_CASE("left-Catalan slot pins every viable tine") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      const CatalanReport r = catalan_slots(w);
      for (int s = 1; s <= static_cast<int>(n); ++s) {
        if (!r.left_catalan[s]) continue;
        for (const Fork& F : enumerate_forks(w, kOpen)) {
          for (VertexId t = 0; t < F.size(); ++t) {
            if (!viable_at(F, t, s + 1)) continue;
            const VertexId u = truncate_to(F, t, s);
            CHECK(F.label(u) == s);
            CHECK(F.is_honest_vertex(u));
          }
        }
      }
    }
  }
}

TEST_CASE("a UVP slot within k after s settles s") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      for (int s = 1; s <= static_cast<int>(n); ++s) {
        for (int k = 0; s + k <= static_cast<int>(n); ++k) {
          bool anchor = false;
          for (int t = s; t <= s + k && !anchor; ++t) anchor = w.at(t) == Symbol::UniqueHonest && has_uvp_fast(w, t);
          if (anchor) CHECK(is_settled_oracle(w, s, k));
        }
      }
    }
  }
}

TEST_CASE("two consecutive Catalan slots give the UVP under consistent tie-breaking") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const CharString& w : all_strings(n, {Symbol::MultiHonest, Symbol::Adversarial})) {
      for (int s = 2; s <= static_cast<int>(n); ++s) {
        if (!two_consecutive_catalan_uvp(w, s)) continue;
        INFO(w.str() << " s=" << s);
        CHECK(has_uvp_tie_broken_oracle(w, s - 1, s + 1));
      }
    }
  }
}

TEST_CASE("a block-count violation is a slot violation") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      for (const Fork& F : enumerate_forks(w, kOpen)) {
        for (int k = 0; k <= static_cast<int>(n); ++k) {
          if (block_cp_broken_in_fork(F, k)) CHECK(slot_cp_broken_in_fork(F, k));
        }
      }
    }
  }
}

TEST_CASE("virtual fork family matches materialized open forks") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const CharString& w : oracle::strings(n)) {
      INFO(w.str());
      for (int s = 1; s <= static_cast<int>(n); ++s) {
        if (w.at(s) == Symbol::UniqueHonest) CHECK(has_uvp_oracle(w, s) == uvp_explicit(w, s));
        if (is_honest(w.at(s))) CHECK(has_bottleneck_oracle(w, s) == bottleneck_explicit(w, s));
        for (int k = 0; s + k <= static_cast<int>(n); ++k) {
          CHECK(is_settled_oracle(w, s, k) == settled_explicit(w, s, k));
        }
      }
      for (int k = 0; k <= static_cast<int>(n); ++k) {
        CHECK(violates_k_slot_cp(w, k) == cp_explicit(w, k));
        CHECK(has_balanced_decomposition(w, k) == balanced_explicit(w, k));
      }
      CHECK(max_slot_divergence_oracle(w) == divergence_explicit(w));
    }
  }
}
