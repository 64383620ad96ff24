#include <doctest.h>

#include <cmath>

#include "forklab/charstring.hpp"
#include "forklab/error.hpp"

using namespace forklab;

TEST_CASE("parse recognizes the three string kinds") {
  const CharString a = CharString::parse("hAh");
  CHECK(a.kind() == StringKind::Trivalent);
  CHECK(a.size() == 3);
  CHECK(a.at(1) == Symbol::UniqueHonest);
  CHECK(a.at(2) == Symbol::Adversarial);
  CHECK(CharString::parse("HA").kind() == StringKind::Bivalent);
  const CharString s = CharString::parse("h_A");
  CHECK(s.kind() == StringKind::SemiSync);
  CHECK(s.at(2) == Symbol::Empty);
  CHECK(s.str() == "h_A");
  CHECK(CharString::parse("").empty());
}

TEST_CASE("parse rejects unknown symbols and out-of-range slots") {
  CHECK_THROWS_AS(CharString::parse("hxA"), ParseError);
  const CharString w = CharString::parse("hA");
  CHECK_THROWS_AS(w.at(0), DomainError);
  CHECK_THROWS_AS(w.at(3), DomainError);
}

TEST_CASE("symbol counts over intervals") {
  const CharString w = CharString::parse("hAhAhHAAH");
  CHECK(count(w, {1, 9}, Symbol::Adversarial) == 4);
  CHECK(count(w, {5, 6}, Symbol::MultiHonest) == 1);
  CHECK(count(CharString::parse("hh"), {1, 2}, Symbol::Adversarial) == 0);
}

TEST_CASE("heaviness: ties go to the adversary") {
  CHECK_FALSE(is_h_heavy(CharString::parse("hA"), {1, 2}));
  CHECK(is_A_heavy(CharString::parse("hA"), {1, 2}));
  CHECK(is_h_heavy(CharString::parse("hh"), {1, 2}));
  CHECK_FALSE(is_h_heavy(CharString::parse("hAhAhHAAH"), {4, 5}));
}

TEST_CASE("componentwise order h < H < A") {
  CHECK(leq(CharString::parse("hH"), CharString::parse("HA")));
  CHECK_FALSE(leq(CharString::parse("A"), CharString::parse("h")));
  CHECK(leq(CharString::parse("hAh"), CharString::parse("hAh")));
}

TEST_CASE("Bernoulli sampling") {
  const BernoulliParams params{0.2, 0.6};
  CHECK(sample(0, params, 7).empty());
  CHECK(sample(5, params, 42) == sample(5, params, 42));

  const std::size_t T = 100000;
  const CharString w = sample(T, params, 3);
  const double freq = static_cast<double>(count(w, {1, T}, Symbol::Adversarial)) / T;
  const double sigma = std::sqrt(0.4 * 0.6 / T);
  CHECK(std::abs(freq - 0.4) <= 3 * sigma);
}

TEST_CASE("semi-synchronous sampling") {
  const CharString a = sample_semisync(4, {1.0, 0.3, 0.7}, 11);
  CHECK(count(a, {1, 4}, Symbol::Empty) == 0);
  CHECK(sample_semisync(0, {0.5, 0.1, 0.2}, 1).empty());

  const std::size_t T = 100000;
  const CharString w = sample_semisync(T, {0.5, 0.1, 0.2}, 5);
  const double freq = static_cast<double>(count(w, {1, T}, Symbol::Empty)) / T;
  CHECK(std::abs(freq - 0.5) <= 3 * std::sqrt(0.25 / T));
}

TEST_CASE("invalid sampling parameters are rejected") {
  CHECK_THROWS_AS(sample(3, {1.5, 0.1}, 1), DomainError);
  CHECK_THROWS_AS(sample(3, {0.2, 0.9}, 1), DomainError);
  CHECK_THROWS_AS(sample_semisync(3, {0.5, 0.4, 0.4}, 1), DomainError);
}

TEST_CASE("all_strings enumerates in alphabet order") {
  const auto v = all_strings(2, {Symbol::UniqueHonest, Symbol::Adversarial});
  REQUIRE(v.size() == 4);
  CHECK(v[0].str() == "hh");
  CHECK(v[1].str() == "hA");
  CHECK(v[3].str() == "AA");
}
