#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forklab {

enum class Symbol : std::uint8_t { UniqueHonest, MultiHonest, Adversarial, Empty };

enum class StringKind { Trivalent, Bivalent, SemiSync };

char to_char(Symbol s);
bool is_honest(Symbol s);

// A characteristic string. Slots are 1-based: at(1) is the first symbol.
class CharString {
 public:
  CharString() = default;
  explicit CharString(std::vector<Symbol> symbols);

  static CharString parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  StringKind kind() const { return kind_; }
  Symbol at(std::size_t slot) const;
  const std::vector<Symbol>& symbols() const { return symbols_; }

  CharString prefix(std::size_t len) const;
  CharString substr(std::size_t first_slot, std::size_t len) const;
  CharString operator+(const CharString& other) const;
  CharString with(Symbol s) const;

  std::string str() const;
  bool operator==(const CharString& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  StringKind kind_ = StringKind::Trivalent;
};

struct Interval {
  std::size_t first;
  std::size_t last;
};

std::size_t count(const CharString& w, Interval iv, Symbol sigma);
bool is_h_heavy(const CharString& w, Interval iv);
bool is_A_heavy(const CharString& w, Interval iv);

// Componentwise order with h < H < A.
bool leq(const CharString& a, const CharString& b);

struct BernoulliParams {
  double epsilon;
  double p_h;

  double p_A() const { return (1.0 - epsilon) / 2.0; }
  double p_H() const { return 1.0 - p_A() - p_h; }
  void check() const;
};

// All sampling uses std::mt19937_64 seeded directly with `seed`.
CharString sample(std::size_t T, const BernoulliParams& params, std::uint64_t seed);

struct SemiSyncParams {
  double f;
  double p_A;
  double p_h;

  double p_empty() const { return 1.0 - f; }
  double p_H() const { return f - p_A - p_h; }
  void check() const;
};

CharString sample_semisync(std::size_t T, const SemiSyncParams& params, std::uint64_t seed);

// Every string of length n over the given alphabet, in lexicographic order of the alphabet.
std::vector<CharString> all_strings(std::size_t n, const std::vector<Symbol>& alphabet);

}  // namespace forklab
