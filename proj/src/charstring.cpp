#include "forklab/charstring.hpp"

#include <random>

#include "forklab/error.hpp"
#include "forklab/rng.hpp"

namespace forklab {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::UniqueHonest: return 'h';
    case Symbol::MultiHonest: return 'H';
    case Symbol::Adversarial: return 'A';
    case Symbol::Empty: return '_';
  }
  return '?';
}

bool is_honest(Symbol s) { return s == Symbol::UniqueHonest || s == Symbol::MultiHonest; }

namespace {

StringKind infer_kind(const std::vector<Symbol>& symbols) {
  bool has_empty = false;
  bool has_h = false;
  for (Symbol s : symbols) {
    has_empty |= s == Symbol::Empty;
    has_h |= s == Symbol::UniqueHonest;
  }
  if (has_empty) return StringKind::SemiSync;
  if (!has_h && !symbols.empty()) return StringKind::Bivalent;
  return StringKind::Trivalent;
}

int rank(Symbol s) {
  switch (s) {
    case Symbol::UniqueHonest: return 0;
    case Symbol::MultiHonest: return 1;
    case Symbol::Adversarial: return 2;
    case Symbol::Empty: break;
  }
  throw DomainError("the empty symbol is not ordered");
}

}  // namespace

CharString::CharString(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)), kind_(infer_kind(symbols_)) {}

CharString CharString::parse(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'h': out.push_back(Symbol::UniqueHonest); break;
      case 'H': out.push_back(Symbol::MultiHonest); break;
      case 'A': out.push_back(Symbol::Adversarial); break;
      case '_': out.push_back(Symbol::Empty); break;
      default:
        throw ParseError(std::string("unknown symbol '") + text[i] + "'", i + 1);
    }
  }
  return CharString(std::move(out));
}

Symbol CharString::at(std::size_t slot) const {
  if (slot < 1 || slot > symbols_.size()) {
    throw DomainError("slot " + std::to_string(slot) + " out of range 1.." +
                      std::to_string(symbols_.size()));
  }
  return symbols_[slot - 1];
}

CharString CharString::prefix(std::size_t len) const {
  if (len > symbols_.size()) throw DomainError("prefix longer than string");
  return CharString(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len));
}

CharString CharString::substr(std::size_t first_slot, std::size_t len) const {
  if (first_slot < 1 || first_slot - 1 + len > symbols_.size()) {
    throw DomainError("substring out of range");
  }
  auto b = symbols_.begin() + (first_slot - 1);
  return CharString(std::vector<Symbol>(b, b + len));
}

CharString CharString::operator+(const CharString& other) const {
  std::vector<Symbol> out = symbols_;
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return CharString(std::move(out));
}

CharString CharString::with(Symbol s) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(s);
  return CharString(std::move(out));
}

std::string CharString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(to_char(s));
  return out;
}

static void check_interval(const CharString& w, Interval iv) {
  if (iv.first < 1 || iv.first > iv.last || iv.last > w.size()) {
    throw DomainError("interval [" + std::to_string(iv.first) + "," + std::to_string(iv.last) +
                      "] out of range for length " + std::to_string(w.size()));
  }
}

std::size_t count(const CharString& w, Interval iv, Symbol sigma) {
  check_interval(w, iv);
  std::size_t n = 0;
  for (std::size_t i = iv.first; i <= iv.last; ++i) n += w.at(i) == sigma;
  return n;
}

bool is_h_heavy(const CharString& w, Interval iv) {
  check_interval(w, iv);
  long balance = 0;
  for (std::size_t i = iv.first; i <= iv.last; ++i) {
    Symbol s = w.at(i);
    if (s == Symbol::Empty) throw DomainError("heaviness is undefined on empty slots");
    balance += is_honest(s) ? 1 : -1;
  }
  return balance > 0;
}

bool is_A_heavy(const CharString& w, Interval iv) { return !is_h_heavy(w, iv); }

bool leq(const CharString& a, const CharString& b) {
  if (a.size() != b.size()) throw DomainError("leq needs strings of equal length");
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (rank(a.at(i)) > rank(b.at(i))) return false;
  }
  return true;
}

void BernoulliParams::check() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0,1]");
  if (p_h < 0.0 || p_h > (1.0 + epsilon) / 2.0 + 1e-15) {
    throw DomainError("p_h must lie in [0,(1+eps)/2]");
  }
}

CharString sample(std::size_t T, const BernoulliParams& params, std::uint64_t seed) {
  params.check();
  Rng rng(seed);
  const double pa = params.p_A();
  const double ph = params.p_h;
  std::vector<Symbol> out(T);
  for (auto& s : out) {
    double u = uniform01(rng);
    s = u < pa ? Symbol::Adversarial : (u < pa + ph ? Symbol::UniqueHonest : Symbol::MultiHonest);
  }
  return CharString(std::move(out));
}

void SemiSyncParams::check() const {
  if (!(f > 0.0 && f <= 1.0)) throw DomainError("activity rate f must lie in (0,1]");
  if (p_A < 0.0 || p_h < 0.0 || p_A + p_h > f + 1e-15) {
    throw DomainError("need p_A, p_h >= 0 and p_A + p_h <= f");
  }
}

CharString sample_semisync(std::size_t T, const SemiSyncParams& params, std::uint64_t seed) {
  params.check();
  Rng rng(seed);
  const double pe = params.p_empty();
  std::vector<Symbol> out(T);
  for (auto& s : out) {
    double u = uniform01(rng);
    if (u < pe) s = Symbol::Empty;
    else if (u < pe + params.p_A) s = Symbol::Adversarial;
    else if (u < pe + params.p_A + params.p_h) s = Symbol::UniqueHonest;
    else s = Symbol::MultiHonest;
  }
  return CharString(std::move(out));
}

std::vector<CharString> all_strings(std::size_t n, const std::vector<Symbol>& alphabet) {
  std::vector<CharString> out;
  std::vector<std::size_t> digits(n, 0);
  const std::size_t b = alphabet.size();
  while (true) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = alphabet[digits[i]];
    out.emplace_back(std::move(s));
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == b) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace forklab
