#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace forklab {

// Non-negative real with a double mantissa and a 64-bit binary exponent:
// value = mantissa * 2^exponent, mantissa in [0.5, 1) or exactly 0. Range is
// effectively unbounded, so deep probability tails never underflow.
class XReal {
 public:
  XReal() = default;
  XReal(double v) : m_(v) { normalize(); }  // NOLINT: implicit by design

  static XReal from_parts(double mantissa, std::int64_t exponent) {
    XReal x;
    x.m_ = mantissa;
    x.e_ = exponent;
    x.normalize();
    return x;
  }

  double mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }
  bool is_zero() const { return m_ == 0.0; }

  XReal& operator+=(const XReal& o) {
    if (o.m_ == 0.0) return *this;
    if (m_ == 0.0) return *this = o;
    const std::int64_t d = e_ - o.e_;
    // Past 60 binary orders the smaller term is below double resolution.
    if (d > 60) return *this;
    if (d < -60) return *this = o;
    if (d >= 0) {
      m_ += std::ldexp(o.m_, static_cast<int>(-d));
    } else {
      m_ = std::ldexp(m_, static_cast<int>(d)) + o.m_;
      e_ = o.e_;
    }
    normalize();
    return *this;
  }

  XReal& operator*=(const XReal& o) {
    m_ *= o.m_;
    e_ += o.e_;
    normalize();
    return *this;
  }

  friend XReal operator+(XReal a, const XReal& b) { return a += b; }
  friend XReal operator*(XReal a, const XReal& b) { return a *= b; }

  // a - b for a >= b; clamps tiny negative rounding residue to zero.
  friend XReal operator-(const XReal& a, const XReal& b) {
    XReal neg = b;
    neg.m_ = -neg.m_;
    XReal r = a;
    r += neg;
    if (r.m_ < 0.0) r = XReal();
    return r;
  }

  friend bool operator<(const XReal& a, const XReal& b) {
    if (a.m_ == 0.0 || b.m_ == 0.0) return a.m_ < b.m_;
    return a.e_ != b.e_ ? a.e_ < b.e_ : a.m_ < b.m_;
  }
  friend bool operator==(const XReal& a, const XReal& b) { return a.m_ == b.m_ && a.e_ == b.e_; }

  double to_double() const {
    if (m_ == 0.0) return 0.0;
    if (e_ > std::numeric_limits<double>::max_exponent) return std::numeric_limits<double>::infinity();
    if (e_ < std::numeric_limits<double>::min_exponent - 60) return 0.0;
    return std::ldexp(m_, static_cast<int>(e_));
  }
  long double to_long_double() const {
    if (m_ == 0.0) return 0.0L;
    if (e_ < std::numeric_limits<long double>::min_exponent - 70) return 0.0L;
    if (e_ > std::numeric_limits<long double>::max_exponent) return std::numeric_limits<long double>::infinity();
    return std::ldexp(static_cast<long double>(m_), static_cast<int>(e_));
  }

  // log10 of the value; -inf for zero.
  double log10() const {
    if (m_ == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log10(m_) + static_cast<double>(e_) * 0.30102999566398119521;
  }

 private:
  void normalize() {
    if (m_ == 0.0 || !std::isfinite(m_)) {
      if (m_ == 0.0) e_ = 0;
      return;
    }
    int ex = 0;
    m_ = std::frexp(m_, &ex);
    e_ += ex;
  }

  double m_ = 0.0;
  std::int64_t e_ = 0;
};

// Decimal mantissa/exponent rendering without converting to double, e.g.
// "1.02E-264". `digits` counts significant digits.
std::string format_scientific(const XReal& x, int digits);
std::string format_scientific(long double x, int digits);

inline XReal to_xreal(long double v) {
  if (v == 0.0L) return {};
  int ex = 0;
  const long double m = std::frexp(v, &ex);
  return XReal::from_parts(static_cast<double>(m), ex);
}

}  // namespace forklab
