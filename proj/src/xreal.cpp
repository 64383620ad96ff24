#include "forklab/xreal.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace forklab {

std::string format_scientific(long double x, int digits) {
  if (digits < 1) digits = 1;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*LE", digits - 1, x);
  return buf;
}

std::string format_scientific(const XReal& x, int digits) {
  if (x.is_zero()) return format_scientific(0.0L, digits);
  const long double v = x.to_long_double();
  if (v != 0.0L && std::isfinite(v)) return format_scientific(v, digits);
  // Outside long double range: split the decimal logarithm by hand.
  if (digits < 1) digits = 1;
  const double lg = x.log10();
  long long e10 = static_cast<long long>(std::floor(lg));
  const double scale = std::pow(10.0, digits - 1);
  double m = std::round(std::pow(10.0, lg - static_cast<double>(e10)) * scale) / scale;
  if (m >= 10.0) {
    m /= 10.0;
    ++e10;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fE%c%02lld", digits - 1, m, e10 < 0 ? '-' : '+', e10 < 0 ? -e10 : e10);
  return buf;
}

}  // namespace forklab
