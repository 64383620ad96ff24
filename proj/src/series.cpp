#include "forklab/series.hpp"

#include <algorithm>
#include <cmath>

#include "forklab/error.hpp"

namespace forklab {

PowerSeries::PowerSeries(std::vector<Coef> coeffs, bool exact) : c_(std::move(coeffs)), exact_(exact) {
  for (Coef v : c_) {
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("series coefficients must be finite and non-negative");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries(std::vector<Coef>(order + 1, 0), true); }

PowerSeries PowerSeries::monomial(Coef c, std::size_t power, std::size_t order) {
  std::vector<Coef> v(order + 1, 0);
  if (power <= order) v[power] = c;
  return PowerSeries(std::move(v), power <= order || c == 0);
}

Coef PowerSeries::partial_sum(std::size_t n) const {
  Coef s = 0;
  for (std::size_t i = 0; i < std::min(n, c_.size()); ++i) s += c_[i];
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Coef> v(order + 1, 0);
  bool tail_zero = exact_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i <= order) {
      v[i] = c_[i];
    } else if (c_[i] != 0) {
      tail_zero = false;
    }
  }
  // Growing the order past a known polynomial keeps exactness; otherwise the
  // new slots are unknown.
  if (order > this->order() && !exact_) tail_zero = false;
  PowerSeries out;
  out.c_ = std::move(v);
  out.exact_ = tail_zero;
  return out;
}

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }

// Highest nonzero index, or -1 for the zero series.
long degree(const PowerSeries& a) {
  for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i) {
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

}  // namespace

PowerSeries add(const PowerSeries& a, const PowerSeries& b) { return combine(a, 1, b, 1); }

PowerSeries scale(const PowerSeries& a, Coef c) { return combine(a, c, PowerSeries::zero(a.order()), 0); }

PowerSeries combine(const PowerSeries& a, Coef ca, const PowerSeries& b, Coef cb) {
  const std::size_t n = common_order(a, b);
  std::vector<Coef> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    v[i] = ca * a[i] + cb * b[i];
    if (v[i] < 0) throw DomainError("series combination has a negative coefficient");
  }
  return PowerSeries(std::move(v), a.exact() && b.exact());
}

PowerSeries shift(const PowerSeries& a, std::size_t j) {
  const std::size_t n = a.order();
  std::vector<Coef> v(n + 1, 0);
  bool exact = a.exact();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i + j <= n) {
      v[i + j] = a[i];
    } else if (a[i] != 0) {
      exact = false;
    }
  }
  return PowerSeries(std::move(v), exact);
}

namespace {

bool product_exact(const PowerSeries& a, const PowerSeries& b, std::size_t n) {
  if (!a.exact() || !b.exact()) return false;
  const long da = degree(a), db = degree(b);
  return da < 0 || db < 0 || static_cast<std::size_t>(da + db) <= n;
}

}  // namespace

PowerSeries multiply_serial(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Coef> v(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(v), product_exact(a, b, n));
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Coef> v(n + 1, 0);
  const Coef* pa = a.coeffs().data();
  const Coef* pb = b.coeffs().data();
  const long last = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long m = 0; m <= last; ++m) {
    Coef acc = 0;
    // Same accumulation order as the serial scatter: ascending i.
    for (long i = 0; i <= m; ++i) {
      if (pa[i] != 0) acc += pa[i] * pb[m - i];
    }
    v[static_cast<std::size_t>(m)] = acc;
  }
  return PowerSeries(std::move(v), product_exact(a, b, n));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw DomainError("composition needs an inner series with zero constant term");
  const std::size_t n = common_order(outer, inner);
  const PowerSeries in = inner.truncated(n);
  // Horner: ((o_N * g + o_{N-1}) * g + ...) + o_0.
  PowerSeries acc = PowerSeries::zero(n);
  for (std::size_t j = n + 1; j-- > 0;) {
    acc = multiply(acc, in);
    std::vector<Coef> v = acc.coeffs();
    v[0] += outer[j];
    acc = PowerSeries(std::move(v), acc.exact());
  }
  const bool exact = outer.exact() && inner.exact() && product_exact(outer, in, n) &&
                     (degree(outer) <= 1 || degree(in) <= 1 ||
                      static_cast<std::size_t>(degree(outer) * degree(in)) <= n);
  return PowerSeries(acc.coeffs(), exact);
}

PowerSeries divide_one_minus(const PowerSeries& num, const PowerSeries& F) {
  if (F[0] != 0) throw DomainError("1/(1 - F) needs F with zero constant term");
  const std::size_t n = common_order(num, F);
  std::vector<Coef> c(n + 1, 0);
  for (std::size_t m = 0; m <= n; ++m) {
    Coef acc = num[m];
    for (std::size_t j = 1; j <= m; ++j) acc += F[j] * c[m - j];
    c[m] = acc;
  }
  return PowerSeries(std::move(c), false);
}

bool dominates(const std::vector<Coef>& a, const std::vector<Coef>& b, Coef tol) {
  if (a.size() != b.size()) throw DomainError("dominance needs sequences of equal length");
  Coef sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb + tol) return false;
  }
  return true;
}

bool dominates(const PowerSeries& a, const PowerSeries& b, Coef tol) {
  return dominates(a.coeffs(), b.coeffs(), tol);
}

}  // namespace forklab
