#pragma once

#include <cstddef>
#include <vector>

namespace forklab {

// Coefficients live in long double for the same reason as the DP cells: deep
// coefficients of the walk series reach far below the double range.
using Coef = long double;

// Truncated power series with non-negative coefficients at indices 0..N.
class PowerSeries {
 public:
  PowerSeries() = default;
  // Throws DomainError on a negative or non-finite coefficient.
  explicit PowerSeries(std::vector<Coef> coeffs, bool exact = false);

  static PowerSeries zero(std::size_t order);
  // c * Z^power, truncated at `order`.
  static PowerSeries monomial(Coef c, std::size_t power, std::size_t order);

  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const { return c_.size(); }
  Coef operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coef(0); }
  const std::vector<Coef>& coeffs() const { return c_; }
  // True when every coefficient past the order is known to be zero.
  bool exact() const { return exact_; }

  // Sum of coefficients with index < n.
  Coef partial_sum(std::size_t n) const;
  PowerSeries truncated(std::size_t order) const;

 private:
  std::vector<Coef> c_;
  bool exact_ = false;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, Coef c);
// ca*a + cb*b; rejected when a coefficient of the result is negative.
PowerSeries combine(const PowerSeries& a, Coef ca, const PowerSeries& b, Coef cb);
// Z^j * a.
PowerSeries shift(const PowerSeries& a, std::size_t j);

// Truncated product at min(order(a), order(b)). multiply() runs the OpenMP
// kernel: one output coefficient per iteration, summed in index order, so it
// is bitwise identical to multiply_serial().
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);
PowerSeries multiply_serial(const PowerSeries& a, const PowerSeries& b);

// outer(inner(Z)); inner must have a zero constant term. Horner form, cubic
// in the order, so meant for moderate orders.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// num / (1 - F) for F with zero constant term, by c_n = num_n + sum f_j c_{n-j}.
PowerSeries divide_one_minus(const PowerSeries& num, const PowerSeries& F);

// True iff every prefix sum of a is <= the matching prefix sum of b plus tol,
// i.e. the stopping time with law a is stochastically no earlier.
bool dominates(const std::vector<Coef>& a, const std::vector<Coef>& b, Coef tol = 0);
bool dominates(const PowerSeries& a, const PowerSeries& b, Coef tol = 0);

}  // namespace forklab
