#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lring/poly.hpp"

namespace lring {

// Truncated Laurent series in one formal variable over Polynomial
// coefficients. Exponents in [lo, prec) are stored and exact; exponents
// below lo are exactly zero; exponents at or above prec are unknown
// (truncated away). Reading an unknown coefficient is an error — truncation
// is always explicit. prec saturates at kInfinitePrec for exact series.
class LaurentSeries {
 public:
  static constexpr int kInfinitePrec = 1 << 28;

  LaurentSeries() : lo_(0), prec_(kInfinitePrec) {}
  LaurentSeries(int lo, int prec);
  static LaurentSeries monomial(int e, const Polynomial& c,
                                int prec = kInfinitePrec);

  int lo() const { return lo_; }
  int prec() const { return prec_; }
  bool known(int e) const { return e < prec_; }

  Polynomial at(int e) const;                 // zero below lo
  void add_at(int e, const Polynomial& c);    // lo_ <= e < prec_

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(const Polynomial& c) const;
  LaurentSeries shifted(int e) const;  // multiply by t^e
  LaurentSeries truncated(int new_prec) const;
  // Scale exponents by j >= 1, mapping coefficients through fn.
  LaurentSeries exponent_scaled(
      int j, const std::function<Polynomial(const Polynomial&)>& fn) const;
  // Drop leading exact zeros (tightens lo; keeps meaning).
  LaurentSeries tightened() const;

  Polynomial coeff_sum() const;  // evaluation at t = 1 over the known range
  std::optional<int> min_nonzero() const;
  std::optional<int> max_nonzero() const;
  bool zero_on(int a, int b) const;  // [a, b) within the known range

 private:
  int lo_;
  int prec_;
  std::vector<Polynomial> c_;  // c_[i] is the coefficient of t^(lo_ + i)
};

}  // namespace lring
