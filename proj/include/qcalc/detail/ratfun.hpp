#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qcalc/detail/zpoly.hpp"

namespace qcalc::detail {

/// Element of Q(v) kept as  v^off * num / (den_c * prod Phi_d^e * rest).
///
/// Every denominator that arises from q-factorials splits into cyclotomic
/// factors, so those are tracked by index and cancelled by trial division;
/// anything else lands in `rest` and is cancelled through a polynomial gcd.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(long long c);
  explicit RatFun(const mpq_class& c);
  RatFun(ZPoly num, int off);

  static RatFun v_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  mpq_class constant_value() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) { return (a - b).is_zero(); }

  RatFun inverse() const;
  RatFun pow(long long n) const;
  /// Substitution v -> 1/v (equivalently q -> 1/q).
  RatFun invert_v() const;

  /// Value at a concrete v; throws PoleHit when the denominator vanishes.
  long double eval_v(long double v) const;

  /// Laurent numerator and denominator polynomials: value = N(v) / D(v).
  std::pair<ZPoly, int> numerator_poly() const;
  std::pair<ZPoly, int> denominator_poly() const;

  /// Sign of the lowest-order numerator term, used when printing sums.
  int display_sign() const { return num_.const_sign(); }
  std::string to_string() const;

 private:
  void reduce();

  int off_ = 0;
  ZPoly num_;
  mpz_class den_c_ = 1;
  std::vector<std::pair<int, int>> cyc_;
  ZPoly rest_ = ZPoly(std::int64_t{1});
};

}  // namespace qcalc::detail
