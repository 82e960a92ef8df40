#pragma once

#include <string>
#include <vector>

#include "qcalc/scalar.hpp"

namespace qcalc {

/// Commutative power series in one variable, truncated after degree N.
class PowerSeries {
 public:
  explicit PowerSeries(int trunc = 0);
  PowerSeries(int trunc, std::vector<ScalarQ> coeffs, bool polynomial = false);
  static PowerSeries monomial(int trunc, int k, const ScalarQ& c = ScalarQ(1));
  static PowerSeries constant(int trunc, const ScalarQ& c);

  int trunc() const { return trunc_; }
  const ScalarQ& operator[](int k) const;
  void set(int k, ScalarQ c);
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  /// Known to have no terms beyond the truncation.
  bool is_polynomial() const { return polynomial_; }
  void mark_polynomial(bool p = true) { polynomial_ = p; }

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const ScalarQ& c, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return (a - b).is_zero(); }

  /// f(c z).
  PowerSeries dilate(const ScalarQ& c) const;
  /// z^k f(z).
  PowerSeries shift_up(int k) const;
  /// f(g(z)) with g(0) = 0 unless f is a polynomial.
  PowerSeries compose(const PowerSeries& g) const;
  PowerSeries inverse() const;
  PowerSeries with_trunc(int n) const;
  PowerSeries in_mode(const QMode& mode) const;

  std::complex<double> evaluate(std::complex<double> z, double q) const;
  std::string to_string(const std::string& var = "z") const;

 private:
  int trunc_;
  std::vector<ScalarQ> c_;
  bool polynomial_ = false;
};

}  // namespace qcalc
