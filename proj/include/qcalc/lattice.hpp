#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qcalc/error.hpp"
#include "qcalc/scalar.hpp"

namespace qcalc {

using Complex = std::complex<double>;

/// Samples on the lattice {+-gamma q^k : kmin <= k <= kmax}, optionally with a value at 0.
class QGridFunction {
 public:
  QGridFunction(double gamma, double q, int kmin, int kmax);
  static QGridFunction sample(const std::function<Complex(double)>& f, double gamma, double q, int kmin, int kmax,
                              bool with_zero = false);

  double gamma() const { return gamma_; }
  double q() const { return q_; }
  int kmin() const { return kmin_; }
  int kmax() const { return kmax_; }
  /// sign * gamma * q^k.
  double point(int sign, int k) const;
  bool has(int sign, int k) const { return k >= kmin_ && k <= kmax_ && sign != 0; }
  Complex at(int sign, int k) const;
  void set(int sign, int k, Complex v);
  const std::optional<Complex>& at_zero() const { return zero_; }
  void set_zero(Complex v) { zero_ = v; }

 private:
  double gamma_, q_;
  int kmin_, kmax_;
  std::vector<Complex> pos_, neg_;
  std::optional<Complex> zero_;
};

/// Polynomial with coefficients in Q(v) evaluated at a fixed q in 256-bit floating point.
class PrecisePoly {
 public:
  PrecisePoly(const std::vector<ScalarQ>& coeffs, double q);
  Complex operator()(double x) const;
  /// Real part at a high-precision point.
  mpf_class real_at(const mpf_class& x) const;
  static constexpr int kBits = 256;
  int degree() const { return static_cast<int>(re_.size()) - 1; }

 private:
  std::vector<mpf_class> re_, im_;
};

struct JacksonConfig {
  double tail_tol = 1e-15;
  int max_window = 400;
};

}  // namespace qcalc
