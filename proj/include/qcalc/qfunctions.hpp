#pragma once

#include <string>
#include <vector>

#include "qcalc/lattice.hpp"
#include "qcalc/scalar.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

/// The named one-variable q-functions.
struct NamedSeries {
  enum Kind { EQ, BIGEQ, PHI10, LOGQ, LI2Q, GAUSS_G, GAUSS_BIGG };
  Kind kind = EQ;
  /// Parameter of 1phi0(a;;q,z).
  ScalarQ a;

  static NamedSeries eq() { return {EQ, ScalarQ(0)}; }
  static NamedSeries big_eq() { return {BIGEQ, ScalarQ(0)}; }
  static NamedSeries phi10(ScalarQ a) { return {PHI10, std::move(a)}; }
  static NamedSeries logq() { return {LOGQ, ScalarQ(0)}; }
  static NamedSeries li2q() { return {LI2Q, ScalarQ(0)}; }
  static NamedSeries gauss_g() { return {GAUSS_G, ScalarQ(0)}; }
  static NamedSeries gauss_big_g() { return {GAUSS_BIGG, ScalarQ(0)}; }
  std::string name() const;
};

/// Power series of a named function, truncated at degree trunc.
PowerSeries series_of(const NamedSeries& f, int trunc, const QMode& mode);
/// e_base(z) and E_base(z) with an arbitrary base (e.g. q^2).
PowerSeries small_exp_series(int trunc, const ScalarQ& base);
PowerSeries big_exp_series(int trunc, const ScalarQ& base);

enum class QDirection { Backward, Forward };

/// Backward: (f(z) - f(qz))/((1-q)z); forward: (f(z/q) - f(z))/((1-q)z).
PowerSeries qderiv(const PowerSeries& f, const QMode& mode, QDirection dir = QDirection::Backward);
/// Same on lattice samples; the result window shrinks by one and drops the value at 0.
QGridFunction qderiv(const QGridFunction& f, QDirection dir = QDirection::Backward);

/// Product-form evaluation; e_q refuses points within pole_tol of a pole q^-k.
Complex numeric_eval(const NamedSeries& f, Complex z, double q, double tol = 1e-17, double pole_tol = 1e-12);
/// Direct series summation; refuses |z| >= 1 for the series with radius 1.
Complex numeric_series_eval(const NamedSeries& f, Complex z, double q);
/// Classical dilogarithm by series summation, |z| < 1.
double classical_li2(double z);

struct LimitReport {
  std::string which;
  double z = 0;
  std::vector<double> qs;
  std::vector<double> deviations;
  bool monotone = false;
  double tol = 0;
  bool pass = false;
};
/// Deviation of (1-q)-scaled q-functions from their classical limits:
/// eq, bigEq -> e^z; logq -> -log(1-z); li2q -> Li2(z).
LimitReport limit_check_q1(const std::string& which, double z, const std::vector<double>& qs, double tol = 1e-2);

struct HybridEntry {
  std::string id;
  double max_residual = 0;
  double tol = 0;
  bool pass = false;
  std::string note;
};
struct HybridReport {
  double q = 0;
  std::vector<HybridEntry> entries;
  bool pass() const;
};
/// Li2(z;q) = log e_q(z); log_q = z e_q'/e_q; log_q = -d/da 1phi0 at a=1 (finite difference and exact);
/// (1-q) D_q log_q = 1/(1-z); (D_q f)(g(x)) (D_q g)(x) = 1 for f = (1-q) log_q, g = 1 - e_q(-(1-q)x).
HybridReport hybrid_identities(double q, const std::vector<double>& zs);

/// Series whose k-th coefficient is d/da of (a;q)_k/(q;q)_k at a = a0.
PowerSeries phi10_a_derivative(int trunc, const ScalarQ& a0, const QMode& mode);

struct RangeScan {
  double lo = 0, hi = 0;
  std::vector<double> xs;
  std::vector<double> residuals;
  /// Smallest and largest sampled x whose residual stays below tol, with no failure in between.
  double valid_lo = 0, valid_hi = 0;
  bool all_pass = false;
};
/// Residual of (D_q f)(g(x)) (D_q g)(x) - 1 on a uniform grid of x.
RangeScan chain_rule_scan(double q, double lo, double hi, int points, double tol = 1e-10);
/// (D_q g)(f(y)) (D_q f)(y) - 1, which is not expected to vanish.
double reversed_chain_rule_residual(double q, double y);

/// sum_{n>=k} (1-q^k)/(1-q^n) [n,k]_q y^(n-k) times (y;q)_k, minus 1.
double binomial_tail_residual(int k, double y, double q);

}  // namespace qcalc
