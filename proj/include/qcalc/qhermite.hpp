#pragma once

#include <string>
#include <vector>

#include "qcalc/jackson.hpp"
#include "qcalc/ncalg.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

enum class HermiteFamily { I, II };

/// Dense polynomial in x, coefficient j multiplies x^j.
using QPoly = std::vector<ScalarQ>;

struct QHermitePoly {
  HermiteFamily family = HermiteFamily::I;
  int n = 0;
  QPoly coeffs;

  ScalarQ operator()(const ScalarQ& x) const;
  /// Numeric evaluator at a fixed q.
  PrecisePoly at(double q) const { return PrecisePoly(coeffs, q); }
  PowerSeries as_series(int trunc) const;
  std::string to_string() const;
};

/// h_n(x;q) for family I, the discrete q-Hermite II polynomial for family II.
QHermitePoly hermite(HermiteFamily family, int n);

/// a + b i over the exact field with i^2 = -1.
struct GaussQ {
  ScalarQ re, im;
  GaussQ(ScalarQ r = ScalarQ(0), ScalarQ i = ScalarQ(0)) : re(std::move(r)), im(std::move(i)) {}
  static GaussQ i_power(int k);
  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

struct IdentityCheck {
  std::string id;
  int n = 0;
  bool pass = false;
};

struct StructuralReport {
  HermiteFamily family = HermiteFamily::I;
  int n_max = 0;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// Three-term recurrence against the explicit sums at degree n+1.
bool check_recurrence(HermiteFamily family, int n);
/// Coefficients of t^n, n <= n_max, of the generating function as polynomials in x.
bool check_generating_function(HermiteFamily family, int n_max);
/// x^n expanded in the family.
bool check_monomial_expansion(HermiteFamily family, int n);
/// The terminating alternating sum of degree m collapses to a constant.
bool check_alternating_sum(HermiteFamily family, int m);
/// Value at 0 of the degree-2n polynomial (odd degrees vanish).
bool check_special_value(HermiteFamily family, int n);
/// h_n(ix; q^-1) = i^n h~_n(x; q) with exact Gaussian coefficients.
bool check_duality(int n);
/// (1-q) D^+(h_n W_I) = -q^-n h_{n+1} W_I, family II with D^- and W_II, on series truncated at trunc.
bool check_lowering(HermiteFamily family, int n, int trunc);
/// n-fold q-derivative of the weight series against h_n.
bool check_rodrigues(HermiteFamily family, int n, int trunc);

StructuralReport structural_checks(HermiteFamily family, int n_max);

/// W_I(x) = E_{q^2}(-q^2 x^2), W_II(x) = e_{q^2}(-x^2).
RealFn hermite_weight(HermiteFamily family, double q);
/// Truncated weight series in x.
PowerSeries hermite_weight_series(HermiteFamily family, int trunc);
/// Squared norm: b_q q^{n(n-1)/2} (q;q)_n for family I, c_q(gamma) q^{-n^2} (q;q)_n for family II.
double hermite_norm(HermiteFamily family, int n, double q, double gamma = 1.0);

struct OrthogonalityReport {
  HermiteFamily family = HermiteFamily::I;
  int m = 0, n = 0;
  double q = 0.5, gamma = 1;
  double value = 0, expected = 0;
  double tol = 1e-10;
  bool pass = false;
};
/// Family I over [-1,1], family II over the gamma-lattice.
OrthogonalityReport orthogonality_numeric(HermiteFamily family, int m, int n, double q, double gamma = 1.0,
                                          const JacksonConfig& cfg = {}, double tol = 1e-10);

struct TransformReport {
  int kind = 140;
  int n = 0;
  std::vector<double> ts;
  std::vector<Complex> lhs, rhs;
  double max_error = 0;
  double tol = 1e-9;
  bool pass = false;
};
/// Kernel integrals of Hermite polynomials and monomials against their closed forms, selected by identity number.
TransformReport transform_integrals(int kind, int n, const std::vector<double>& ts, double q, double gamma = 1.0,
                                    const JacksonConfig& cfg = {}, double tol = 1e-9);

struct NCIdentityReport {
  int n = 0;
  NCElement lhs, rhs;
  bool pass = false;
};
/// h_n(x+y) = sum_k [n,k] y^{n-k} h_k(x) in the q-plane.
NCIdentityReport addition_formula(int n);

struct RescalingReport {
  int n = 0;
  /// Per power of x: both sides in the lambda-mu algebra.
  std::vector<NCElement> lhs, rhs;
  bool pass = false;
};
/// Rescaling of h_n by lambda, mu with lambda mu = q^{1/2} mu lambda.
RescalingReport rescaling_identity(int n);

}  // namespace qcalc
