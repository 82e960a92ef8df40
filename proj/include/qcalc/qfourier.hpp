#pragma once

#include <vector>

#include "qcalc/jackson.hpp"
#include "qcalc/qhermite.hpp"

namespace qcalc {

struct TransformConfig {
  double q = 0.5;
  double gamma = 1.0;
  JacksonConfig cfg;
  /// Kernel evaluations closer than this to a pole of e_q are refused.
  double pole_tol = 1e-8;
};

/// (F_q f)(y) = (1/b_q) int_{-1}^{1} e_q(-ixy) f(x) d_qx.
std::vector<Complex> fq_transform(const RealFn& f, const std::vector<Complex>& ys, const TransformConfig& tc = {});
/// Same on samples at +-q^k, k >= 0, anchored at 1.
std::vector<Complex> fq_transform(const QGridFunction& f, const std::vector<Complex>& ys, const TransformConfig& tc = {});
/// (F~ g)(x) = (1/c_q(gamma)) int E_q(iqxy) g(y) d_qy over the gamma-lattice.
std::vector<Complex> ftilde_transform(const RealFn& g, const std::vector<Complex>& xs, const TransformConfig& tc = {});
/// Same on samples at +-gamma q^k over the grid window; the kernel-weighted edge terms must be below tail_tol.
std::vector<Complex> ftilde_transform(const QGridFunction& g, const std::vector<Complex>& xs,
                                      const TransformConfig& tc = {});

/// +-gamma q^k for k in [kmin, kmax], positive points first.
std::vector<double> lattice_points(double gamma, double q, int kmin, int kmax);

struct PolyWeightFit {
  /// Coefficients of p with samples ~ p(y) e_{q^2}(-y^2).
  std::vector<Complex> coeffs;
  double residual = 0;
  Complex operator()(double y) const;
};
/// Least-squares fit of samples by a degree-n polynomial times e_{q^2}(-y^2).
PolyWeightFit fit_poly_weight(const std::vector<double>& ys, const std::vector<Complex>& values, int n, double q);

struct RoundtripReport {
  /// 0: h_n W_I -> q^{n(n-1)/2} i^-n y^n W_II; 1: x^n W_I -> q^{n(n-1)/2} i^-n h~_n(y) W_II.
  int family = 0;
  int n = 0;
  double forward_error = 0;
  double fit_residual = 0;
  double backward_error = 0;
  int forward_points = 0, backward_points = 0;
  bool pass = false;
};
struct RoundtripSummary {
  std::vector<RoundtripReport> cases;
  double forward_tol = 1e-9, backward_tol = 1e-8;
  bool pass = false;
};
/// Forward images against closed forms on the gamma-lattice, then back through F~ on the unit lattice.
RoundtripSummary roundtrip_check(int n_max, const TransformConfig& tc = {}, double forward_tol = 1e-9,
                                 double backward_tol = 1e-8);

struct ExchangeReport {
  std::vector<Complex> points;
  std::vector<Complex> lhs, rhs;
  double max_error = 0;
  double tol = 1e-9;
  bool pass = false;
};
/// (1-q) F_q(D^+ f) = iy F_q f; needs f(+-1/q) = 0 and f continuous at 0, otherwise HypothesisFailed.
ExchangeReport derivative_exchange_f(const RealFn& f, const std::vector<Complex>& ys, const TransformConfig& tc = {},
                                     double tol = 1e-9, double hyp_tol = 1e-12);
/// (1-q) F~(D^- g) = -ix F~ g; needs E_q(+-ix gamma q^{1-k}) g(+-gamma q^-k) -> 0, otherwise HypothesisFailed.
ExchangeReport derivative_exchange_g(const RealFn& g, const std::vector<Complex>& xs, const TransformConfig& tc = {},
                                     double tol = 1e-9, double hyp_tol = 1e-12);

/// Largest residual of (1-q) D^+(h_n W_I) + q^-n h_{n+1} W_I (family I) or (1-q) D^-(h~_n W_II) + q^n h~_{n+1} W_II
/// over the lattice window, each relative to the largest sample entering the difference.
double lowering_residual(HermiteFamily family, int n, double q, double gamma, int kmin, int kmax);

}  // namespace qcalc
