#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcalc/lattice.hpp"
#include "qcalc/ncalg.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

using RealFn = std::function<Complex(double)>;

/// int_0^x f(t) d_qt on series: z^n -> (1-q)/(1-q^{n+1}) z^{n+1}.
PowerSeries jackson_0_to_x(const PowerSeries& f, const QMode& mode);

struct JacksonSum {
  Complex value;
  /// Sum of term magnitudes.
  double abs_sum = 0;
  /// Lattice indices actually summed (inclusive).
  int kmin = 0, kmax = 0;
};

/// (1-q) sum_{k>=0} f(q^k x) q^k x, stopped once three consecutive terms fall below tail_tol.
JacksonSum jackson_0_to(const RealFn& f, double x, double q, const JacksonConfig& cfg = {});
/// int_a^b = int_0^b - int_0^a.
Complex jackson_interval(const RealFn& f, double a, double b, double q, const JacksonConfig& cfg = {});
/// int_{-1}^{1} over the samples of a grid with anchor 1 and kmin = 0; the last samples must be below tail_tol.
Complex jackson_interval(const QGridFunction& f, const JacksonConfig& cfg = {});

/// (1-q) sum_{k in Z} (f(q^k gamma) + f(-q^k gamma)) q^k gamma with both tails below tail_tol.
JacksonSum jackson_realline(const RealFn& f, double gamma, double q, const JacksonConfig& cfg = {});
/// Same over a sampled window; both edge terms must be below tail_tol.
Complex jackson_realline(const QGridFunction& f, const JacksonConfig& cfg = {});

/// b_q = (1-q)(q, -q, -1; q)_inf.
double b_q(double q);
/// c_q(gamma) = 2(1-q)(q^2, -q gamma^2, -q/gamma^2; q^2)_inf gamma / (-gamma^2, -q^2/gamma^2, q; q^2)_inf.
double c_q(double q, double gamma);

/// Closed-form moments: int t^m g_q(t) over the gamma-lattice and int_{-q}^{q} t^m G_q(t).
double moment_small_gauss(int m, double q, double gamma);
double moment_big_gauss(int m, double q);

struct FiniteInvarianceReport {
  NCElement lhs, rhs;
  bool pass = false;
};
/// int_y^{x+y} f = int_0^x f(t+y) in the q-plane, both sides built independently.
FiniteInvarianceReport translation_invariance_finite(const PowerSeries& f, const QMode& mode = QMode::exact());

struct TaylorDecomposition {
  NCElement full, partial, remainder;
  /// remainder = y^m g_m.
  NCElement g_m;
  bool remainder_divisible = false;
};
/// f(x+y) = sum_{k<m} y^k ((1-q)D_q)^k f(x)/(q;q)_k + y^m g_m(x,y).
TaylorDecomposition qtaylor(const PowerSeries& f, int m, const QMode& mode = QMode::exact());

enum class QGaussian { Small, Big };

/// p(x) W(q^s x) with W = g_q or G_q and exact polynomial coefficients.
class GaussianTimesPoly {
 public:
  GaussianTimesPoly(QGaussian w, std::vector<ScalarQ> p, int shift = 0) : w_(w), p_(std::move(p)), s_(shift) {}
  static GaussianTimesPoly monomial(QGaussian w, int j);

  QGaussian weight() const { return w_; }
  const std::vector<ScalarQ>& poly() const { return p_; }
  int shift() const { return s_; }
  /// Backward q-derivative, again of this form.
  GaussianTimesPoly qderiv(const QMode& mode = QMode::exact()) const;
  GaussianTimesPoly scaled(const ScalarQ& c) const;
  Complex operator()(double x, double q) const;
  RealFn at(double q) const;

 private:
  QGaussian w_;
  std::vector<ScalarQ> p_;
  int s_;
};

struct InfiniteInvarianceReport {
  QGaussian weight = QGaussian::Small;
  int j = 0;
  double gamma = 1, q = 0.5;
  double base = 0;
  /// I_{f_m}(gamma) for m = 1..m_max.
  std::vector<double> moments;
  /// sum of |terms| for each m, the scale of the cancellation.
  std::vector<double> scales;
  double tol = 1e-10;
  /// Ratio test for |D_q^m f(+-q^-k gamma)| = O(q^{3k/2}) at the outer end of the summed window.
  bool growth_ok = false;
  bool pass = false;
};
/// f = t^j W(t); f_m = ((1-q)D_q)^m f/(q;q)_m; throws DivergentUpperTail when the sums blow up.
InfiniteInvarianceReport translation_invariance_infinite(QGaussian weight, int j, int m_max, double gamma, double q,
                                                         const JacksonConfig& cfg = {}, double tol = 1e-10);

struct TelescopeReport {
  double integral = 0;
  double boundary = 0;
  bool pass = false;
};
/// int D_q f over the real line against the telescoped boundary terms, f sampled on a lattice window.
TelescopeReport lemma_telescope(const RealFn& f, double gamma, double q, int kmin, int kmax, double tol = 1e-12);

}  // namespace qcalc
