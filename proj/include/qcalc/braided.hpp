#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcalc/jackson.hpp"
#include "qcalc/ncalg.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

/// Elements of C_q[x] are power series in x; A (x) A is the q-plane with y = x(x)1 and x = 1(x)x,
/// so the normal word y^l x^k is x^l (x) x^k.
using BraidedPoly = PowerSeries;
using TensorElement = NCElement;

/// x^l (x) x^k.
TensorElement tensor_basis(int l, int k, int trunc, const QMode& mode = QMode::exact());
/// Coefficient of x^l (x) x^k.
ScalarQ tensor_coeff(const TensorElement& t, int l, int k);
/// Psi(x^k (x) x^l) = q^{kl} x^l (x) x^k, extended linearly.
TensorElement braiding(int k, int l, int trunc, const QMode& mode = QMode::exact());
TensorElement braid(const TensorElement& t);
/// Multiplication in the braided tensor product.
TensorElement braided_tensor_mul(const TensorElement& a, const TensorElement& b);
/// (x^{k1} (x) x^{k2})(x^{l1} (x) x^{l2}) = q^{k2 l1} x^{k1+l1} (x) x^{k2+l2}, straight from the rule.
TensorElement tensor_mul_rule(int k1, int k2, int l1, int l2, int trunc, const QMode& mode = QMode::exact());

/// Delta(f) = f(x(x)1 + 1(x)x).
TensorElement coproduct(const BraidedPoly& f);
ScalarQ counit(const BraidedPoly& f);
/// S(x^n) = (-1)^n q^{n(n-1)/2} x^n.
BraidedPoly antipode(const BraidedPoly& f);
/// m(x^l (x) x^k) = x^{l+k}.
BraidedPoly multiply(const TensorElement& t);

/// Slotwise linear maps given by their images of x^n.
using LinearMap = std::function<BraidedPoly(int n, int trunc)>;
LinearMap identity_map(const QMode& mode = QMode::exact());
LinearMap antipode_map(const QMode& mode = QMode::exact());
LinearMap counit_map(const QMode& mode = QMode::exact());
TensorElement tensor_map(const TensorElement& t, const LinearMap& a, const LinearMap& b);

/// x^a (x) x^b (x) x^c as g1^a g2^b g3^c in the three-slot q-commuting algebra.
NCElement triple_basis(int a, int b, int c, int trunc, const QMode& mode = QMode::exact());

struct AxiomCheck {
  std::string axiom;
  int n = 0;
  bool pass = false;
};
struct HopfReport {
  int n_max = 0;
  std::vector<AxiomCheck> checks;
  bool pass() const;
};
/// Coassociativity, counit and antipode laws, the antipode recurrence, braided anti-multiplicativity,
/// Delta as a homomorphism and the associativity of the tensor rules, on the basis up to degree n_max.
HopfReport hopf_axiom_check(int n_max);

struct HermiteCoproductReport {
  int n = 0;
  bool coproduct_ok = false;
  /// m (S (x) id) Delta h_n against h_n(0).
  bool collapse_ok = false;
  BraidedPoly collapsed;
  bool pass() const { return coproduct_ok && collapse_ok; }
};
HermiteCoproductReport hermite_coproduct_check(int n);

struct ExponentialReport {
  int trunc = 0;
  bool coproduct_ok = false, counit_ok = false, antipode_ok = false, inverse_ok = false;
  bool pass() const { return coproduct_ok && counit_ok && antipode_ok && inverse_ok; }
};
/// Delta e_q = e_q (x) e_q, eps(e_q) = 1, S(e_q) = E_q(-x) and S(e_q) e_q = 1, truncated.
ExponentialReport exponential_check(int trunc);

struct CovarianceReport {
  std::string kind;
  int j_max = 0;
  /// Per x-power j of the first slot: both sides.
  std::vector<Complex> lhs, rhs;
  double coefficient_error = 0;
  /// Both sides summed as series in the first slot at lattice points |x| <= 1.
  double sampled_error = 0;
  /// Same comparison without the braided q^j scaling of the second-slot kernel.
  double unbraided_error = 0;
  double tol = 1e-8;
  bool pass = false;
};
/// Fourier covariance: the j-th component of (id (x) F_y)(Delta f), with the kernel moved through x^j (x) 1,
/// against F_y(f) E_q(ixy); f = x^m W over the gamma-lattice.
CovarianceReport fourier_covariance(QGaussian weight, int m, double y, double gamma, double q, int j_max = 10,
                                    const JacksonConfig& cfg = {}, double tol = 1e-8);
/// (id (x) int)((1 (x) g) Delta f) = (id (x) int)(((S (x) id) Delta g)(1 (x) f)) with f = x^m W_f, g = x^p W_g.
CovarianceReport convolution_covariance(QGaussian wf, int m, QGaussian wg, int p, double gamma, double q,
                                        int j_max = 10, const JacksonConfig& cfg = {}, double tol = 1e-8);

}  // namespace qcalc
