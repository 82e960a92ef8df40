#include <cmath>

#include "doctest.h"
#include "qcalc/braided.hpp"
#include "qcalc/qfunctions.hpp"
#include "qcalc/qhermite.hpp"

using namespace qcalc;

namespace {

ScalarQ q() { return ScalarQ::q_power(1); }
PowerSeries mono(int n, int t) { return PowerSeries::monomial(t, n); }

}  // namespace

TEST_CASE("braiding") {
  auto t = braiding(2, 3, 8);
  CHECK(tensor_coeff(t, 3, 2) == q().pow(6));
  CHECK(tensor_coeff(t, 2, 3).is_zero());
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l)
      CHECK(braid(braid(tensor_basis(k, l, 8))) == q().pow(2 * k * l) * tensor_basis(k, l, 8));
  auto x1 = tensor_basis(1, 0, 4), x2 = tensor_basis(0, 1, 4);
  CHECK(x2 * x1 == q() * (x1 * x2));
}

TEST_CASE("tensor product rules") {
  for (int k1 = 0; k1 <= 3; ++k1)
    for (int k2 = 0; k2 <= 3; ++k2)
      for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
          CHECK(braided_tensor_mul(tensor_basis(k1, k2, 12), tensor_basis(l1, l2, 12)) ==
                tensor_mul_rule(k1, k2, l1, l2, 12));
  auto a = triple_basis(1, 2, 3, 12), b = triple_basis(2, 1, 1, 12);
  CHECK(a * b == q().pow(2 * 2 + 3 * 2 + 3 * 1) * triple_basis(3, 3, 4, 12));
}

TEST_CASE("coproduct counit antipode") {
  auto d = coproduct(mono(2, 4));
  CHECK(d == tensor_basis(2, 0, 4) + (ScalarQ(1) + q()) * tensor_basis(1, 1, 4) + tensor_basis(0, 2, 4));
  CHECK(counit(PowerSeries::constant(4, ScalarQ(3)) + ScalarQ(2) * mono(1, 4)) == ScalarQ(3));
  CHECK(antipode(mono(3, 4)) == -q().pow(3) * mono(3, 4));
  CHECK(antipode(mono(0, 4)) == mono(0, 4));
  CHECK(multiply(tensor_basis(2, 3, 6)) == mono(5, 6));
  auto s = tensor_map(tensor_basis(2, 1, 4), antipode_map(), identity_map());
  CHECK(s == q() * tensor_basis(2, 1, 4));
  CHECK(tensor_map(tensor_basis(2, 1, 4), counit_map(), identity_map()).is_zero());
}

TEST_CASE("hopf axioms") {
  auto r = hopf_axiom_check(12);
  CHECK(r.pass());
  for (const auto& c : r.checks) {
    INFO(c.axiom << " n=" << c.n);
    CHECK(c.pass);
  }
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 12; ++b)
      CHECK(coproduct(mono(a + b, 12)) == coproduct(mono(a, 12)) * coproduct(mono(b, 12)));
}

TEST_CASE("hermite coproduct") {
  for (int n = 0; n <= 8; ++n) {
    auto r = hermite_coproduct_check(n);
    INFO("n=" << n);
    CHECK(r.coproduct_ok);
    CHECK(r.collapse_ok);
  }
  auto r2 = hermite_coproduct_check(2);
  CHECK(r2.collapsed == PowerSeries::constant(2, -(ScalarQ(1) - q())));
}

TEST_CASE("exponential is grouplike") {
  for (int t : {4, 8, 12}) {
    auto r = exponential_check(t);
    CHECK(r.coproduct_ok);
    CHECK(r.counit_ok);
    CHECK(r.antipode_ok);
    CHECK(r.inverse_ok);
  }
}

TEST_CASE("fourier covariance") {
  auto r0 = fourier_covariance(QGaussian::Small, 0, 0.0, 1.0, 0.5);
  CHECK(r0.pass);
  auto r = fourier_covariance(QGaussian::Small, 2, 0.25, 1.0, 0.5);
  INFO(r.coefficient_error << " " << r.sampled_error << " " << r.unbraided_error);
  CHECK(r.pass);
  CHECK(r.unbraided_error > 1e-4);
  auto rg = fourier_covariance(QGaussian::Small, 1, 0.5, 0.7, 0.3);
  CHECK(rg.pass);
}

TEST_CASE("convolution covariance") {
  auto r = convolution_covariance(QGaussian::Small, 1, QGaussian::Small, 0, 1.0, 0.5);
  INFO(r.coefficient_error << " " << r.sampled_error << " " << r.unbraided_error);
  CHECK(r.pass);
  CHECK(r.unbraided_error > 1e-4);
  auto r2 = convolution_covariance(QGaussian::Small, 2, QGaussian::Small, 1, 0.7, 0.5);
  CHECK(r2.pass);
}
