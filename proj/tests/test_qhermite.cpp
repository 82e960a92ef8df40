#include <cmath>

#include "doctest.h"
#include "qcalc/qfunctions.hpp"
#include "qcalc/qhermite.hpp"

using namespace qcalc;

namespace {

const QMode X = QMode::exact();
ScalarQ q() { return ScalarQ::q_power(1); }
const auto I = HermiteFamily::I;
const auto II = HermiteFamily::II;

}  // namespace

TEST_CASE("explicit polynomials") {
  auto h2 = hermite(I, 2);
  CHECK(h2.coeffs.size() == 3);
  CHECK(h2.coeffs[2] == ScalarQ(1));
  CHECK(h2.coeffs[1].is_zero());
  CHECK(h2.coeffs[0] == -(ScalarQ(1) - q()));
  auto t2 = hermite(II, 2);
  CHECK(t2.coeffs[0] == -q().pow(-1) * (ScalarQ(1) - q()));
  for (auto f : {I, II}) {
    CHECK(hermite(f, 0).coeffs == QPoly{ScalarQ(1)});
    CHECK(hermite(f, 1).coeffs.size() == 2);
    CHECK(hermite(f, 1).coeffs[1] == ScalarQ(1));
    CHECK(hermite(f, 1).coeffs[0].is_zero());
    for (int n = 0; n <= 10; ++n) {
      auto h = hermite(f, n);
      CHECK(h.n == n);
      CHECK(h.coeffs.back() == ScalarQ(1));
    }
  }
  CHECK(hermite(I, 2).to_string().find("x^2") != std::string::npos);
  CHECK_THROWS_AS(hermite(I, -1), Error);
}

TEST_CASE("three-term recurrences") {
  for (auto f : {I, II})
    for (int n = 0; n <= 12; ++n) CHECK_MESSAGE(check_recurrence(f, n), n);
}

TEST_CASE("generating functions") {
  CHECK(check_generating_function(I, 12));
  CHECK(check_generating_function(II, 12));
}

TEST_CASE("monomial expansions and alternating sums") {
  for (auto f : {I, II})
    for (int n = 0; n <= 10; ++n) {
      CHECK_MESSAGE(check_monomial_expansion(f, n), n);
      CHECK_MESSAGE(check_alternating_sum(f, n), n);
    }
}

TEST_CASE("values at the origin") {
  CHECK(hermite(I, 2)(ScalarQ(0)) == -(ScalarQ(1) - q()));
  for (auto f : {I, II})
    for (int n = 0; n <= 6; ++n) CHECK_MESSAGE(check_special_value(f, n), n);
}

TEST_CASE("duality under q to 1/q") {
  for (int n = 0; n <= 10; ++n) CHECK_MESSAGE(check_duality(n), n);
  CHECK(GaussQ::i_power(2) == GaussQ(ScalarQ(-1)));
  CHECK(GaussQ::i_power(-1) == GaussQ(ScalarQ(0), ScalarQ(-1)));
  CHECK(GaussQ::i_power(1) * GaussQ::i_power(1) == GaussQ(ScalarQ(-1)));
}

TEST_CASE("lowering and Rodrigues formulas") {
  for (auto f : {I, II})
    for (int n = 0; n <= 8; ++n) {
      CHECK_MESSAGE(check_lowering(f, n, 14), n);
      CHECK_MESSAGE(check_rodrigues(f, n, 14), n);
    }
  CHECK_THROWS_AS(check_rodrigues(I, 5, 3), Error);
}

TEST_CASE("structural report") {
  for (auto f : {I, II}) {
    auto r = structural_checks(f, 6);
    CHECK(r.pass());
    CHECK(r.checks.size() > 30);
  }
}

TEST_CASE("numeric orthogonality") {
  double qq = 0.5;
  auto r0 = orthogonality_numeric(I, 0, 0, qq);
  CHECK(r0.pass);
  CHECK(std::abs(r0.value - b_q(qq)) < 1e-10);
  auto r1 = orthogonality_numeric(II, 1, 1, qq, 1.0);
  CHECK(r1.pass);
  CHECK(std::abs(r1.expected - c_q(qq, 1.0) / qq * (1 - qq)) < 1e-14);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      CHECK_MESSAGE(orthogonality_numeric(I, m, n, qq).pass, m << "," << n);
      for (double gamma : {1.0, 0.7}) CHECK_MESSAGE(orthogonality_numeric(II, m, n, qq, gamma).pass, m << "," << n);
    }
  CHECK(orthogonality_numeric(I, 3, 3, 0.3).pass);
}

TEST_CASE("kernel integrals") {
  double qq = 0.5;
  std::vector<double> ts = {0.0, 0.25, 0.5, -0.75, 1.0};
  auto r0 = transform_integrals(140, 0, {0.0}, qq);
  CHECK(r0.pass);
  CHECK(std::abs(r0.lhs[0] - b_q(qq)) < 1e-12);
  for (int kind : {140, 146, 148, 149})
    for (int n = 0; n <= 5; ++n) {
      auto r = transform_integrals(kind, n, ts, qq);
      CHECK_MESSAGE(r.pass, kind << " n=" << n << " err " << r.max_error);
    }
  auto g = transform_integrals(149, 4, {0.0, 0.3}, qq, 0.7);
  CHECK(g.pass);
  // t = 0 gives the moment formula
  CHECK(std::abs(g.lhs[0].real() - moment_small_gauss(4, qq, 0.7)) < 1e-10 * moment_small_gauss(4, qq, 0.7));
  auto h = transform_integrals(148, 1, {0.25}, qq);
  CHECK(h.max_error < 1e-9);
  CHECK_THROWS_AS(transform_integrals(150, 0, ts, qq), Error);
}

TEST_CASE("addition formula in the q-plane") {
  auto r1 = addition_formula(1);
  CHECK(r1.pass);
  for (int n = 0; n <= 8; ++n) CHECK_MESSAGE(addition_formula(n).pass, n);
  auto alg = algebras::qplane(X);
  auto x = NCElement::gen(alg, 2, "x"), y = NCElement::gen(alg, 2, "y");
  auto r2 = addition_formula(2);
  CHECK(r2.lhs == y.pow(2) + (ScalarQ(1) + q()) * (y * x) + x.pow(2) - (ScalarQ(1) - q()) * NCElement::scalar(alg, 2, 1));
}

TEST_CASE("rescaling identity in the lambda-mu algebra") {
  for (int n = 0; n <= 8; ++n) CHECK_MESSAGE(rescaling_identity(n).pass, n);
  auto r = rescaling_identity(1);
  CHECK(r.lhs[1] == (ScalarQ(1) - q()).inverse() * NCElement::gen(algebras::lambda_mu(X), 1, "lambda"));
  CHECK(r.lhs[1] == r.rhs[1]);
}
