#include <cmath>

#include "doctest.h"
#include "qcalc/qfourier.hpp"
#include "qcalc/qfunctions.hpp"

using namespace qcalc;

namespace {

const Complex I(0, 1);
const TransformConfig TC{};
RealFn wI() { return hermite_weight(HermiteFamily::I, 0.5); }
RealFn wII() { return hermite_weight(HermiteFamily::II, 0.5); }

std::vector<Complex> samples() {
  auto p = lattice_points(1.0, 0.5, -3, 6);
  return {p.begin(), p.end()};
}

}  // namespace

TEST_CASE("forward transform of the Gaussian weight") {
  auto ys = samples();
  REQUIRE(ys.size() >= 20);
  auto out = fq_transform(wI(), ys);
  for (size_t i = 0; i < ys.size(); ++i) CHECK(std::abs(out[i] - wII()(ys[i].real())) < 1e-12);
  RealFn odd = [](double x) { return Complex(x * x * x); };
  CHECK(std::abs(fq_transform(odd, {0.0})[0]) < 1e-15);
  // degree 2 Hermite polynomial: -q y^2 e_{q^2}(-y^2)
  auto h2 = hermite(HermiteFamily::I, 2).at(0.5);
  auto w = wI();
  RealFn f = [&](double x) { return h2(x) * w(x); };
  double y = 0.5;
  CHECK(std::abs(fq_transform(f, {y})[0] + 0.5 * y * y * wII()(y)) < 1e-12);
}

TEST_CASE("inverse transform of the Gaussian weight") {
  std::vector<Complex> xs;
  for (double x : lattice_points(1.0, 0.5, 0, 9)) xs.push_back(x);
  auto out = ftilde_transform(wII(), xs);
  for (size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(out[i] - wI()(xs[i].real())) < 1e-12);
  RealFn odd = [](double y) { return y * hermite_weight(HermiteFamily::II, 0.5)(y); };
  CHECK(std::abs(ftilde_transform(odd, {0.0})[0]) < 1e-15);
  // first Hermite polynomial direction: F~(y e_{q^2}(-y^2)) = i x E_{q^2}(-q^2 x^2)
  double x = 0.25;
  CHECK(std::abs(ftilde_transform(odd, {x})[0] - I * x * wI()(x)) < 1e-12);
}

TEST_CASE("grid versions agree with function versions") {
  auto f = QGridFunction::sample(wI(), 1.0, 0.5, 0, 60);
  auto a = fq_transform(f, {0.3, 2.0}), b = fq_transform(wI(), {0.3, 2.0});
  for (int i = 0; i < 2; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
  auto g = QGridFunction::sample(wII(), 1.0, 0.5, -30, 60);
  auto c = ftilde_transform(g, {0.3, 1.0}), d = ftilde_transform(wII(), {0.3, 1.0});
  for (int i = 0; i < 2; ++i) CHECK(std::abs(c[i] - d[i]) < 1e-14);
  auto shortg = QGridFunction::sample(wII(), 1.0, 0.5, -1, 60);
  CHECK_THROWS_AS(ftilde_transform(shortg, {0.3}), Error);
}

TEST_CASE("transforms are linear and the inverse ignores gamma to q gamma") {
  auto h3 = hermite(HermiteFamily::I, 3).at(0.5);
  auto w = wI();
  RealFn f = [&](double x) { return h3(x) * w(x); };
  RealFn sum = [&](double x) { return 2.0 * f(x) - 3.0 * w(x); };
  auto ys = samples();
  auto a = fq_transform(f, ys), b = fq_transform(w, ys), s = fq_transform(sum, ys);
  for (size_t i = 0; i < ys.size(); ++i) CHECK(std::abs(s[i] - (2.0 * a[i] - 3.0 * b[i])) < 1e-13);
  for (double gamma : {1.0, 0.7}) {
    TransformConfig t1{0.5, gamma}, t2{0.5, gamma * 0.5};
    auto g = wII();
    RealFn gy = [&](double y) { return y * y * g(y); };
    auto u = ftilde_transform(gy, {0.2, 0.9}, t1), v = ftilde_transform(gy, {0.2, 0.9}, t2);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(u[i] - v[i]) < 1e-10);
  }
}

TEST_CASE("forward closed forms and roundtrip") {
  auto r = roundtrip_check(8);
  for (const auto& c : r.cases)
    CHECK_MESSAGE(c.pass, "family " << c.family << " n=" << c.n << " fwd " << c.forward_error << " fit "
                                     << c.fit_residual << " back " << c.backward_error);
  CHECK(r.pass);
  CHECK(r.cases.size() == 18);
  CHECK(r.cases[0].forward_points >= 20);
  auto g = roundtrip_check(3, TransformConfig{0.5, 0.7});
  CHECK(g.pass);
}

TEST_CASE("polynomial times weight fit") {
  auto ys = lattice_points(1.0, 0.5, -2, 3);
  std::vector<Complex> v;
  for (double y : ys) v.push_back((1.0 + 2.0 * I * y - y * y) * wII()(y));
  auto fit = fit_poly_weight(ys, v, 2, 0.5);
  CHECK(std::abs(fit.coeffs[0] - 1.0) < 1e-12);
  CHECK(std::abs(fit.coeffs[1] - 2.0 * I) < 1e-12);
  CHECK(std::abs(fit.coeffs[2] + 1.0) < 1e-12);
  CHECK(fit.residual < 1e-12);
  CHECK_THROWS_AS(fit_poly_weight({1.0}, {1.0}, 2, 0.5), Error);
}

TEST_CASE("derivative exchange") {
  auto ys = samples();
  auto r = derivative_exchange_f(wI(), ys);
  CHECK_MESSAGE(r.pass, r.max_error);
  RealFn zero = [](double) { return Complex(0.0); };
  auto z = derivative_exchange_f(zero, ys);
  CHECK(z.pass);
  CHECK(std::abs(z.lhs[0]) == 0.0);
  auto g = derivative_exchange_g(wII(), ys);
  CHECK_MESSAGE(g.pass, g.max_error);
  auto h2 = hermite(HermiteFamily::I, 2).at(0.5);
  auto w = wI();
  RealFn f2 = [&](double x) { return h2(x) * w(x); };
  CHECK(derivative_exchange_f(f2, ys).pass);
  RealFn bad = [](double x) { return Complex(1.0 - x * x); };
  try {
    derivative_exchange_f(bad, ys);
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisFailed);
  }
  RealFn slow = [](double y) { return Complex(1.0 / (1.0 + y * y)); };
  CHECK_THROWS_AS(derivative_exchange_g(slow, {0.5}), Error);
}

TEST_CASE("lowering relations on lattice samples") {
  for (int n = 0; n <= 6; ++n) {
    CHECK_MESSAGE(lowering_residual(HermiteFamily::I, n, 0.5, 1.0, 0, 30) < 1e-9, n);
    CHECK_MESSAGE(lowering_residual(HermiteFamily::II, n, 0.5, 0.7, -10, 30) < 1e-9, n);
  }
}

TEST_CASE("kernel poles are refused") {
  TransformConfig tc;
  RealFn one = [](double) { return Complex(1.0); };
  // e_q(-ixy) has a pole at x y = i q^-k, hit at y = -2i, x = 1 for q = 1/2
  CHECK_THROWS_AS(fq_transform(one, {Complex(0, -2.0)}, tc), Error);
}
