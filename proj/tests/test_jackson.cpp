#include <cmath>

#include "doctest.h"
#include "qcalc/jackson.hpp"
#include "qcalc/qfunctions.hpp"

using namespace qcalc;

namespace {

const QMode X = QMode::exact();
ScalarQ q() { return ScalarQ::q_power(1); }

RealFn small_gauss(double qq) {
  return [qq](double x) { return numeric_eval(NamedSeries::gauss_g(), x, qq); };
}
RealFn big_gauss(double qq) {
  return [qq](double x) { return numeric_eval(NamedSeries::gauss_big_g(), x, qq); };
}
RealFn times_power(RealFn f, int n) {
  return [f, n](double x) { return std::pow(x, n) * f(x); };
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("series integration from 0") {
  auto z2 = PowerSeries::monomial(6, 2);
  auto J = jackson_0_to_x(z2, X);
  CHECK(J[3] == (ScalarQ(1) - q()) / (ScalarQ(1) - q().pow(3)));
  CHECK(J.degree() == 3);
  int N = 12;
  std::vector<ScalarQ> geo(N + 1, ScalarQ(1));
  auto G = jackson_0_to_x(PowerSeries(N, geo), X);
  auto logq = series_of(NamedSeries::logq(), N + 1, X);
  CHECK(G == (ScalarQ(1) - q()) * logq);
  CHECK(!G.is_polynomial());
}

TEST_CASE("numeric Jackson sums") {
  double qq = 0.5;
  auto sq = [](double x) { return Complex(x * x); };
  CHECK(std::abs(jackson_0_to(sq, 1.0, qq).value - 0.5 / 0.875) < 1e-14);
  CHECK(std::abs(jackson_0_to(sq, -1.0, qq).value + 0.5 / 0.875) < 1e-14);
  auto cube = [](double x) { return Complex(x * x * x); };
  CHECK(std::abs(jackson_interval(cube, -1.0, 1.0, qq)) < 1e-14);
  // orientation: int_a^b = -int_b^a
  auto one = [](double) { return Complex(1.0); };
  CHECK(std::abs(jackson_interval(one, 0.25, 1.0, qq) - 0.75) < 1e-14);
  CHECK(std::abs(jackson_interval(one, 1.0, 0.25, qq) + 0.75) < 1e-14);
  CHECK(jackson_0_to(sq, 0.0, qq).value == Complex(0.0));
  JacksonConfig tight{1e-15, 5};
  CHECK_THROWS_AS(jackson_0_to(sq, 1.0, qq, tight), Error);
}

TEST_CASE("Gaussian moments") {
  for (double qq : {0.5, 0.3}) {
    auto G = big_gauss(qq);
    CHECK(rel(jackson_interval(G, -qq, qq, qq).real(), b_q(qq) * qq) < 1e-12);
    CHECK(rel(jackson_realline(G, 1.0, qq).value.real(), jackson_interval(G, -qq, qq, qq).real()) < 1e-12);
    CHECK_THROWS_AS(jackson_realline(G, 1.1, qq), Error);
    for (int n = 0; n <= 4; ++n) {
      auto v = jackson_interval(times_power(G, 2 * n), -qq, qq, qq).real();
      CHECK_MESSAGE(rel(v, moment_big_gauss(2 * n, qq)) < 1e-10, n);
    }
    for (double gamma : {1.0, 0.7}) {
      for (int n = 0; n <= 4; ++n) {
        auto v = jackson_realline(times_power(small_gauss(qq), 2 * n), gamma, qq).value.real();
        CHECK_MESSAGE(std::abs(v / moment_small_gauss(2 * n, qq, gamma) - 1) < 1e-10, n << " " << gamma);
      }
      auto odd = jackson_realline(times_power(small_gauss(qq), 3), gamma, qq).value;
      CHECK(std::abs(odd) < 1e-12);
      CHECK(moment_small_gauss(3, qq, gamma) == 0);
    }
  }
}

TEST_CASE("realline sums only depend on gamma modulo q") {
  double qq = 0.5;
  auto f = times_power(small_gauss(qq), 2);
  for (double gamma : {1.0, 0.7, 0.9}) {
    double base = jackson_realline(f, gamma, qq).value.real();
    for (int k = -2; k <= 2; ++k) {
      double v = jackson_realline(f, gamma * std::pow(qq, k), qq).value.real();
      CHECK(std::abs(v - base) < 1e-12 * std::abs(base));
    }
    CHECK(std::abs(c_q(qq, gamma * qq) - c_q(qq, gamma)) < 1e-12 * c_q(qq, gamma));
  }
}

TEST_CASE("grid sums") {
  double qq = 0.5;
  auto f = times_power(small_gauss(qq), 2);
  auto g = QGridFunction::sample(f, 0.7, qq, -40, 60);
  CHECK(std::abs(jackson_realline(g) - jackson_realline(f, 0.7, qq).value) < 1e-12);
  auto shortg = QGridFunction::sample(f, 0.7, qq, -2, 60);
  CHECK_THROWS_AS(jackson_realline(shortg), Error);
  auto sq = [](double x) { return Complex(x * x); };
  auto h = QGridFunction::sample(sq, 1.0, qq, 0, 60);
  CHECK(std::abs(jackson_interval(h) - 2 * 0.5 / 0.875) < 1e-14);
  CHECK_THROWS_AS(jackson_interval(QGridFunction::sample(sq, 0.5, qq, 0, 60)), Error);
}

TEST_CASE("the upper tail of G_q off its zeros diverges") {
  double qq = 0.5;
  CHECK_THROWS_AS(jackson_realline(big_gauss(qq), 1.1, qq), Error);
  try {
    jackson_realline(big_gauss(qq), 1.1, qq);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentUpperTail);
  }
  auto slow = [](double x) { return Complex(1.0 / (1 + std::abs(x))); };
  try {
    jackson_realline(slow, 1.0, qq);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(e.kind() != ErrorKind::InvalidArgument);
  }
}

TEST_CASE("finite translation invariance in the q-plane") {
  for (int n = 0; n <= 6; ++n) {
    auto r = translation_invariance_finite(PowerSeries::monomial(n, n, ScalarQ(1)).with_trunc(8), X);
    CHECK_MESSAGE(r.pass, n);
    CHECK(!r.lhs.is_zero());
  }
  int N = 8;
  auto geo = PowerSeries(N, std::vector<ScalarQ>(N + 1, ScalarQ(1)));
  auto r = translation_invariance_finite(geo, X);
  CHECK(r.pass);
  auto e = translation_invariance_finite(series_of(NamedSeries::eq(), 7, X), X);
  CHECK(e.pass);
}

TEST_CASE("q-Taylor decomposition") {
  for (int n = 1; n <= 6; ++n) {
    auto f = PowerSeries(n, std::vector<ScalarQ>(n + 1, ScalarQ(0)), true);
    f.set(n, ScalarQ(1));
    auto d = qtaylor(f, n, X);
    CHECK(d.remainder_divisible);
    auto alg = d.full.algebra();
    CHECK(d.g_m == NCElement::scalar(alg, n, 1));
  }
  auto e = series_of(NamedSeries::eq(), 10, X);
  for (int m = 0; m <= 4; ++m) {
    auto d = qtaylor(e, m, X);
    CHECK_MESSAGE(d.remainder_divisible, m);
  }
  auto d0 = qtaylor(e, 0, X);
  CHECK(d0.remainder == d0.full);
}

TEST_CASE("exact q-derivatives of polynomial times Gaussian") {
  double qq = 0.5;
  for (auto w : {QGaussian::Small, QGaussian::Big}) {
    auto f = GaussianTimesPoly::monomial(w, 2);
    auto d = f.qderiv(X);
    auto F = f.at(qq), D = d.at(qq);
    for (double x : {0.3, -0.7, 1.3, 0.05}) {
      Complex fd = (F(x) - F(qq * x)) / ((1 - qq) * x);
      CHECK(std::abs(D(x) - fd) < 1e-12);
    }
  }
}

TEST_CASE("infinite translation invariance for Gaussian moments") {
  double qq = 0.5;
  for (auto w : {QGaussian::Small, QGaussian::Big}) {
    for (int j = 0; j <= 4; ++j) {
      auto r = translation_invariance_infinite(w, j, 6, 1.0, qq);
      CHECK_MESSAGE(r.pass, (w == QGaussian::Small ? "g" : "G") << " j=" << j);
      REQUIRE(r.moments.size() == 6);
      for (size_t m = 0; m < r.moments.size(); ++m)
        CHECK_MESSAGE(std::abs(r.moments[m]) < 1e-10, "m=" << m + 1 << " scale " << r.scales[m]);
    }
  }
  auto r = translation_invariance_infinite(QGaussian::Small, 2, 3, 0.7, qq);
  CHECK(r.pass);
  CHECK(r.base > 0);
  CHECK_THROWS_AS(translation_invariance_infinite(QGaussian::Big, 0, 2, 1.1, qq), Error);
}

TEST_CASE("integral of a q-derivative telescopes") {
  double qq = 0.5;
  auto f = times_power(small_gauss(qq), 1);
  auto r = lemma_telescope(f, 1.0, qq, -40, 60);
  CHECK(r.pass);
  auto cut = lemma_telescope(f, 1.0, qq, -2, 3);
  CHECK(!cut.pass);
  CHECK(std::abs(cut.integral - cut.boundary) < 1e-12);
}
