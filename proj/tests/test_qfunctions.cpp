#include <cmath>
#include <random>

#include "doctest.h"
#include "qcalc/qfunctions.hpp"

using namespace qcalc;

namespace {

const QMode X = QMode::exact();
ScalarQ q() { return ScalarQ::q_power(1); }

PowerSeries z_poly(int n, std::vector<ScalarQ> c) { return PowerSeries(n, std::move(c), true); }

}  // namespace

TEST_CASE("named series coefficients") {
  auto e = series_of(NamedSeries::eq(), 6, X);
  CHECK(e[2] == ((ScalarQ(1) - q()) * (ScalarQ(1) - q().pow(2))).inverse());
  CHECK(e[3].to_string() == "1/((1 - q)*(1 - q^2)*(1 - q^3))");
  auto E = series_of(NamedSeries::big_eq(), 6, X);
  CHECK(E[3] == q().pow(3) / qfactorial(3, X));
  auto l = series_of(NamedSeries::logq(), 6, X);
  CHECK(l[0].is_zero());
  CHECK(l[4] == (ScalarQ(1) - q().pow(4)).inverse());
  auto li = series_of(NamedSeries::li2q(), 6, X);
  CHECK(li[3] == (ScalarQ(3) * (ScalarQ(1) - q().pow(3))).inverse());
  auto g = series_of(NamedSeries::gauss_g(), 8, X);
  CHECK(g[1].is_zero());
  CHECK(g[2] == -(ScalarQ(1) - q().pow(2)).inverse());
  CHECK(g[4] == ((ScalarQ(1) - q().pow(2)) * (ScalarQ(1) - q().pow(4))).inverse());
  auto G = series_of(NamedSeries::gauss_big_g(), 8, X);
  CHECK(G[4] == q().pow(2) / ((ScalarQ(1) - q().pow(2)) * (ScalarQ(1) - q().pow(4))));
  CHECK(!e.is_polynomial());
}

TEST_CASE("q-difference equations and mutual inverses of the q-exponentials") {
  int N = 16;
  auto e = series_of(NamedSeries::eq(), N, X), E = series_of(NamedSeries::big_eq(), N, X);
  auto one_minus_z = z_poly(N, {ScalarQ(1), ScalarQ(-1)});
  auto one_plus_z = z_poly(N, {ScalarQ(1), ScalarQ(1)});
  CHECK(e.dilate(q()) == one_minus_z * e);
  CHECK(E == one_plus_z * E.dilate(q()));
  CHECK(e * E.dilate(ScalarQ(-1)) == PowerSeries::constant(N, ScalarQ(1)));
  CHECK(e.inverse() == E.dilate(ScalarQ(-1)));
}

TEST_CASE("1phi0 equals E_q(-az) e_q(z) for every a") {
  int N = 16;
  auto e = series_of(NamedSeries::eq(), N, X), E = series_of(NamedSeries::big_eq(), N, X);
  // coefficient k is a polynomial of degree k in a, so N+1 sample values decide it
  for (int a = 0; a <= N; ++a) {
    auto phi = series_of(NamedSeries::phi10(ScalarQ(a)), N, X);
    CHECK_MESSAGE(phi == E.dilate(ScalarQ(-a)) * e, a);
  }
  auto phi = series_of(NamedSeries::phi10(q().pow(3)), N, X);
  CHECK(phi == E.dilate(-q().pow(3)) * e);
  // a = q^k terminates; a = 0 gives e_q
  CHECK(series_of(NamedSeries::phi10(ScalarQ(0)), N, X) == e);
}

TEST_CASE("q-derivatives of series") {
  int N = 10;
  for (int n = 1; n <= 6; ++n) {
    auto d = qderiv(PowerSeries::monomial(N, n), X);
    CHECK(d[n - 1] == (ScalarQ(1) - q().pow(n)) / (ScalarQ(1) - q()));
    CHECK(d.degree() == n - 1);
    auto f = qderiv(PowerSeries::monomial(N, n), X, QDirection::Forward);
    CHECK(f[n - 1] == (q().pow(-n) - ScalarQ(1)) / (ScalarQ(1) - q()));
  }
  CHECK(qderiv(PowerSeries::constant(N, ScalarQ(7)), X).is_zero());
  auto l = series_of(NamedSeries::logq(), N + 1, X);
  auto d = (ScalarQ(1) - q()) * qderiv(l, X);
  for (int k = 0; k <= N; ++k) CHECK(d[k].is_one());
  // D_q e_q(z) = e_q(z)/(1-q)
  auto e = series_of(NamedSeries::eq(), N + 1, X);
  CHECK((ScalarQ(1) - q()) * qderiv(e, X) == e.with_trunc(N));
}

TEST_CASE("q-derivative on lattice samples") {
  double qq = 0.5;
  auto f = QGridFunction::sample([](double x) { return Complex(x * x * x); }, 1.0, qq, 0, 10);
  auto d = qderiv(f);
  CHECK(d.kmin() == 0);
  CHECK(d.kmax() == 9);
  double c = (1 - qq * qq * qq) / (1 - qq);
  for (int k = 0; k <= 9; ++k) {
    double x = d.point(-1, k);
    CHECK(std::abs(d.at(-1, k) - c * x * x) < 1e-14);
  }
  auto fw = qderiv(f, QDirection::Forward);
  CHECK(fw.kmin() == 1);
  double x = fw.point(1, 3);
  CHECK(std::abs(fw.at(1, 3) - (1 - qq * qq * qq) / (qq * qq * qq) / (1 - qq) * x * x) < 1e-13);
  CHECK_THROWS_AS(d.at(1, 10), Error);
  auto one = QGridFunction::sample([](double) { return Complex(1.0); }, 1.0, qq, 3, 3);
  try {
    qderiv(one);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingSample);
  }
}

TEST_CASE("numeric evaluation by products") {
  double qq = 0.5;
  CHECK(std::abs(numeric_eval(NamedSeries::big_eq(), 0.0, qq) - 1.0) < 1e-15);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int t = 0; t < 30; ++t) {
    Complex z(u(rng), u(rng));
    Complex p = numeric_eval(NamedSeries::eq(), z, qq) * numeric_eval(NamedSeries::big_eq(), -z, qq);
    CHECK(std::abs(p - 1.0) < 1e-12);
    CHECK(std::abs(numeric_eval(NamedSeries::eq(), z, qq) - numeric_series_eval(NamedSeries::eq(), z, qq)) <
          1e-12);
  }
  for (double z : {-3.0, -1.0, -0.2, 0.3, 0.9, 2.5}) {
    Complex lhs = numeric_eval(NamedSeries::gauss_g(), z, qq);
    Complex rhs = numeric_eval(NamedSeries::eq(), Complex(0, z), qq) * numeric_eval(NamedSeries::eq(), Complex(0, -z), qq);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  // e_q beyond the unit disk through the product
  CHECK(std::abs(numeric_eval(NamedSeries::eq(), 3.0, qq) - 1.0 / qpochhammer_inf(3.0, qq)) < 1e-12);
  try {
    numeric_eval(NamedSeries::eq(), 4.0, qq);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
  CHECK_THROWS_AS(numeric_series_eval(NamedSeries::eq(), 1.5, qq), Error);
  CHECK_THROWS_AS(numeric_eval(NamedSeries::logq(), 1.0, qq), Error);
  // entire series are fine anywhere
  CHECK(std::abs(numeric_series_eval(NamedSeries::big_eq(), 3.0, qq) - qpochhammer_inf(-3.0, qq)) < 1e-12);
  auto phi = NamedSeries::phi10(ScalarQ::q_power(2));
  CHECK(std::abs(numeric_eval(phi, 0.3, qq) - numeric_series_eval(phi, 0.3, qq)) < 1e-13);
  CHECK(std::abs(numeric_eval(phi, 0.3, qq) - 1.0 / ((1 - 0.3) * (1 - 0.15))) < 1e-13);
}

TEST_CASE("exact and numeric series agree") {
  double qq = 0.37;
  auto ex = series_of(NamedSeries::phi10(q().pow(2) + ScalarQ(3)), 12, X);
  auto nu = series_of(NamedSeries::phi10(q().pow(2) + ScalarQ(3)), 12, QMode::numeric(qq));
  for (int k = 0; k <= 12; ++k) CHECK(std::abs(ex[k].evaluate(qq) - nu[k].evaluate(qq)) < 1e-12 * (1 + std::abs(nu[k].evaluate(qq))));
}

TEST_CASE("limits as q tends to 1") {
  std::vector<double> qs{0.9, 0.99, 0.999};
  auto r = limit_check_q1("eq", 1.0, qs);
  CHECK(r.monotone);
  CHECK(r.pass);
  CHECK(r.deviations.back() < 1e-2);
  auto b = limit_check_q1("bigEq", 1.0, qs);
  CHECK(b.pass);
  auto l0 = limit_check_q1("logq", 0.0, qs);
  for (double d : l0.deviations) CHECK(d == 0.0);
  CHECK(limit_check_q1("logq", 0.5, qs).pass);
  auto li = limit_check_q1("li2q", 0.5, qs);
  CHECK(li.pass);
  double li2half = M_PI * M_PI / 12 - std::log(2.0) * std::log(2.0) / 2;
  CHECK(std::abs(classical_li2(0.5) - li2half) < 1e-14);
  CHECK_THROWS_AS(limit_check_q1("nope", 0.5, qs), Error);
}

TEST_CASE("hybrid formulas") {
  auto rep = hybrid_identities(0.5, {-0.5, -0.25, 0.0, 0.25, 0.5});
  for (const auto& e : rep.entries) CHECK_MESSAGE(e.pass, e.id << " residual " << e.max_residual);
  CHECK(rep.entries.size() == 7);
  auto a = hybrid_identities(0.2, {0.1, 0.45});
  CHECK(a.pass());

  auto d = phi10_a_derivative(8, ScalarQ(1), X);
  for (int k = 1; k <= 8; ++k) CHECK(-d[k] == (ScalarQ(1) - q().pow(k)).inverse());
  CHECK(d[0].is_zero());
}

TEST_CASE("chain rule range and its failing reversal") {
  auto s = chain_rule_scan(0.5, 0.0, 2.0, 40);
  CHECK(s.all_pass);
  auto wide = chain_rule_scan(0.5, -1.99, 6.0, 80);
  CHECK(!wide.all_pass);
  CHECK(wide.valid_lo < 0.0);
  CHECK(wide.valid_hi > 5.0);
  CHECK(reversed_chain_rule_residual(0.5, 0.4) > 1e-3);
}

TEST_CASE("terminating tail sum behind the logarithm functional equation") {
  for (int k = 1; k <= 6; ++k)
    for (double y : {-0.6, -0.1, 0.3, 0.8}) CHECK(binomial_tail_residual(k, y, 0.5) < 1e-12);
}
