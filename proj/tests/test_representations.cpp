#include <random>

#include "doctest.h"
#include "qcalc/qfunctions.hpp"
#include "qcalc/representations.hpp"

using namespace qcalc;

namespace {

const QMode X = QMode::exact();
ScalarQ q() { return ScalarQ::q_power(1); }

std::vector<RepSpec> all_reps() {
  return {RepSpec::rep47(), RepSpec::rep48(), RepSpec::rep49(), RepSpec::rep120(q().pow(2)),
          RepSpec::rep120(ScalarQ(BigRational(7, 10)))};
}

NCElement random_qplane(int trunc, int max_deg, std::mt19937& rng) {
  auto alg = algebras::qplane(X);
  std::uniform_int_distribution<int> d(0, max_deg), c(-3, 3), p(0, 2);
  NCElement e(alg, trunc);
  for (int t = 0; t < 4; ++t) {
    int l = d(rng), k = d(rng);
    if (l + k > max_deg) continue;
    Word w(l, static_cast<char>(alg->index("y")));
    w.append(k, static_cast<char>(alg->index("x")));
    e += NCElement::from_word(alg, trunc, w, ScalarQ(c(rng)) * q().pow(p(rng)));
  }
  return e;
}

PowerSeries random_poly(int trunc, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<ScalarQ> v(deg + 1);
  for (auto& x : v) x = ScalarQ(c(rng));
  return PowerSeries(trunc, v, true);
}

}  // namespace

TEST_CASE("monomial actions") {
  auto alg = algebras::qplane(X);
  int N = 20;
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l)
      for (int m = 0; m <= 4; ++m) {
        auto w = NCElement::gen(alg, N, "y").pow(l) * NCElement::gen(alg, N, "x").pow(k);
        auto out = act(RepSpec::rep47(), w, PowerSeries::monomial(N, m));
        CHECK(out[k + l + m] == q().pow(k * (k + 1) / 2 + k * m));
        CHECK(out.degree() == k + l + m);
      }
  auto f = PowerSeries(10, {ScalarQ(2), ScalarQ(-1), q()}, true);
  for (const auto& rep : all_reps()) CHECK(act(rep, NCElement::scalar(alg, N, 1), f) == f);
  // (x+y)^n z^m = (-q^{m+1};q)_n z^{m+n}
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto s = (NCElement::gen(alg, N, "x") + NCElement::gen(alg, N, "y")).pow(n);
      auto out = act(RepSpec::rep47(), s, PowerSeries::monomial(N, m));
      CHECK(out[m + n] == qshifted_factorial(-q().pow(m + 1), n, X));
      CHECK(out.degree() == m + n);
    }
  CHECK_THROWS_AS(act(RepSpec::rep47(), NCElement::gen(algebras::qheis(X), N, "x"), f), Error);
}

TEST_CASE("every representation preserves the q-plane relation") {
  for (const auto& rep : all_reps()) {
    auto r = verify_relation(rep, 16);
    CHECK_MESSAGE(r.pass, rep.name());
    CHECK(r.checked == 17);
  }
  // rep47 on 1: both sides q z
  auto one = PowerSeries::monomial(4, 0);
  auto xy = apply_x(RepSpec::rep47(), apply_y(RepSpec::rep47(), one, X), X);
  CHECK(xy[2] == q().pow(2));
  auto rep48 = RepSpec::rep48();
  for (int m = 0; m <= 5; ++m) {
    auto z = PowerSeries::monomial(8, m);
    CHECK(apply_x(rep48, apply_y(rep48, z, X), X)[m + 1] == q().pow(m + 1));
  }
}

TEST_CASE("the action is multiplicative and linear") {
  std::mt19937 rng(5);
  int N = 14;
  for (const auto& rep : all_reps()) {
    for (int t = 0; t < 5; ++t) {
      auto a = random_qplane(N, 3, rng), b = random_qplane(N, 3, rng);
      auto f = random_poly(N, 5, rng), g = random_poly(N, 4, rng);
      CHECK_MESSAGE(act(rep, a * b, f) == act(rep, a, act(rep, b, f)), rep.name());
      CHECK(act(rep, a + b, f) == act(rep, a, f) + act(rep, b, f));
      CHECK(act(rep, a, f + g) == act(rep, a, f) + act(rep, a, g));
    }
  }
}

TEST_CASE("rep120 with gamma a power of q evaluates polynomials in x") {
  auto alg = algebras::qplane(X);
  int N = 12;
  auto x = NCElement::gen(alg, N, "x");
  auto one = NCElement::scalar(alg, N, 1);
  auto p = ScalarQ(3) * x.pow(3) - q() * x + ScalarQ(2) * one;
  for (int j = -2; j <= 2; ++j) {
    ScalarQ gamma = q().pow(j);
    for (int k = 0; k <= 4; ++k) {
      auto out = act(RepSpec::rep120(gamma), p, PowerSeries::monomial(N, k));
      ScalarQ t = gamma * q().pow(k);
      CHECK(out[k] == ScalarQ(3) * t.pow(3) - q() * t + ScalarQ(2));
      CHECK(out.degree() == k);
    }
  }
  CHECK_THROWS_AS(RepSpec::rep120(ScalarQ(0)), Error);
}

TEST_CASE("faithfulness of rep47") {
  auto r0 = faithfulness_check(0);
  CHECK(r0.ranks[0] == 1);
  auto r = faithfulness_check(8);
  CHECK(r.pass);
  CHECK(r.ranks.back() == 9);
  auto r2 = faithfulness_check(2, 3);
  CHECK(r2.ranks[2] == 3);
  // too few evaluation rows cannot separate
  auto thin = faithfulness_check(3, 2);
  CHECK(!thin.pass);
  CHECK(exact_rank({{ScalarQ(1), ScalarQ(2)}, {ScalarQ(2), ScalarQ(4)}}) == 1);
}

TEST_CASE("reductions to commutative identities") {
  auto r1 = reduce_to_commutative("eq3", RepSpec::rep47(), 0, 1);
  CHECK(r1.pass());
  CHECK(r1.lhs[0] == ScalarQ(1) + q());
  auto r = reduce_binomial(3, 2);
  CHECK(r.pass());
  CHECK(r.lhs[0] == qshifted_factorial(-q().pow(3), 3, X));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) CHECK_MESSAGE(reduce_binomial(n, m).pass(), n << "," << m);
  for (int m = 0; m <= 6; ++m) {
    auto e = reduce_exponential(m, 16);
    CHECK_MESSAGE(e.pass(), m);
    CHECK(e.lhs.trunc() == 16);
  }
  CHECK_THROWS_AS(reduce_to_commutative("eq99", RepSpec::rep47(), 0, 3), Error);
}
