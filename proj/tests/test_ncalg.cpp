#include <random>

#include "doctest.h"
#include "qcalc/ncalg.hpp"

using namespace qcalc;

namespace {

const QMode X = QMode::exact();
ScalarQ q() { return ScalarQ::q_power(1); }

PowerSeries small_e(int n) {
  PowerSeries s(n);
  for (int k = 0; k <= n; ++k) s.set(k, qfactorial(k, X).inverse());
  s.mark_polynomial(false);
  return s;
}

PowerSeries big_e(int n) {
  PowerSeries s(n);
  for (int k = 0; k <= n; ++k) s.set(k, q().pow(k * (k - 1) / 2) / qfactorial(k, X));
  s.mark_polynomial(false);
  return s;
}

NCElement random_element(const AlgebraPtr& alg, int trunc, std::mt19937& rng) {
  std::uniform_int_distribution<int> gen(0, alg->size() - 1), len(0, 4), coef(-3, 3), qp(0, 2);
  NCElement e(alg, trunc);
  for (int t = 0; t < 4; ++t) {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<char>(gen(rng)));
    if (alg->degree(w) > 4) continue;
    e += NCElement::from_word(alg, trunc, w, ScalarQ(coef(rng)) * q().pow(qp(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("normal ordering examples") {
  auto qp = algebras::qplane(X);
  auto xy = normal_order(qp, {"x", "y"}, 8);
  CHECK(xy == q() * normal_order(qp, {"y", "x"}, 8));
  CHECK(xy.to_string() == "q*y*x");

  auto qh = algebras::qheis(X);
  auto xxy = normal_order(qh, {"x", "x", "y"}, 8);
  auto expect = q().pow(2) * normal_order(qh, {"y", "x", "x"}, 8) +
                (ScalarQ(1) - q().pow(2)) * normal_order(qh, {"c", "x"}, 8);
  CHECK(xxy == expect);

  auto fr = algebras::free_algebra({"x", "w"}, X);
  auto wx = normal_order(fr, {"x", "w", "x"}, 8);
  CHECK(wx.terms().size() == 1);
  CHECK(wx.coeff(fr->word({"x", "w", "x"})).is_one());
  CHECK_THROWS_AS(normal_order(qp, {"x", "t"}, 8), Error);
}

TEST_CASE("products in the q-plane and q-Heisenberg algebra") {
  auto qp = algebras::qplane(X);
  int N = 12;
  auto x = NCElement::gen(qp, N, "x"), y = NCElement::gen(qp, N, "y");
  auto s = x + y;
  CHECK((s * s).to_string() == "y^2 + (1 + q)*y*x + x^2");
  CHECK(s * NCElement::scalar(qp, N, 1) == s);
  for (int n = 0; n <= 8; ++n) {
    NCElement rhs(qp, N);
    for (int k = 0; k <= n; ++k) rhs += qbinomial(n, k, X) * (y.pow(n - k) * x.pow(k));
    CHECK(s.pow(n) == rhs);
  }
  for (int k = 0; k <= 8; ++k)
    for (int l = 0; l <= 8; ++l) CHECK(x.pow(k) * y.pow(l) == q().pow(k * l) * (y.pow(l) * x.pow(k)));

  auto qh = algebras::qheis(X);
  auto hx = NCElement::gen(qh, N, "x"), hy = NCElement::gen(qh, N, "y"), hc = NCElement::gen(qh, N, "c");
  CHECK(hx * hy - q() * (hy * hx) == (ScalarQ(1) - q()) * hc);
  for (int n = 1; n <= 10; ++n)
    CHECK(hx.pow(n) * hy == q().pow(n) * (hy * hx.pow(n)) + (ScalarQ(1) - q().pow(n)) * (hc * hx.pow(n - 1)));
}

TEST_CASE("Volkov product identity, small n") {
  auto qh = algebras::qheis(X);
  int N = 12;
  auto x = NCElement::gen(qh, N, "x"), y = NCElement::gen(qh, N, "y"), c = NCElement::gen(qh, N, "c");
  auto one = NCElement::scalar(qh, N, 1);
  for (int n = 0; n <= 3; ++n) {
    NCElement lhs = one, lx = one, rhs = one;
    for (int k = 0; k < n; ++k) {
      lhs = lhs * (one - q().pow(k) * y);
      lx = lx * (one - q().pow(k) * x);
      rhs = rhs * (one - q().pow(k) * (x + y - y * x + c) + q().pow(2 * k) * c);
    }
    CHECK(lhs * lx == rhs);
  }
}

TEST_CASE("series composition and inversion") {
  auto qp = algebras::qplane(X);
  int N = 8;
  auto x = NCElement::gen(qp, N, "x"), y = NCElement::gen(qp, N, "y");
  auto ex = compose_series(small_e(N), x + y);
  CHECK(ex == compose_series(small_e(N), y) * compose_series(small_e(N), x));
  PowerSeries ident = PowerSeries::monomial(N, 1);
  CHECK(compose_series(ident, x + y) == x + y);
  CHECK((ex * compose_series(big_e(N), -(x + y))) == NCElement::scalar(qp, N, 1));

  auto one = NCElement::scalar(qp, N, 1);
  NCElement geo(qp, N);
  for (int k = 0; k <= N; ++k) geo += y.pow(k);
  CHECK(nc_invert(one - y) == geo);
  CHECK(nc_invert(compose_series(small_e(N), x)) == compose_series(big_e(N), -x));
  for (int k = 0; k < 4; ++k) {
    auto a = one - q().pow(k) * (x - y * x) - y;
    auto b = nc_invert(a);
    CHECK(a * b == one);
    CHECK(b * a == one);
  }
  CHECK_THROWS_AS(nc_invert(x), Error);
  CHECK_THROWS_AS(compose_series(small_e(N), one + x), Error);
}

TEST_CASE("substitution") {
  auto qp = algebras::qplane(X);
  int N = 10;
  auto x = NCElement::gen(qp, N, "x"), y = NCElement::gen(qp, N, "y");
  std::map<std::string, NCElement> img{{"x", -(y * x)}, {"y", y}};
  auto sx = substitute(x, img);
  CHECK(sx * y == q() * (y * sx));
  std::map<std::string, NCElement> id{{"x", x}, {"y", y}};
  auto e = (x + y).pow(3);
  CHECK(substitute(e, id) == e);
  // (x+y)^n maps to (y - yx)^n = sum [n,k] y^{n-k} (-yx)^k
  auto lhs = substitute((x + y).pow(3), img);
  NCElement rhs(qp, N);
  for (int k = 0; k <= 3; ++k) rhs += qbinomial(3, k, X) * (y.pow(3 - k) * (-(y * x)).pow(k));
  CHECK(lhs == rhs);
  std::map<std::string, NCElement> bad{{"x", y}, {"y", x}};
  try {
    substitute(x, bad);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::RelationViolation);
  }

  auto hz = algebras::qheisz(X);
  auto zx = NCElement::gen(hz, N, "x"), zy = NCElement::gen(hz, N, "y"), zz = NCElement::gen(hz, N, "z");
  auto g98 = algebras::gf98(X);
  std::map<std::string, NCElement> emb{{"x", zx}, {"w", zy * zz}, {"z", zz}};
  CHECK_NOTHROW(substitute(NCElement::gen(g98, N, "x"), emb));
}

TEST_CASE("associativity across built-in algebras") {
  std::mt19937 rng(7);
  std::vector<AlgebraPtr> algs{algebras::qplane(X),  algebras::qheis(X), algebras::qheisz(X),
                               algebras::gf98(X),    algebras::gf103(X), algebras::free_algebra({"x", "w"}, X),
                               algebras::skew(3, X), algebras::lambda_mu(X)};
  for (const auto& alg : algs) {
    for (int t = 0; t < 4; ++t) {
      auto a = random_element(alg, 12, rng), b = random_element(alg, 12, rng), c = random_element(alg, 12, rng);
      CHECK_MESSAGE((a * b) * c == a * (b * c), alg->name());
    }
  }
}

TEST_CASE("normal forms are idempotent and basis words stay distinct") {
  auto g = algebras::gf98(X);
  auto nf = normal_order(g, {"z", "x", "w", "z", "x"}, 10);
  for (const auto& [w, c] : nf.terms()) {
    CHECK(g->is_normal(w));
    auto again = NCElement::from_word(g, 10, w);
    CHECK(again.terms().size() == 1);
    CHECK(again.coeff(w).is_one());
  }
}

TEST_CASE("ansatz expansion") {
  auto r = ansatz_expand(3);
  CHECK(r.degree0.constant_term().is_one());
  CHECK(r.degree1.is_zero());
  CHECK(r.degree2_matches);
  CHECK(r.degree3_in_span);
  CHECK(!r.alpha.is_zero());
  CHECK(!r.beta.is_zero());
}

TEST_CASE("dropped terms are counted") {
  auto qp = algebras::qplane(X);
  auto x = NCElement::gen(qp, 2, "x");
  auto p = x * x * x;
  CHECK(p.is_zero());
  CHECK(p.dropped() > 0);
}

TEST_CASE("confluence of the built-in rewrite systems") {
  auto X = QMode::exact();
  for (const auto& a : {algebras::qplane(X), algebras::qheis(X), algebras::qheisz(X), algebras::gf98(X),
                        algebras::gf103(X), algebras::skew(3, X), algebras::skew(4, X), algebras::lambda_mu(X)}) {
    auto r = confluence_check(*a);
    INFO(a->name());
    CHECK(r.pass());
  }
  CHECK(confluence_check(*algebras::skew(3, X)).overlaps.size() == 1);
  Algebra bad("bad", {"a", "b", "c"}, {1, 1, 1}, X);
  bad.add_rule("c", "b", {{{"b", "c"}, ScalarQ(2)}});
  bad.add_rule("b", "a", {{{"a", "b"}, ScalarQ(1)}});
  bad.add_rule("c", "a", {{{"a", "c"}, ScalarQ(1)}});
  CHECK(confluence_check(bad).pass());
  Algebra bad2("bad2", {"a", "b", "c"}, {1, 1, 1}, X);
  bad2.add_rule("c", "b", {{{"b", "c"}, ScalarQ(1)}, {{"a", "b"}, ScalarQ(1)}});
  bad2.add_rule("b", "a", {{{"a", "b"}, ScalarQ(1)}});
  bad2.add_rule("c", "a", {{{"a", "c"}, ScalarQ(2)}});
  CHECK_FALSE(confluence_check(bad2).pass());
}
