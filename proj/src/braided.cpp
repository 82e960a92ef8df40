#include "qcalc/braided.hpp"

#include <algorithm>
#include <cmath>

#include "qcalc/qfunctions.hpp"
#include "qcalc/qhermite.hpp"

namespace qcalc {

namespace {

const QMode X = QMode::exact();
const Complex I(0, 1);

ScalarQ sign(int k) { return ScalarQ(k % 2 ? -1 : 1); }

/// (l, k) of the normal word y^l x^k.
std::pair<int, int> slots(const AlgebraPtr& alg, const Word& w) {
  char iy = static_cast<char>(alg->index("y"));
  int l = static_cast<int>(std::count(w.begin(), w.end(), iy));
  return {l, static_cast<int>(w.size()) - l};
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// ((1-q) D_q)^j f / (q;q)_j for j = 0..j_max, exactly.
std::vector<RealFn> scaled_derivatives(QGaussian w, int m, int j_max, double q) {
  std::vector<RealFn> out;
  auto d = GaussianTimesPoly::monomial(w, m);
  ScalarQ c = ScalarQ(1) - ScalarQ::q_power(1);
  for (int j = 0; j <= j_max; ++j) {
    out.push_back(d.scaled(c.pow(j) / qfactorial(j, X)).at(q));
    d = d.qderiv(X);
  }
  return out;
}

Complex realline(const RealFn& f, double gamma, double q, const JacksonConfig& cfg) {
  return jackson_realline(f, gamma, q, cfg).value;
}

Complex series_at(const std::vector<Complex>& c, double x) {
  Complex r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

void finish(CovarianceReport& r, const std::vector<Complex>& unbraided) {
  for (size_t j = 0; j < r.lhs.size(); ++j) {
    r.coefficient_error = std::max(r.coefficient_error, rel_err(r.lhs[j], r.rhs[j]));
    r.unbraided_error = std::max(r.unbraided_error, rel_err(unbraided[j], r.rhs[j]));
  }
}

}  // namespace

TensorElement tensor_basis(int l, int k, int trunc, const QMode& mode) {
  auto alg = algebras::qplane(mode);
  Word w(l, static_cast<char>(alg->index("y")));
  w.append(k, static_cast<char>(alg->index("x")));
  return NCElement::from_word(alg, trunc, w);
}

ScalarQ tensor_coeff(const TensorElement& t, int l, int k) {
  const auto& alg = t.algebra();
  Word w(l, static_cast<char>(alg->index("y")));
  w.append(k, static_cast<char>(alg->index("x")));
  return t.coeff(w);
}

TensorElement braiding(int k, int l, int trunc, const QMode& mode) {
  return q_of(mode).pow(static_cast<long long>(k) * l) * tensor_basis(l, k, trunc, mode);
}

TensorElement braid(const TensorElement& t) {
  const QMode& mode = t.algebra()->mode();
  NCElement r(t.algebra(), t.trunc());
  for (const auto& [w, c] : t.terms()) {
    auto [l, k] = slots(t.algebra(), w);
    r += c * braiding(l, k, t.trunc(), mode);
  }
  return r;
}

TensorElement braided_tensor_mul(const TensorElement& a, const TensorElement& b) { return a * b; }

TensorElement tensor_mul_rule(int k1, int k2, int l1, int l2, int trunc, const QMode& mode) {
  return q_of(mode).pow(static_cast<long long>(k2) * l1) * tensor_basis(k1 + l1, k2 + l2, trunc, mode);
}

TensorElement coproduct(const BraidedPoly& f) {
  auto alg = algebras::qplane(X);
  int t = f.trunc();
  return compose_series(f, NCElement::gen(alg, t, "y") + NCElement::gen(alg, t, "x"));
}

ScalarQ counit(const BraidedPoly& f) { return f[0]; }

BraidedPoly antipode(const BraidedPoly& f) {
  std::vector<ScalarQ> c(f.trunc() + 1, ScalarQ(0));
  ScalarQ q = ScalarQ::q_power(1);
  for (int n = 0; n <= f.trunc(); ++n)
    if (!f[n].is_zero()) c[n] = sign(n) * q.pow(1LL * n * (n - 1) / 2) * f[n];
  return PowerSeries(f.trunc(), std::move(c), f.is_polynomial());
}

BraidedPoly multiply(const TensorElement& t) {
  std::vector<ScalarQ> c(t.trunc() + 1, ScalarQ(0));
  for (const auto& [w, v] : t.terms()) c[w.size()] += v;
  return PowerSeries(t.trunc(), std::move(c), true);
}

LinearMap identity_map(const QMode&) {
  return [](int n, int trunc) { return PowerSeries::monomial(trunc, n); };
}

LinearMap antipode_map(const QMode& mode) {
  ScalarQ q = q_of(mode);
  return [q](int n, int trunc) {
    return PowerSeries::monomial(trunc, n, sign(n) * q.pow(1LL * n * (n - 1) / 2));
  };
}

LinearMap counit_map(const QMode&) {
  return [](int n, int trunc) { return PowerSeries::constant(trunc, ScalarQ(n == 0 ? 1 : 0)); };
}

TensorElement tensor_map(const TensorElement& t, const LinearMap& a, const LinearMap& b) {
  const QMode& mode = t.algebra()->mode();
  int T = t.trunc();
  NCElement r(t.algebra(), T);
  for (const auto& [w, c] : t.terms()) {
    auto [l, k] = slots(t.algebra(), w);
    auto fa = a(l, T), fb = b(k, T);
    for (int i = 0; i <= T; ++i) {
      if (fa[i].is_zero()) continue;
      for (int j = 0; i + j <= T; ++j)
        if (!fb[j].is_zero()) r += (c * fa[i] * fb[j]) * tensor_basis(i, j, T, mode);
    }
  }
  return r;
}

NCElement triple_basis(int a, int b, int c, int trunc, const QMode& mode) {
  auto alg = algebras::skew(3, mode);
  Word w(a, 0);
  w.append(b, 1);
  w.append(c, 2);
  return NCElement::from_word(alg, trunc, w);
}

bool HopfReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

HopfReport hopf_axiom_check(int n_max) {
  HopfReport r;
  r.n_max = n_max;
  int T = n_max;
  ScalarQ q = ScalarQ::q_power(1);
  auto add = [&](const std::string& a, int n, bool ok) { r.checks.push_back({a, n, ok}); };
  auto S = antipode_map(X), id = identity_map(X), eps = counit_map(X);
  auto tri = algebras::skew(3, X);
  NCElement sum3 = NCElement::gen(tri, T, "g1") + NCElement::gen(tri, T, "g2") + NCElement::gen(tri, T, "g3");
  for (int n = 0; n <= n_max; ++n) {
    auto xn = PowerSeries::monomial(T, n);
    auto d = coproduct(xn);
    NCElement left(tri, T), right(tri, T);
    for (const auto& [w, c] : d.terms()) {
      auto [l, k] = slots(d.algebra(), w);
      for (int i = 0; i <= l; ++i) left += (c * qbinomial(l, i, X)) * triple_basis(l - i, i, k, T);
      for (int j = 0; j <= k; ++j) right += (c * qbinomial(k, j, X)) * triple_basis(l, k - j, j, T);
    }
    add("coassociativity", n, left == right && left == sum3.pow(n));
    add("counit-left", n, multiply(tensor_map(d, eps, id)) == xn);
    add("counit-right", n, multiply(tensor_map(d, id, eps)) == xn);
    auto unit = PowerSeries::constant(T, counit(xn));
    add("antipode-left", n, multiply(tensor_map(d, S, id)) == unit);
    add("antipode-right", n, multiply(tensor_map(d, id, S)) == unit);
    PowerSeries rec(T);
    for (int k = 0; k <= n; ++k) rec = rec + qbinomial(n, k, X) * antipode(PowerSeries::monomial(T, k)).shift_up(n - k).with_trunc(T);
    add("antipode-recurrence", n, rec == unit);
    bool anti = true, hom = true;
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      anti = anti && antipode(PowerSeries::monomial(T, n)) == multiply(tensor_map(braid(tensor_basis(a, b, T)), S, S));
      hom = hom && coproduct(PowerSeries::monomial(T, n)) == coproduct(PowerSeries::monomial(T, a)) *
                                                                 coproduct(PowerSeries::monomial(T, b));
    }
    add("antipode-antimultiplicative", n, anti);
    add("coproduct-of-antipode", n, coproduct(antipode(xn)) == tensor_map(braid(d), S, S));
    add("coproduct-homomorphism", n, hom);
    add("counit-antipode", n, counit(antipode(xn)) == counit(xn));
    add("braiding-twice", n, [&] {
      for (int a = 0; a <= n; ++a)
        if (!(braid(braid(tensor_basis(a, n - a, T))) == q.pow(2LL * a * (n - a)) * tensor_basis(a, n - a, T)))
          return false;
      return true;
    }());
  }
  // tensor rules on low exponents
  int E = std::min(n_max, 4);
  bool rule = true, assoc = true, triple = true;
  for (int k1 = 0; k1 <= E; ++k1)
    for (int k2 = 0; k2 <= E; ++k2)
      for (int l1 = 0; l1 <= E; ++l1)
        for (int l2 = 0; l2 <= E; ++l2) {
          int t = k1 + k2 + l1 + l2;
          rule = rule && tensor_basis(k1, k2, t) * tensor_basis(l1, l2, t) == tensor_mul_rule(k1, k2, l1, l2, t);
          for (int m1 = 0; m1 <= 2; ++m1) {
            int m2 = (k1 + l2 + m1) % 3, t3 = t + m1 + m2;
            auto a = tensor_basis(k1, k2, t3), b = tensor_basis(l1, l2, t3), c = tensor_basis(m1, m2, t3);
            assoc = assoc && braided_tensor_mul(braided_tensor_mul(a, b), c) ==
                                 braided_tensor_mul(a, braided_tensor_mul(b, c));
          }
          int k3 = (k1 + l2) % 3, l3 = (k2 + l1) % 3;
          int tt = t + k3 + l3;
          long long e = 1LL * k2 * l1 + 1LL * k3 * l1 + 1LL * k3 * l2;
          triple = triple && triple_basis(k1, k2, k3, tt) * triple_basis(l1, l2, l3, tt) ==
                                 q.pow(e) * triple_basis(k1 + l1, k2 + l2, k3 + l3, tt);
        }
  add("tensor-product-rule", E, rule);
  add("tensor-associativity", E, assoc);
  add("triple-tensor-rule", E, triple);
  add("antipode-unit", 0, antipode(PowerSeries::constant(T, ScalarQ(1))) == PowerSeries::constant(T, ScalarQ(1)));
  return r;
}

HermiteCoproductReport hermite_coproduct_check(int n) {
  HermiteCoproductReport r;
  r.n = n;
  auto h = hermite(HermiteFamily::I, n);
  auto d = coproduct(h.as_series(n));
  NCElement rhs(d.algebra(), n);
  for (int k = 0; k <= n; ++k) {
    auto hk = hermite(HermiteFamily::I, k);
    for (int j = 0; j <= k; ++j)
      if (!hk.coeffs[j].is_zero()) rhs += (qbinomial(n, k, X) * hk.coeffs[j]) * tensor_basis(n - k, j, n);
  }
  r.coproduct_ok = d == rhs;
  r.collapsed = multiply(tensor_map(d, antipode_map(X), identity_map(X)));
  r.collapse_ok = r.collapsed == PowerSeries::constant(n, h(ScalarQ(0)));
  return r;
}

ExponentialReport exponential_check(int trunc) {
  ExponentialReport r;
  r.trunc = trunc;
  auto e = series_of(NamedSeries::eq(), trunc, X);
  auto alg = algebras::qplane(X);
  auto ee = compose_series(e, NCElement::gen(alg, trunc, "y")) * compose_series(e, NCElement::gen(alg, trunc, "x"));
  r.coproduct_ok = coproduct(e) == ee;
  r.counit_ok = counit(e) == ScalarQ(1);
  auto s = antipode(e);
  r.antipode_ok = s == series_of(NamedSeries::big_eq(), trunc, X).dilate(ScalarQ(-1));
  r.inverse_ok = s * e == PowerSeries::constant(trunc, ScalarQ(1));
  return r;
}

CovarianceReport fourier_covariance(QGaussian weight, int m, double y, double gamma, double q, int j_max,
                                    const JacksonConfig& cfg, double tol) {
  CovarianceReport r;
  r.kind = "fourier";
  r.j_max = j_max;
  r.tol = tol;
  auto fj = scaled_derivatives(weight, m, j_max, q);
  auto kernel = [q](double t, double yy) { return numeric_eval(NamedSeries::eq(), -I * t * yy, q); };
  auto transform = [&](const RealFn& f, double yy) {
    return realline([&](double t) {
      Complex v = f(t);
      return v == 0.0 ? v : kernel(t, yy) * v;
    }, gamma, q, cfg);
  };
  Complex F = transform(fj[0], y);
  std::vector<Complex> unbraided;
  for (int j = 0; j <= j_max; ++j) {
    r.lhs.push_back(transform(fj[j], std::pow(q, j) * y));
    unbraided.push_back(transform(fj[j], y));
    r.rhs.push_back(F * std::pow(I * y, j) * std::pow(q, j * (j - 1) / 2.0) / qfactorial(j, X).evaluate(q).real());
  }
  finish(r, unbraided);
  for (int k = 0; k <= 8; ++k)
    for (int s : {1, -1}) {
      double x = s * std::pow(q, k);
      Complex full = F * numeric_eval(NamedSeries::big_eq(), I * x * y, q);
      r.sampled_error = std::max(r.sampled_error, rel_err(series_at(r.lhs, x), full));
    }
  r.pass = r.coefficient_error <= tol && r.sampled_error <= tol;
  return r;
}

CovarianceReport convolution_covariance(QGaussian wf, int m, QGaussian wg, int p, double gamma, double q, int j_max,
                                        const JacksonConfig& cfg, double tol) {
  CovarianceReport r;
  r.kind = "convolution";
  r.j_max = j_max;
  r.tol = tol;
  auto fj = scaled_derivatives(wf, m, j_max, q);
  auto gj = scaled_derivatives(wg, p, j_max, q);
  auto pair = [&](const RealFn& a, const RealFn& b) {
    return realline([&](double t) {
      Complex v = b(t);
      return v == 0.0 ? v : a(t) * v;
    }, gamma, q, cfg);
  };
  std::vector<Complex> unbraided;
  for (int j = 0; j <= j_max; ++j) {
    double qj = std::pow(q, j);
    RealFn g = gj[0];
    RealFn shifted = [g, qj](double t) { return g(qj * t); };
    r.lhs.push_back(pair(shifted, fj[j]));
    unbraided.push_back(pair(g, fj[j]));
    r.rhs.push_back((j % 2 ? -1.0 : 1.0) * std::pow(q, j * (j - 1) / 2.0) * pair(gj[j], fj[0]));
  }
  finish(r, unbraided);
  for (int k = 0; k <= 8; ++k)
    for (int s : {1, -1}) {
      double x = s * std::pow(q, k);
      r.sampled_error = std::max(r.sampled_error, rel_err(series_at(r.lhs, x), series_at(r.rhs, x)));
    }
  r.pass = r.coefficient_error <= tol && r.sampled_error <= tol;
  return r;
}

}  // namespace qcalc
