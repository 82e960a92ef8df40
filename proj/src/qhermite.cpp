#include "qcalc/qhermite.hpp"

#include <algorithm>
#include <cmath>

#include "qcalc/qfunctions.hpp"

namespace qcalc {

namespace {

const QMode X = QMode::exact();

ScalarQ q1() { return ScalarQ::q_power(1); }
ScalarQ sign(int k) { return ScalarQ(k % 2 ? -1 : 1); }
ScalarQ qpoch(const ScalarQ& a, int k, const ScalarQ& base) { return qshifted_factorial(a, k, base); }
ScalarQ q2fact(int k) { return qpoch(q1().pow(2), k, q1().pow(2)); }

void strip(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool poly_eq(QPoly a, QPoly b) {
  strip(a);
  strip(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

QPoly padd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), ScalarQ(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

QPoly pscale(const ScalarQ& c, QPoly a) {
  for (auto& x : a) x = c * x;
  return a;
}

QPoly pshift(const QPoly& a, int k) {
  QPoly r(k, ScalarQ(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, ScalarQ(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly constant(const ScalarQ& c) { return {c}; }

/// (q;q^2)_n.
ScalarQ odd_poch(int n) { return qpoch(q1(), n, q1().pow(2)); }

}  // namespace

ScalarQ QHermitePoly::operator()(const ScalarQ& x) const {
  ScalarQ r(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

PowerSeries QHermitePoly::as_series(int trunc) const {
  int t = std::max(trunc, n);
  QPoly c = coeffs;
  c.resize(t + 1, ScalarQ(0));
  return PowerSeries(t, c, true).with_trunc(trunc);
}

std::string QHermitePoly::to_string() const {
  std::vector<std::pair<ScalarQ, std::string>> terms;
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    if (coeffs[j].is_zero()) continue;
    terms.emplace_back(coeffs[j], j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j));
  }
  return render_terms(terms);
}

QHermitePoly hermite(HermiteFamily family, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  QHermitePoly h{family, n, QPoly(n + 1, ScalarQ(0))};
  ScalarQ q = q1(), qn = qfactorial(n, X);
  for (int k = 0; 2 * k <= n; ++k) {
    long long e = family == HermiteFamily::I ? 1LL * k * (k - 1) : -2LL * n * k + 1LL * k * (2 * k + 1);
    h.coeffs[n - 2 * k] = qn * sign(k) * q.pow(e) / (q2fact(k) * qfactorial(n - 2 * k, X));
  }
  return h;
}

GaussQ GaussQ::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {ScalarQ(1), ScalarQ(0)};
    case 1: return {ScalarQ(0), ScalarQ(1)};
    case 2: return {ScalarQ(-1), ScalarQ(0)};
    default: return {ScalarQ(0), ScalarQ(-1)};
  }
}

bool StructuralReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

bool check_recurrence(HermiteFamily family, int n) {
  ScalarQ q = q1();
  QPoly next = pshift(hermite(family, n).coeffs, 1);
  if (n >= 1) {
    ScalarQ c = (family == HermiteFamily::I ? q.pow(n - 1) : q.pow(1 - 2 * n)) * (ScalarQ(1) - q.pow(n));
    next = padd(next, pscale(-c, hermite(family, n - 1).coeffs));
  }
  return poly_eq(next, hermite(family, n + 1).coeffs);
}

bool check_generating_function(HermiteFamily family, int n_max) {
  bool one = family == HermiteFamily::I;
  auto gauss = series_of(one ? NamedSeries::gauss_big_g() : NamedSeries::gauss_g(), n_max, X);
  auto expo = series_of(one ? NamedSeries::eq() : NamedSeries::big_eq(), n_max, X);
  for (int n = 0; n <= n_max; ++n) {
    QPoly lhs(n + 1, ScalarQ(0));
    for (int j = 0; j <= n; ++j) lhs[j] = gauss[n - j] * expo[j];
    ScalarQ c = qfactorial(n, X).inverse();
    if (!one) c = c * q1().pow(1LL * n * (n - 1) / 2);
    if (!poly_eq(lhs, pscale(c, hermite(family, n).coeffs))) return false;
  }
  return true;
}

bool check_monomial_expansion(HermiteFamily family, int n) {
  QPoly sum;
  ScalarQ q = q1();
  for (int k = 0; 2 * k <= n; ++k) {
    ScalarQ c = qfactorial(n, X) / (q2fact(k) * qfactorial(n - 2 * k, X));
    if (family == HermiteFamily::II) c = c * q.pow(-2LL * n * k + 3LL * k * k);
    sum = padd(sum, pscale(c, hermite(family, n - 2 * k).coeffs));
  }
  return poly_eq(sum, pshift(constant(ScalarQ(1)), n));
}

bool check_alternating_sum(HermiteFamily family, int m) {
  ScalarQ q = q1();
  QPoly sum;
  for (int k = 0; k <= m; ++k) {
    ScalarQ c = qpoch(q.pow(-m), k, q) / qfactorial(k, X) * q.pow(family == HermiteFamily::I ? k : 1LL * m * k);
    sum = padd(sum, pscale(c, pshift(hermite(family, k).coeffs, m - k)));
  }
  QPoly expected;
  if (m % 2 == 0) {
    int n = m / 2;
    ScalarQ v = sign(n) * odd_poch(n);
    if (family == HermiteFamily::I) v = v * q.pow(-1LL * n * n);
    expected = constant(v);
  }
  return poly_eq(sum, expected);
}

bool check_special_value(HermiteFamily family, int n) {
  ScalarQ q = q1();
  ScalarQ e = family == HermiteFamily::I ? q.pow(1LL * n * (n - 1)) : q.pow(n - 2LL * n * n);
  ScalarQ expected = sign(n) * e * odd_poch(n);
  return hermite(family, 2 * n)(ScalarQ(0)) == expected && hermite(family, 2 * n + 1)(ScalarQ(0)).is_zero();
}

bool check_duality(int n) {
  auto h = hermite(HermiteFamily::I, n), ht = hermite(HermiteFamily::II, n);
  for (int j = 0; j <= n; ++j) {
    GaussQ lhs = GaussQ(h.coeffs[j].invert_q()) * GaussQ::i_power(j);
    GaussQ rhs = GaussQ::i_power(n) * GaussQ(ht.coeffs[j]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

PowerSeries hermite_weight_series(HermiteFamily family, int trunc) {
  ScalarQ q2 = q1().pow(2);
  if (family == HermiteFamily::I)
    return big_exp_series(trunc, q2).compose(PowerSeries(trunc, {ScalarQ(0), ScalarQ(0), -q2}, true));
  return small_exp_series(trunc, q2).compose(PowerSeries(trunc, {ScalarQ(0), ScalarQ(0), ScalarQ(-1)}, true));
}

bool check_lowering(HermiteFamily family, int n, int trunc) {
  ScalarQ q = q1();
  bool one = family == HermiteFamily::I;
  auto w = hermite_weight_series(family, trunc);
  auto f = hermite(family, n).as_series(trunc) * w;
  auto lhs = (ScalarQ(1) - q) * qderiv(f, X, one ? QDirection::Forward : QDirection::Backward);
  auto rhs = (one ? -q.pow(-n) : -q.pow(n)) * (hermite(family, n + 1).as_series(trunc) * w).with_trunc(trunc - 1);
  return lhs == rhs;
}

bool check_rodrigues(HermiteFamily family, int n, int trunc) {
  if (trunc < n) throw Error(ErrorKind::InvalidArgument, "truncation below the degree");
  ScalarQ q = q1(), q2 = q.pow(2);
  bool one = family == HermiteFamily::I;
  auto d = hermite_weight_series(family, trunc);
  for (int k = 0; k < n; ++k) d = qderiv(d, X, one ? QDirection::Forward : QDirection::Backward);
  int t = trunc - n;
  PowerSeries inv = one ? small_exp_series(t, q2).compose(PowerSeries(t, {ScalarQ(0), ScalarQ(0), q2}, true))
                        : big_exp_series(t, q2).compose(PowerSeries(t, {ScalarQ(0), ScalarQ(0), ScalarQ(1)}, true));
  ScalarQ c = sign(n) * q.pow((one ? 1LL : -1LL) * n * (n - 1) / 2) * (ScalarQ(1) - q).pow(n);
  return c * (inv * d) == hermite(family, n).as_series(t);
}

StructuralReport structural_checks(HermiteFamily family, int n_max) {
  StructuralReport r;
  r.family = family;
  r.n_max = n_max;
  bool one = family == HermiteFamily::I;
  auto add = [&](const std::string& id, int n, bool ok) { r.checks.push_back({id, n, ok}); };
  add(one ? "eq138" : "eq141", n_max, check_generating_function(family, n_max));
  for (int n = 0; n <= n_max; ++n) {
    add("recurrence", n, check_recurrence(family, n));
    add(one ? "eq137" : "eq144", n, check_monomial_expansion(family, n));
    add(one ? "eq77" : "eq145", n, check_alternating_sum(family, n));
    if (2 * n <= n_max) add(one ? "eq174" : "eq169", n, check_special_value(family, n));
    add(one ? "eq155" : "eq156", n, check_lowering(family, n, n_max + 2));
    add(one ? "eq160" : "eq161", n, check_rodrigues(family, n, n_max + 2));
    if (one) add("eq142", n, check_duality(n));
  }
  return r;
}

RealFn hermite_weight(HermiteFamily family, double q) {
  if (family == HermiteFamily::I)
    return [q](double x) { return numeric_eval(NamedSeries::gauss_big_g(), q * x, q); };
  return [q](double x) { return numeric_eval(NamedSeries::gauss_g(), x, q); };
}

double hermite_norm(HermiteFamily family, int n, double q, double gamma) {
  double qn = qfactorial(n, X).evaluate(q).real();
  if (family == HermiteFamily::I) return b_q(q) * std::pow(q, n * (n - 1) / 2.0) * qn;
  return c_q(q, gamma) * std::pow(q, -1.0 * n * n) * qn;
}

namespace {

/// W_I or W_II at a high-precision point.
mpf_class precise_weight(HermiteFamily family, const mpf_class& x, const mpf_class& q) {
  const int bits = PrecisePoly::kBits;
  mpf_class x2(x * x, bits), q2(q * q, bits), w(1, bits), eps(1, bits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits - 16);
  mpf_class f(family == HermiteFamily::I ? q2 * x2 : x2, bits);
  for (int j = 0; j < 100000; ++j) {
    w *= family == HermiteFamily::I ? mpf_class(1 - f, bits) : mpf_class(1 + f, bits);
    if (abs(f) < eps) break;
    f *= q2;
  }
  return family == HermiteFamily::I ? w : mpf_class(1 / w, bits);
}

/// sum over k in [k0, inf) of q^k (p w)(+-gamma q^k), stopped once three terms in a row fall below 1e-30 of the largest.
mpf_class precise_half_sum(HermiteFamily family, const PrecisePoly& p, const mpf_class& gamma, const mpf_class& q,
                           int k0, int dir) {
  const int bits = PrecisePoly::kBits;
  mpf_class sum(0, bits), big(0, bits), x(gamma, bits);
  mpf_class step(dir > 0 ? q : mpf_class(1 / q, bits), bits);
  mpf_pow_ui(x.get_mpf_t(), q.get_mpf_t(), static_cast<unsigned long>(std::abs(k0)));
  if (k0 < 0) x = 1 / x;
  x *= gamma;
  int small = 0;
  for (int i = 0; i < 20000; ++i) {
    mpf_class t(x * (p.real_at(x) * precise_weight(family, x, q) + p.real_at(-x) * precise_weight(family, -x, q)),
                bits);
    sum += t;
    if (abs(t) > big) big = abs(t);
    small = abs(t) <= big * 1e-30 ? small + 1 : 0;
    if (small >= 3) return sum;
    x *= step;
  }
  throw Error(ErrorKind::TailNotConverged, "orthogonality sum did not settle");
}

}  // namespace

OrthogonalityReport orthogonality_numeric(HermiteFamily family, int m, int n, double q, double gamma,
                                          const JacksonConfig&, double tol) {
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::InvalidArgument, "orthogonality needs 0 < q < 1");
  if (!(gamma > 0)) throw Error(ErrorKind::InvalidArgument, "lattice anchor must be positive");
  OrthogonalityReport r{family, m, n, q, gamma};
  r.tol = tol;
  const int bits = PrecisePoly::kBits;
  PrecisePoly p(pmul(hermite(family, m).coeffs, hermite(family, n).coeffs), q);
  mpf_class qq(q, bits), g(family == HermiteFamily::I ? 1.0 : gamma, bits);
  mpf_class sum = precise_half_sum(family, p, g, qq, 0, 1);
  if (family == HermiteFamily::II) sum += precise_half_sum(family, p, g, qq, -1, -1);
  r.value = mpf_class((1 - qq) * sum, bits).get_d();
  r.expected = m == n ? hermite_norm(family, n, q, gamma) : 0.0;
  double scale = std::sqrt(hermite_norm(family, m, q, gamma) * hermite_norm(family, n, q, gamma));
  r.pass = std::abs(r.value - r.expected) <= tol * scale;
  return r;
}

TransformReport transform_integrals(int kind, int n, const std::vector<double>& ts, double q, double gamma,
                                    const JacksonConfig& cfg, double tol) {
  if (kind != 140 && kind != 146 && kind != 148 && kind != 149)
    throw Error(ErrorKind::UnknownIdentity, "no transform integral " + std::to_string(kind));
  TransformReport r;
  r.kind = kind;
  r.n = n;
  r.ts = ts;
  r.tol = tol;
  bool finite = kind == 140 || kind == 148;
  const Complex I(0, 1);
  QPoly mono(n + 1, ScalarQ(0));
  mono[n] = ScalarQ(1);
  QPoly integrand_poly = kind == 140 ? hermite(HermiteFamily::I, n).coeffs
                         : kind == 146 ? hermite(HermiteFamily::II, n).coeffs
                                       : mono;
  PrecisePoly p(integrand_poly, q);
  auto w = hermite_weight(finite ? HermiteFamily::I : HermiteFamily::II, q);
  auto small = hermite_weight(HermiteFamily::II, q), big = hermite_weight(HermiteFamily::I, q);
  Complex in = std::pow(I, n);
  for (double t : ts) {
    RealFn f = [&](double x) {
      Complex k = finite ? numeric_eval(NamedSeries::eq(), -I * x * t, q) : numeric_eval(NamedSeries::big_eq(), I * q * x * t, q);
      Complex v = p(x);
      if (v == 0.0) return Complex(0.0);
      return k * v * w(x);
    };
    Complex lhs = finite ? jackson_interval(f, -1.0, 1.0, q, cfg) : jackson_realline(f, gamma, q, cfg).value;
    Complex rhs;
    switch (kind) {
      case 140: rhs = b_q(q) * std::pow(q, n * (n - 1) / 2.0) / in * std::pow(t, n) * small(t); break;
      case 146: rhs = c_q(q, gamma) * std::pow(q, -n * (n - 1) / 2.0) * in * std::pow(t, n) * big(t); break;
      case 148:
        rhs = b_q(q) * std::pow(q, n * (n - 1) / 2.0) / in * hermite(HermiteFamily::II, n).at(q)(t) * small(t);
        break;
      default:
        rhs = c_q(q, gamma) * std::pow(q, -n * (n - 1) / 2.0) * in * hermite(HermiteFamily::I, n).at(q)(t) * big(t);
    }
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.max_error = std::max(r.max_error, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  r.pass = r.max_error <= tol;
  return r;
}

NCIdentityReport addition_formula(int n) {
  auto alg = algebras::qplane(X);
  auto x = NCElement::gen(alg, n, "x"), y = NCElement::gen(alg, n, "y");
  NCIdentityReport r{n, compose_series(hermite(HermiteFamily::I, n).as_series(n), x + y), NCElement(alg, n)};
  for (int k = 0; k <= n; ++k)
    r.rhs += qbinomial(n, k, X) * (y.pow(n - k) * compose_series(hermite(HermiteFamily::I, k).as_series(n), x));
  r.pass = r.lhs == r.rhs;
  return r;
}

RescalingReport rescaling_identity(int n) {
  auto alg = algebras::lambda_mu(X);
  auto lam = NCElement::gen(alg, n, "lambda"), mu = NCElement::gen(alg, n, "mu");
  RescalingReport r;
  r.n = n;
  r.lhs.assign(n + 1, NCElement(alg, n));
  r.rhs.assign(n + 1, NCElement(alg, n));
  ScalarQ q = q1();
  for (int k = 0; 2 * k <= n; ++k) {
    ScalarQ c = sign(k) * q.pow(1LL * k * (k - 1)) / (qfactorial(n - 2 * k, X) * q2fact(k));
    r.lhs[n - 2 * k] += c * (lam.pow(n - 2 * k) * (lam.pow(2) + mu.pow(2)).pow(k));
    auto h = hermite(HermiteFamily::I, n - 2 * k);
    auto word = lam.pow(n - 2 * k) * mu.pow(2 * k);
    for (int j = 0; j <= n - 2 * k; ++j)
      if (!h.coeffs[j].is_zero()) r.rhs[j] += (c * h.coeffs[j]) * word;
  }
  r.pass = true;
  for (int j = 0; j <= n; ++j)
    if (!(r.lhs[j] == r.rhs[j])) r.pass = false;
  return r;
}

}  // namespace qcalc
