#include "qcalc/qfourier.hpp"

#include <algorithm>
#include <cmath>

#include "qcalc/qfunctions.hpp"

namespace qcalc {

namespace {

const Complex I(0, 1);

Complex kernel_e(Complex z, const TransformConfig& tc) {
  return numeric_eval(NamedSeries::eq(), z, tc.q, 1e-17, tc.pole_tol);
}
Complex kernel_E(Complex z, const TransformConfig& tc) { return numeric_eval(NamedSeries::big_eq(), z, tc.q); }

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Householder least squares for a real m x n system, m >= n.
std::vector<long double> least_squares(std::vector<std::vector<long double>> a, std::vector<long double> b) {
  size_t m = a.size(), n = a[0].size();
  for (size_t j = 0; j < n; ++j) {
    long double norm = 0;
    for (size_t i = j; i < m; ++i) norm += a[i][j] * a[i][j];
    norm = std::sqrt(norm);
    if (norm == 0) throw Error(ErrorKind::InvalidArgument, "rank-deficient fit");
    long double alpha = a[j][j] > 0 ? -norm : norm;
    std::vector<long double> v(m, 0);
    v[j] = a[j][j] - alpha;
    for (size_t i = j + 1; i < m; ++i) v[i] = a[i][j];
    long double vv = 0;
    for (size_t i = j; i < m; ++i) vv += v[i] * v[i];
    if (vv == 0) continue;
    for (size_t c = j; c < n; ++c) {
      long double s = 0;
      for (size_t i = j; i < m; ++i) s += v[i] * a[i][c];
      s = 2 * s / vv;
      for (size_t i = j; i < m; ++i) a[i][c] -= s * v[i];
    }
    long double s = 0;
    for (size_t i = j; i < m; ++i) s += v[i] * b[i];
    s = 2 * s / vv;
    for (size_t i = j; i < m; ++i) b[i] -= s * v[i];
  }
  std::vector<long double> x(n, 0);
  for (size_t j = n; j-- > 0;) {
    long double s = b[j];
    for (size_t c = j + 1; c < n; ++c) s -= a[j][c] * x[c];
    x[j] = s / a[j][j];
  }
  return x;
}

RealFn poly_times(const PrecisePoly& p, RealFn w) {
  return [p, w](double x) {
    Complex v = p(x);
    if (v == 0.0) return v;
    return v * w(x);
  };
}

}  // namespace

std::vector<Complex> fq_transform(const RealFn& f, const std::vector<Complex>& ys, const TransformConfig& tc) {
  std::vector<Complex> out;
  double b = b_q(tc.q);
  for (Complex y : ys) {
    RealFn k = [&](double x) {
      Complex v = f(x);
      if (v == 0.0) return v;
      return kernel_e(-I * x * y, tc) * v;
    };
    out.push_back(jackson_interval(k, -1.0, 1.0, tc.q, tc.cfg) / b);
  }
  return out;
}

std::vector<Complex> fq_transform(const QGridFunction& f, const std::vector<Complex>& ys, const TransformConfig& tc) {
  std::vector<Complex> out;
  double b = b_q(f.q());
  TransformConfig t = tc;
  t.q = f.q();
  for (Complex y : ys) {
    QGridFunction g(f.gamma(), f.q(), f.kmin(), f.kmax());
    for (int k = f.kmin(); k <= f.kmax(); ++k)
      for (int s : {1, -1}) {
        Complex v = f.at(s, k);
        g.set(s, k, v == 0.0 ? v : kernel_e(-I * f.point(s, k) * y, t) * v);
      }
    out.push_back(jackson_interval(g, tc.cfg) / b);
  }
  return out;
}

std::vector<Complex> ftilde_transform(const RealFn& g, const std::vector<Complex>& xs, const TransformConfig& tc) {
  std::vector<Complex> out;
  double c = c_q(tc.q, tc.gamma);
  for (Complex x : xs) {
    RealFn k = [&](double y) {
      Complex v = g(y);
      if (v == 0.0) return v;
      return kernel_E(I * tc.q * x * y, tc) * v;
    };
    out.push_back(jackson_realline(k, tc.gamma, tc.q, tc.cfg).value / c);
  }
  return out;
}

std::vector<Complex> ftilde_transform(const QGridFunction& g, const std::vector<Complex>& xs,
                                      const TransformConfig& tc) {
  std::vector<Complex> out;
  double c = c_q(g.q(), g.gamma());
  TransformConfig t = tc;
  t.q = g.q();
  for (Complex x : xs) {
    QGridFunction h(g.gamma(), g.q(), g.kmin(), g.kmax());
    for (int k = g.kmin(); k <= g.kmax(); ++k)
      for (int s : {1, -1}) {
        Complex v = g.at(s, k);
        h.set(s, k, v == 0.0 ? v : kernel_E(I * t.q * x * g.point(s, k), t) * v);
      }
    out.push_back(jackson_realline(h, tc.cfg) / c);
  }
  return out;
}

std::vector<double> lattice_points(double gamma, double q, int kmin, int kmax) {
  std::vector<double> pts;
  for (int s : {1, -1})
    for (int k = kmin; k <= kmax; ++k) pts.push_back(s * gamma * std::pow(q, k));
  return pts;
}

Complex PolyWeightFit::operator()(double y) const {
  Complex r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * y + *it;
  return r;
}

PolyWeightFit fit_poly_weight(const std::vector<double>& ys, const std::vector<Complex>& values, int n, double q) {
  if (ys.size() != values.size() || static_cast<int>(ys.size()) < n + 1)
    throw Error(ErrorKind::InvalidArgument, "need at least n+1 samples");
  auto w = hermite_weight(HermiteFamily::II, q);
  double ymax = 0;
  for (double y : ys) ymax = std::max(ymax, std::abs(y));
  size_t m = ys.size();
  std::vector<std::vector<long double>> a(m, std::vector<long double>(n + 1));
  std::vector<long double> br(m), bi(m);
  for (size_t i = 0; i < m; ++i) {
    long double wi = w(ys[i]).real(), t = ys[i] / ymax, p = 1;
    for (int j = 0; j <= n; ++j, p *= t) a[i][j] = p;
    br[i] = values[i].real() / wi;
    bi[i] = values[i].imag() / wi;
  }
  auto xr = least_squares(a, br), xi = least_squares(a, bi);
  PolyWeightFit fit;
  for (int j = 0; j <= n; ++j) {
    double s = std::pow(ymax, -j);
    fit.coeffs.emplace_back(static_cast<double>(xr[j]) * s, static_cast<double>(xi[j]) * s);
  }
  for (size_t i = 0; i < m; ++i) fit.residual = std::max(fit.residual, rel_err(fit(ys[i]) * w(ys[i]), values[i]));
  return fit;
}

RoundtripSummary roundtrip_check(int n_max, const TransformConfig& tc, double forward_tol, double backward_tol) {
  RoundtripSummary sum;
  sum.forward_tol = forward_tol;
  sum.backward_tol = backward_tol;
  sum.pass = true;
  double q = tc.q;
  auto wI = hermite_weight(HermiteFamily::I, q), wII = hermite_weight(HermiteFamily::II, q);
  auto ys = lattice_points(tc.gamma, q, -3, 6);
  auto xs = lattice_points(1.0, q, 0, 10);
  std::vector<Complex> ysc(ys.begin(), ys.end()), xsc(xs.begin(), xs.end());
  for (int family : {0, 1}) {
    for (int n = 0; n <= n_max; ++n) {
      RoundtripReport r;
      r.family = family;
      r.n = n;
      QPoly mono(n + 1, ScalarQ(0));
      mono[n] = ScalarQ(1);
      PrecisePoly p(family == 0 ? hermite(HermiteFamily::I, n).coeffs : mono, q);
      PrecisePoly image(family == 0 ? mono : hermite(HermiteFamily::II, n).coeffs, q);
      Complex c = std::pow(q, n * (n - 1) / 2.0) / std::pow(I, n);
      auto f = poly_times(p, wI);
      auto fwd = fq_transform(f, ysc, tc);
      for (size_t i = 0; i < ys.size(); ++i)
        r.forward_error = std::max(r.forward_error, rel_err(fwd[i], c * image(ys[i]) * wII(ys[i])));
      r.forward_points = static_cast<int>(ys.size());
      auto fit = fit_poly_weight(ys, fwd, n, q);
      r.fit_residual = fit.residual;
      RealFn g = [fit, wII](double y) { return fit(y) * wII(y); };
      auto back = ftilde_transform(g, xsc, tc);
      for (size_t i = 0; i < xs.size(); ++i) r.backward_error = std::max(r.backward_error, rel_err(back[i], f(xs[i])));
      r.backward_points = static_cast<int>(xs.size());
      r.pass = r.forward_error <= forward_tol && r.fit_residual <= forward_tol && r.backward_error <= backward_tol;
      if (!r.pass) sum.pass = false;
      sum.cases.push_back(r);
    }
  }
  return sum;
}

ExchangeReport derivative_exchange_f(const RealFn& f, const std::vector<Complex>& ys, const TransformConfig& tc,
                                     double tol, double hyp_tol) {
  double q = tc.q;
  for (int s : {1, -1})
    if (std::abs(f(s / q)) > hyp_tol)
      throw Error(ErrorKind::HypothesisFailed, "f must vanish at +-1/q");
  int k0 = static_cast<int>(std::ceil(std::log(1e-12) / std::log(q)));
  for (int s : {1, -1})
    if (std::abs(f(s * std::pow(q, k0)) - f(s * std::pow(q, k0 + 1))) > 1e-8)
      throw Error(ErrorKind::HypothesisFailed, "f is not continuous at 0");
  RealFn df = [f, q](double x) { return (f(x / q) - f(x)) / ((1 - q) * x); };
  ExchangeReport r;
  r.points = ys;
  r.tol = tol;
  auto a = fq_transform(df, ys, tc), b = fq_transform(f, ys, tc);
  for (size_t i = 0; i < ys.size(); ++i) {
    r.lhs.push_back((1 - q) * a[i]);
    r.rhs.push_back(I * ys[i] * b[i]);
    r.max_error = std::max(r.max_error, rel_err(r.lhs[i], r.rhs[i]));
  }
  r.pass = r.max_error <= tol;
  return r;
}

ExchangeReport derivative_exchange_g(const RealFn& g, const std::vector<Complex>& xs, const TransformConfig& tc,
                                     double tol, double hyp_tol) {
  double q = tc.q, gamma = tc.gamma;
  const int outer = 20;
  for (Complex x : xs)
    for (int s : {1, -1}) {
      double y = s * gamma * std::pow(q, -outer);
      Complex v = g(y);
      if (v != 0.0 && std::abs(kernel_E(I * x * y * q, tc) * v) > hyp_tol)
        throw Error(ErrorKind::HypothesisFailed, "E_q(ixy q) g(y) does not vanish in the upper tail");
    }
  RealFn dg = [g, q](double y) { return (g(y) - g(q * y)) / ((1 - q) * y); };
  ExchangeReport r;
  r.points = xs;
  r.tol = tol;
  auto a = ftilde_transform(dg, xs, tc), b = ftilde_transform(g, xs, tc);
  for (size_t i = 0; i < xs.size(); ++i) {
    r.lhs.push_back((1 - q) * a[i]);
    r.rhs.push_back(-I * xs[i] * b[i]);
    r.max_error = std::max(r.max_error, rel_err(r.lhs[i], r.rhs[i]));
  }
  r.pass = r.max_error <= tol;
  return r;
}

double lowering_residual(HermiteFamily family, int n, double q, double gamma, int kmin, int kmax) {
  bool one = family == HermiteFamily::I;
  auto w = hermite_weight(family, q);
  auto f = poly_times(hermite(family, n).at(q), w);
  auto next = poly_times(hermite(family, n + 1).at(q), w);
  double c = one ? std::pow(q, -n) : std::pow(q, n), worst = 0;
  for (double x : lattice_points(gamma, q, kmin, kmax)) {
    Complex a = f(one ? x / q : x), b = f(one ? x : q * x);
    Complex target = -c * next(x) * x;
    double scale = std::max({std::abs(a), std::abs(b), std::abs(target), 1e-300});
    worst = std::max(worst, std::abs(a - b - target) / scale);
  }
  return worst;
}

}  // namespace qcalc
