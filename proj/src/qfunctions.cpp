#include "qcalc/qfunctions.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace qcalc {

namespace {

constexpr int kMaxSeriesTerms = 2000000;

PowerSeries mark_series(PowerSeries s) {
  s.mark_polynomial(false);
  return s;
}

// (1 - base^k)/(1 - base) as a finite sum, so exact mode never divides.
ScalarQ qinteger(int n, const ScalarQ& base) {
  ScalarQ s(0), p(1);
  for (int j = 0; j < n; ++j) {
    s += p;
    p = p * base;
  }
  return s;
}

// sum_k c_k w^k with c_0 = first and c_k = c_{k-1} * ratio(k).
Complex sum_ratio_series(Complex w, const std::function<Complex(int)>& ratio, Complex first = 1.0,
                         int start = 0) {
  Complex c = first, term = 1.0, acc = 0.0;
  Complex wp = std::pow(w, start);
  int small = 0;
  for (int k = start; k < kMaxSeriesTerms; ++k) {
    if (k > start) {
      c *= ratio(k);
      wp *= w;
    }
    term = c * wp;
    acc += term;
    if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(acc))) {
      if (++small >= 4) return acc;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorKind::NonConvergent, "series summation did not settle");
}

void require_unit_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorKind::NonConvergent, std::string(what) + " series needs |z| < 1");
}

Complex small_e_product(Complex z, double base, double tol, double pole_tol) {
  Complex t = z;
  for (int j = 0; j < kMaxSeriesTerms && std::abs(t) >= 0.5; ++j) {
    if (std::abs(1.0 - t) < pole_tol) throw Error(ErrorKind::PoleHit, "argument at a pole of e_q");
    t *= base;
  }
  return 1.0 / qpochhammer_infinite(z, base, tol).value;
}

Complex logq_sum(Complex z, double q) {
  require_unit_disk(z, "log_q");
  Complex acc = 0.0, zp = 1.0;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    zp *= z;
    Complex term = zp / (1.0 - std::pow(q, n));
    acc += term;
    if (std::abs(zp) < 1e-19 * std::max(1.0, std::abs(acc))) return acc;
  }
  throw Error(ErrorKind::NonConvergent, "log_q series did not settle");
}

Complex li2q_sum(Complex z, double q) {
  require_unit_disk(z, "Li2");
  Complex acc = 0.0, zp = 1.0;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    zp *= z;
    Complex term = zp / (n * (1.0 - std::pow(q, n)));
    acc += term;
    if (std::abs(zp) < 1e-19 * std::max(1.0, std::abs(acc))) return acc;
  }
  throw Error(ErrorKind::NonConvergent, "Li2 series did not settle");
}

double real_logq(double z, double q) { return logq_sum(z, q).real(); }

}  // namespace

std::string NamedSeries::name() const {
  switch (kind) {
    case EQ: return "eq";
    case BIGEQ: return "bigEq";
    case PHI10: return "phi10";
    case LOGQ: return "logq";
    case LI2Q: return "li2q";
    case GAUSS_G: return "gq";
    case GAUSS_BIGG: return "bigGq";
  }
  return "?";
}

PowerSeries small_exp_series(int trunc, const ScalarQ& base) {
  std::vector<ScalarQ> c(trunc + 1);
  ScalarQ den(1), p(1);
  for (int k = 0; k <= trunc; ++k) {
    if (k > 0) {
      p = p * base;
      den = den * (ScalarQ(1) - p);
    }
    c[k] = den.inverse();
  }
  return PowerSeries(trunc, std::move(c), false);
}

PowerSeries big_exp_series(int trunc, const ScalarQ& base) {
  std::vector<ScalarQ> c(trunc + 1);
  ScalarQ den(1), p(1), tri(1);
  for (int k = 0; k <= trunc; ++k) {
    if (k > 0) {
      tri = tri * p;
      p = p * base;
      den = den * (ScalarQ(1) - p);
    }
    c[k] = tri / den;
  }
  return PowerSeries(trunc, std::move(c), false);
}

PowerSeries series_of(const NamedSeries& f, int trunc, const QMode& mode) {
  if (trunc < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
  ScalarQ q = q_of(mode);
  std::vector<ScalarQ> c(trunc + 1, ScalarQ(0));
  switch (f.kind) {
    case NamedSeries::EQ: return small_exp_series(trunc, q);
    case NamedSeries::BIGEQ: return big_exp_series(trunc, q);
    case NamedSeries::PHI10: {
      ScalarQ a = f.a.in_mode(mode), num(1), qk(1);
      for (int k = 0; k <= trunc; ++k) {
        if (k > 0) {
          num = num * (ScalarQ(1) - qk * a);
          qk = qk * q;
        }
        c[k] = num / qfactorial(k, mode);
      }
      break;
    }
    case NamedSeries::LOGQ:
    case NamedSeries::LI2Q: {
      ScalarQ qk(1);
      for (int k = 1; k <= trunc; ++k) {
        qk = qk * q;
        ScalarQ d = ScalarQ(1) - qk;
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "q^n = 1 in a logarithm coefficient");
        c[k] = f.kind == NamedSeries::LOGQ ? d.inverse() : (ScalarQ(k) * d).inverse();
      }
      break;
    }
    case NamedSeries::GAUSS_G:
    case NamedSeries::GAUSS_BIGG: {
      int half = trunc / 2;
      ScalarQ q2 = q * q;
      PowerSeries outer = f.kind == NamedSeries::GAUSS_G ? small_exp_series(half, q2) : big_exp_series(half, q2);
      outer = outer.with_trunc(half);
      for (int k = 0; k <= half; ++k) c[2 * k] = (k % 2 ? -outer[k] : outer[k]);
      break;
    }
  }
  return mark_series(PowerSeries(trunc, std::move(c), false));
}

PowerSeries qderiv(const PowerSeries& f, const QMode& mode, QDirection dir) {
  ScalarQ q = q_of(mode);
  int n = std::max(f.trunc() - 1, 0);
  std::vector<ScalarQ> c(n + 1, ScalarQ(0));
  for (int k = 1; k <= f.trunc(); ++k) {
    if (f[k].is_zero()) continue;
    ScalarQ m = qinteger(k, q);
    if (dir == QDirection::Forward) m = m * q.pow(-k);
    c[k - 1] = f[k] * m;
  }
  return PowerSeries(n, std::move(c), f.is_polynomial());
}

QGridFunction qderiv(const QGridFunction& f, QDirection dir) {
  if (f.kmax() == f.kmin()) throw Error(ErrorKind::MissingSample, "one-point window has no shifted neighbour");
  bool back = dir == QDirection::Backward;
  int lo = back ? f.kmin() : f.kmin() + 1, hi = back ? f.kmax() - 1 : f.kmax();
  QGridFunction r(f.gamma(), f.q(), lo, hi);
  double q = f.q();
  for (int s : {1, -1}) {
    for (int k = lo; k <= hi; ++k) {
      double x = f.point(s, k);
      Complex d = back ? f.at(s, k) - f.at(s, k + 1) : f.at(s, k - 1) - f.at(s, k);
      r.set(s, k, d / ((1.0 - q) * x));
    }
  }
  return r;
}

Complex numeric_eval(const NamedSeries& f, Complex z, double q, double tol, double pole_tol) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "numeric evaluation needs 0 < q < 1");
  switch (f.kind) {
    case NamedSeries::EQ: return small_e_product(z, q, tol, pole_tol);
    case NamedSeries::BIGEQ: return qpochhammer_infinite(-z, q, tol).value;
    case NamedSeries::PHI10: {
      Complex a = f.a.evaluate(q);
      return qpochhammer_infinite(a * z, q, tol).value * small_e_product(z, q, tol, pole_tol);
    }
    case NamedSeries::LOGQ: return logq_sum(z, q);
    case NamedSeries::LI2Q: return li2q_sum(z, q);
    case NamedSeries::GAUSS_G: return small_e_product(-z * z, q * q, tol, pole_tol);
    case NamedSeries::GAUSS_BIGG: return qpochhammer_infinite(z * z, q * q, tol).value;
  }
  return 0.0;
}

Complex numeric_series_eval(const NamedSeries& f, Complex z, double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "numeric evaluation needs 0 < q < 1");
  auto small = [](Complex w, double b) {
    require_unit_disk(w, "e_q");
    return sum_ratio_series(w, [b](int k) { return Complex(1.0 / (1.0 - std::pow(b, k))); });
  };
  auto big = [](Complex w, double b) {
    return sum_ratio_series(w, [b](int k) { return Complex(std::pow(b, k - 1) / (1.0 - std::pow(b, k))); });
  };
  switch (f.kind) {
    case NamedSeries::EQ: return small(z, q);
    case NamedSeries::BIGEQ: return big(z, q);
    case NamedSeries::PHI10: {
      require_unit_disk(z, "1phi0");
      Complex a = f.a.evaluate(q);
      return sum_ratio_series(
          z, [a, q](int k) { return (1.0 - a * std::pow(q, k - 1)) / (1.0 - std::pow(q, k)); });
    }
    case NamedSeries::LOGQ: return logq_sum(z, q);
    case NamedSeries::LI2Q: return li2q_sum(z, q);
    case NamedSeries::GAUSS_G: return small(-z * z, q * q);
    case NamedSeries::GAUSS_BIGG: return big(-z * z, q * q);
  }
  return 0.0;
}

double classical_li2(double z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::NonConvergent, "dilogarithm series needs |z| < 1");
  double acc = 0.0, zp = 1.0;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    zp *= z;
    acc += zp / (static_cast<double>(n) * n);
    if (std::abs(zp) < 1e-19) break;
  }
  return acc;
}

LimitReport limit_check_q1(const std::string& which, double z, const std::vector<double>& qs, double tol) {
  LimitReport r;
  r.which = which;
  r.z = z;
  r.qs = qs;
  r.tol = tol;
  double target;
  if (which == "eq" || which == "bigEq") {
    target = std::exp(z);
  } else if (which == "logq") {
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::InvalidArgument, "logq limit needs |z| < 1");
    target = -std::log1p(-z);
  } else if (which == "li2q") {
    target = classical_li2(z);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown limit family " + which);
  }
  for (double q : qs) {
    double v;
    if (which == "eq") v = numeric_eval(NamedSeries::eq(), (1.0 - q) * z, q).real();
    else if (which == "bigEq") v = numeric_eval(NamedSeries::big_eq(), (1.0 - q) * z, q).real();
    else if (which == "logq") v = (1.0 - q) * real_logq(z, q);
    else v = (1.0 - q) * li2q_sum(z, q).real();
    r.deviations.push_back(std::abs(v - target));
  }
  r.monotone = true;
  for (std::size_t i = 1; i < r.deviations.size(); ++i)
    if (r.deviations[i] > r.deviations[i - 1] + 1e-15) r.monotone = false;
  r.pass = r.monotone && !r.deviations.empty() && r.deviations.back() < tol;
  return r;
}

bool HybridReport::pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

PowerSeries phi10_a_derivative(int trunc, const ScalarQ& a0, const QMode& mode) {
  ScalarQ q = q_of(mode), a = a0.in_mode(mode);
  std::vector<ScalarQ> c(trunc + 1, ScalarQ(0));
  // coefficients of (a;q)_k as a polynomial in a
  std::vector<ScalarQ> poly{ScalarQ(1)};
  ScalarQ qk(1);
  for (int k = 0; k <= trunc; ++k) {
    if (k > 0) {
      std::vector<ScalarQ> next(poly.size() + 1, ScalarQ(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= qk * poly[i];
      }
      poly = std::move(next);
      qk = qk * q;
    }
    ScalarQ d(0), ap(1);
    for (std::size_t i = 1; i < poly.size(); ++i) {
      d += ScalarQ(static_cast<long long>(i)) * poly[i] * ap;
      ap = ap * a;
    }
    c[k] = d / qfactorial(k, mode);
  }
  return mark_series(PowerSeries(trunc, std::move(c), false));
}

namespace {

double chain_rule_residual(double q, double x) {
  auto g = [q](double t) { return 1.0 - numeric_eval(NamedSeries::eq(), -(1.0 - q) * t, q).real(); };
  auto f = [q](double y) { return (1.0 - q) * real_logq(y, q); };
  double gx = g(x);
  double dg = (gx - g(q * x)) / ((1.0 - q) * x);
  double df = (f(gx) - f(q * gx)) / ((1.0 - q) * gx);
  return std::abs(df * dg - 1.0);
}

}  // namespace

RangeScan chain_rule_scan(double q, double lo, double hi, int points, double tol) {
  RangeScan r;
  r.lo = lo;
  r.hi = hi;
  int best_len = 0, run = 0, run_start = 0;
  for (int i = 0; i < points; ++i) {
    double x = lo + (hi - lo) * (i + 0.5) / points;
    double res;
    try {
      res = x == 0.0 ? std::numeric_limits<double>::infinity() : chain_rule_residual(q, x);
    } catch (const Error&) {
      res = std::numeric_limits<double>::infinity();
    }
    r.xs.push_back(x);
    r.residuals.push_back(res);
    if (res < tol) {
      if (run == 0) run_start = i;
      if (++run > best_len) {
        best_len = run;
        r.valid_lo = r.xs[run_start];
        r.valid_hi = x;
      }
    } else {
      run = 0;
    }
  }
  r.all_pass = best_len == points;
  return r;
}

double reversed_chain_rule_residual(double q, double y) {
  auto g = [q](double t) { return 1.0 - numeric_eval(NamedSeries::eq(), -(1.0 - q) * t, q).real(); };
  auto f = [q](double t) { return (1.0 - q) * real_logq(t, q); };
  double fy = f(y);
  double dg = (g(fy) - g(q * fy)) / ((1.0 - q) * fy);
  double df = (fy - f(q * y)) / ((1.0 - q) * y);
  return std::abs(dg * df - 1.0);
}

double binomial_tail_residual(int k, double y, double q) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "tail sum needs k >= 1");
  if (!(std::abs(y) < 1.0)) throw Error(ErrorKind::InvalidArgument, "tail sum needs |y| < 1");
  double binom = 1.0, yp = 1.0, acc = 0.0, qk = std::pow(q, k);
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    if (m > 0) {
      binom *= (1.0 - std::pow(q, k + m)) / (1.0 - std::pow(q, m));
      yp *= y;
    }
    double term = (1.0 - qk) / (1.0 - std::pow(q, m + k)) * binom * yp;
    acc += term;
    if (std::abs(term) < 1e-19 * std::max(1.0, std::abs(acc)) && m > k) break;
  }
  double yk = 1.0;
  for (int j = 0; j < k; ++j) yk *= 1.0 - std::pow(q, j) * y;
  return std::abs(acc * yk - 1.0);
}

HybridReport hybrid_identities(double q, const std::vector<double>& zs) {
  HybridReport rep;
  rep.q = q;
  for (double z : zs)
    if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::InvalidArgument, "hybrid checks need |z| < 1");

  HybridEntry e89{"eq89", 0, 1e-10, false, "Li2(z;q) against log e_q(z)"};
  HybridEntry e108{"eq108", 0, 1e-10, false, "log_q(z) against z e_q'(z)/e_q(z)"};
  HybridEntry e109{"eq109-fd", 0, 1e-6, false, "central difference in a, h = 1e-5"};
  HybridEntry e111{"eq111", 0, 1e-10, false, "(1-q) D_q log_q against 1/(1-z)"};
  for (double z : zs) {
    Complex li2 = li2q_sum(z, q);
    Complex le = std::log(numeric_eval(NamedSeries::eq(), z, q));
    e89.max_residual = std::max(e89.max_residual, std::abs(li2 - le));

    double lq = real_logq(z, q);
    Complex eqs = numeric_series_eval(NamedSeries::eq(), z, q);
    Complex deriv = 0.0;
    if (z != 0.0) {
      // sum_k k z^(k-1)/(q;q)_k
      deriv = sum_ratio_series(
          z, [q](int k) { return Complex(static_cast<double>(k) / (k - 1) / (1.0 - std::pow(q, k))); },
          1.0 / (1.0 - q), 1);
      deriv /= z;
    }
    e108.max_residual = std::max(e108.max_residual, std::abs(lq - z * deriv / eqs));

    double h = 1e-5;
    Complex fp = numeric_eval(NamedSeries::phi10(ScalarQ::numeric(1.0 + h)), z, q);
    Complex fm = numeric_eval(NamedSeries::phi10(ScalarQ::numeric(1.0 - h)), z, q);
    e109.max_residual = std::max(e109.max_residual, std::abs(-(fp - fm) / (2 * h) - lq));

    if (z != 0.0) {
      double d = (lq - real_logq(q * z, q)) / z;
      e111.max_residual = std::max(e111.max_residual, std::abs(d - 1.0 / (1.0 - z)));
    }
  }
  for (auto* e : {&e89, &e108, &e109, &e111}) {
    e->pass = e->max_residual < e->tol;
    rep.entries.push_back(*e);
  }

  const int n = 24;
  const QMode X = QMode::exact();
  HybridEntry ex{"eq109-exact", 0, 0, false, "coefficientwise a-derivative at a = 1, truncation 24"};
  auto diff = phi10_a_derivative(n, ScalarQ(1), X) + series_of(NamedSeries::logq(), n, X);
  ex.max_residual = diff.degree() + 1;
  ex.pass = diff.is_zero();
  rep.entries.push_back(ex);

  HybridEntry ex111{"eq111-exact", 0, 0, false, "(1-q) D_q log_q as series, truncation 24"};
  auto d = (ScalarQ(1) - q_of(X)) * qderiv(series_of(NamedSeries::logq(), n + 1, X), X);
  std::vector<ScalarQ> geo(n + 1, ScalarQ(1));
  auto r111 = d - PowerSeries(n, geo, false);
  ex111.max_residual = r111.degree() + 1;
  ex111.pass = r111.is_zero();
  rep.entries.push_back(ex111);

  HybridEntry e112{"eq112", 0, 1e-10, false, ""};
  auto scan = chain_rule_scan(q, 0.0, 1.0 / (1.0 - q), 40, 1e-10);
  for (double r : scan.residuals) e112.max_residual = std::max(e112.max_residual, r);
  e112.pass = scan.all_pass;
  e112.note = "x in (0, 1/(1-q)), 40 points";
  rep.entries.push_back(e112);
  return rep;
}

}  // namespace qcalc
