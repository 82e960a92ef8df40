#include "qcalc/jackson.hpp"

#include <algorithm>
#include <cmath>

#include "qcalc/qfunctions.hpp"

namespace qcalc {

namespace {

constexpr int kSmallRun = 3;

struct TailScan {
  Complex sum = 0.0;
  double abs_sum = 0;
  int last = 0;
};

// Walks k = start, start+step, ... adding (f(x)+f(-x)) x (1-q) until the tail is negligible.
TailScan scan_tail(const RealFn& f, double gamma, double q, int start, int step, bool two_sided,
                   const JacksonConfig& cfg, bool upper) {
  TailScan t;
  int small = 0, growing = 0;
  double prev = -1;
  for (int i = 0;; ++i) {
    if (i > cfg.max_window)
      throw Error(ErrorKind::TailNotConverged, "Jackson sum still above tail_tol after max_window terms");
    int k = start + i * step;
    double x = gamma * std::pow(q, k);
    Complex fp = f(x), fm = two_sided ? f(-x) : Complex(0.0);
    double mag = (std::abs(fp) + std::abs(fm)) * std::abs(x) * (1 - q);
    if (!std::isfinite(mag)) {
      if (upper) throw Error(ErrorKind::DivergentUpperTail, "integrand overflows in the upper tail");
      throw Error(ErrorKind::TailNotConverged, "non-finite Jackson term");
    }
    t.sum += (fp + fm) * x * (1 - q);
    t.abs_sum += mag;
    t.last = k;
    if (upper) {
      growing = (prev >= 0 && mag > prev) ? growing + 1 : 0;
      if (growing >= kSmallRun && mag > 1.0 / cfg.tail_tol)
        throw Error(ErrorKind::DivergentUpperTail, "terms grow without bound as |t| increases");
    }
    prev = mag;
    small = mag < cfg.tail_tol ? small + 1 : 0;
    if (small >= kSmallRun) return t;
  }
}

double qpoch(double a, double q) { return qpochhammer_inf(a, q).real(); }

double qpoch_finite(double a, double base, int n) {
  double r = 1;
  for (int j = 0; j < n; ++j) r *= 1 - a * std::pow(base, j);
  return r;
}

}  // namespace

PowerSeries jackson_0_to_x(const PowerSeries& f, const QMode& mode) {
  ScalarQ q = q_of(mode), one(1);
  int n = f.trunc() + 1;
  std::vector<ScalarQ> c(n + 1, ScalarQ(0));
  for (int k = 0; k <= f.trunc(); ++k) {
    if (!f[k].is_zero()) c[k + 1] = f[k] * (one - q) / (one - q.pow(k + 1));
  }
  return PowerSeries(n, std::move(c), f.is_polynomial());
}

JacksonSum jackson_0_to(const RealFn& f, double x, double q, const JacksonConfig& cfg) {
  JacksonSum r{0.0, 0, 0, 0};
  if (x == 0.0) return r;
  TailScan t;
  if (x > 0) {
    t = scan_tail(f, x, q, 0, 1, false, cfg, false);
  } else {
    auto g = [&f](double s) { return f(-s); };
    t = scan_tail(g, -x, q, 0, 1, false, cfg, false);
    t.sum = -t.sum;
  }
  r.value = t.sum;
  r.abs_sum = t.abs_sum;
  r.kmax = t.last;
  return r;
}

Complex jackson_interval(const RealFn& f, double a, double b, double q, const JacksonConfig& cfg) {
  return jackson_0_to(f, b, q, cfg).value - jackson_0_to(f, a, q, cfg).value;
}

Complex jackson_interval(const QGridFunction& f, const JacksonConfig& cfg) {
  if (f.gamma() != 1.0 || f.kmin() != 0)
    throw Error(ErrorKind::InvalidArgument, "interval grid must be anchored at 1 with kmin = 0");
  double q = f.q();
  Complex s = 0.0;
  double last = 0;
  for (int k = f.kmin(); k <= f.kmax(); ++k) {
    double x = f.point(1, k);
    s += (f.at(1, k) + f.at(-1, k)) * x * (1 - q);
    last = (std::abs(f.at(1, k)) + std::abs(f.at(-1, k))) * x * (1 - q);
  }
  if (last >= cfg.tail_tol) throw Error(ErrorKind::TailNotConverged, "grid window too short near 0");
  return s;
}

JacksonSum jackson_realline(const RealFn& f, double gamma, double q, const JacksonConfig& cfg) {
  if (!(gamma > 0)) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  auto lower = scan_tail(f, gamma, q, 0, 1, true, cfg, false);
  auto upper = scan_tail(f, gamma, q, -1, -1, true, cfg, true);
  return {lower.sum + upper.sum, lower.abs_sum + upper.abs_sum, upper.last, lower.last};
}

Complex jackson_realline(const QGridFunction& f, const JacksonConfig& cfg) {
  double q = f.q();
  Complex s = 0.0;
  auto mag = [&](int k) {
    return (std::abs(f.at(1, k)) + std::abs(f.at(-1, k))) * f.point(1, k) * (1 - q);
  };
  for (int k = f.kmin(); k <= f.kmax(); ++k) {
    double x = f.point(1, k);
    s += (f.at(1, k) + f.at(-1, k)) * x * (1 - q);
  }
  if (mag(f.kmin()) >= cfg.tail_tol || mag(f.kmax()) >= cfg.tail_tol)
    throw Error(ErrorKind::TailNotConverged, "grid window does not cover both tails");
  return s;
}

double b_q(double q) { return (1 - q) * qpoch(q, q) * qpoch(-q, q) * qpoch(-1, q); }

double c_q(double q, double gamma) {
  double q2 = q * q, g2 = gamma * gamma;
  double num = qpoch(q2, q2) * qpoch(-q * g2, q2) * qpoch(-q / g2, q2);
  double den = qpoch(-g2, q2) * qpoch(-q2 / g2, q2) * qpoch(q, q2);
  return 2 * (1 - q) * num * gamma / den;
}

double moment_small_gauss(int m, double q, double gamma) {
  if (m % 2) return 0;
  int n = m / 2;
  return c_q(q, gamma) * std::pow(q, -n * n) * qpoch_finite(q, q * q, n);
}

double moment_big_gauss(int m, double q) {
  if (m % 2) return 0;
  int n = m / 2;
  return b_q(q) * std::pow(q, 2 * n + 1) * qpoch_finite(q, q * q, n);
}

FiniteInvarianceReport translation_invariance_finite(const PowerSeries& f, const QMode& mode) {
  int T = f.trunc() + 1;
  auto alg = algebras::qplane(mode);
  auto x = NCElement::gen(alg, T, "x"), y = NCElement::gen(alg, T, "y");
  auto F = jackson_0_to_x(f, mode);
  FiniteInvarianceReport r{NCElement(alg, T), NCElement(alg, T)};
  r.lhs = compose_series(F, x + y) - compose_series(F, y);
  ScalarQ q = q_of(mode), c = ScalarQ(1) - q;
  PowerSeries fj = f;
  NCElement yj = NCElement::scalar(alg, T, 1);
  for (int j = 0; j <= f.trunc(); ++j) {
    r.rhs += qfactorial(j, mode).inverse() * (yj * compose_series(jackson_0_to_x(fj, mode), x));
    fj = c * qderiv(fj, mode);
    yj = yj * y;
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

TaylorDecomposition qtaylor(const PowerSeries& f, int m, const QMode& mode) {
  int N = f.trunc();
  auto alg = algebras::qplane(mode);
  auto x = NCElement::gen(alg, N, "x"), y = NCElement::gen(alg, N, "y");
  TaylorDecomposition d{compose_series(f, x + y), NCElement(alg, N), NCElement(alg, N), NCElement(alg, N)};
  ScalarQ c = ScalarQ(1) - q_of(mode);
  PowerSeries fk = f;
  NCElement yk = NCElement::scalar(alg, N, 1);
  for (int k = 0; k < m && k <= N; ++k) {
    d.partial += qfactorial(k, mode).inverse() * (yk * compose_series(fk, x));
    fk = c * qderiv(fk, mode);
    yk = yk * y;
  }
  d.remainder = d.full - d.partial;
  d.remainder_divisible = true;
  char iy = static_cast<char>(alg->index("y"));
  for (const auto& [w, coef] : d.remainder.terms()) {
    int lead = 0;
    while (lead < static_cast<int>(w.size()) && w[lead] == iy) ++lead;
    if (lead < m) {
      d.remainder_divisible = false;
      continue;
    }
    d.g_m += NCElement::from_word(alg, N, w.substr(m), coef);
  }
  return d;
}

GaussianTimesPoly GaussianTimesPoly::monomial(QGaussian w, int j) {
  std::vector<ScalarQ> p(j + 1, ScalarQ(0));
  p[j] = ScalarQ(1);
  return {w, p, 0};
}

GaussianTimesPoly GaussianTimesPoly::qderiv(const QMode& mode) const {
  ScalarQ q = q_of(mode), q2s = q.pow(2 * s_);
  int n = static_cast<int>(p_.size());
  std::vector<ScalarQ> pq(n), num(n + 2, ScalarQ(0));
  ScalarQ qi(1);
  for (int i = 0; i < n; ++i) {
    pq[i] = p_[i] * qi;
    qi = qi * q;
  }
  // Small: W(q^{s+1}x) = (1 + q^{2s}x^2) W(q^s x); Big: W(q^s x) = (1 - q^{2s}x^2) W(q^{s+1}x)
  for (int i = 0; i < n; ++i) {
    num[i] += p_[i] - pq[i];
    if (w_ == QGaussian::Small) num[i + 2] -= q2s * pq[i];
    else num[i + 2] -= q2s * p_[i];
  }
  if (!num[0].is_zero()) throw Error(ErrorKind::InvalidArgument, "q-difference numerator not divisible by x");
  ScalarQ inv = (ScalarQ(1) - q).inverse();
  std::vector<ScalarQ> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = num[i + 1] * inv;
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return {w_, out, w_ == QGaussian::Small ? s_ : s_ + 1};
}

GaussianTimesPoly GaussianTimesPoly::scaled(const ScalarQ& c) const {
  auto p = p_;
  for (auto& x : p) x = x * c;
  return {w_, p, s_};
}

RealFn GaussianTimesPoly::at(double q) const {
  PrecisePoly p(p_, q);
  double qs = std::pow(q, s_);
  auto kind = w_ == QGaussian::Small ? NamedSeries::gauss_g() : NamedSeries::gauss_big_g();
  return [p, qs, q, kind](double x) {
    Complex v = p(x);
    if (x != 0.0) {
      double k = std::round(std::log(std::abs(x)) / std::log(q));
      if (std::abs(std::abs(x) / std::pow(q, k) - 1.0) < 1e-13) {
        mpf_class qm(q, PrecisePoly::kBits), xm(1, PrecisePoly::kBits);
        mpf_pow_ui(xm.get_mpf_t(), qm.get_mpf_t(), static_cast<unsigned long>(std::abs(k)));
        if (k < 0) xm = 1 / xm;
        if (x < 0) xm = -xm;
        v = Complex(p.real_at(xm).get_d(), v.imag());
      }
    }
    if (v == 0.0) return v;
    return v * numeric_eval(kind, qs * x, q);
  };
}

Complex GaussianTimesPoly::operator()(double x, double q) const { return at(q)(x); }

InfiniteInvarianceReport translation_invariance_infinite(QGaussian weight, int j, int m_max, double gamma, double q,
                                                         const JacksonConfig& cfg, double tol) {
  InfiniteInvarianceReport r;
  r.weight = weight;
  r.j = j;
  r.gamma = gamma;
  r.q = q;
  r.tol = tol;
  const QMode X = QMode::exact();
  auto f = GaussianTimesPoly::monomial(weight, j);
  r.base = jackson_realline(f.at(q), gamma, q, cfg).value.real();
  r.growth_ok = true;
  r.pass = true;
  GaussianTimesPoly d = f;
  ScalarQ qs = ScalarQ::q_power(1);
  for (int m = 1; m <= m_max; ++m) {
    d = d.qderiv(X);
    auto fm = d.scaled((ScalarQ(1) - qs).pow(m) / qfactorial(m, X)).at(q);
    auto s = jackson_realline(fm, gamma, q, cfg);
    r.moments.push_back(s.value.real());
    r.scales.push_back(s.abs_sum);
    if (!(std::abs(s.value) < tol)) r.pass = false;
    // ratio test for |D^m f(+-q^-k gamma)| = O(q^{(1+eps)k}) with eps = 1/2 at the outer end of the window
    auto dm = d.at(q);
    int K = std::max(12, -s.kmin + 2);
    double prev = INFINITY;
    for (int k = K - 3; k <= K; ++k) {
      double x = gamma * std::pow(q, -k);
      double v = (std::abs(dm(x)) + std::abs(dm(-x))) * std::pow(q, -1.5 * k);
      if (!std::isfinite(v) || (v > prev && v > 1e-300)) r.growth_ok = false;
      prev = v;
    }
  }
  r.pass = r.pass && r.growth_ok;
  return r;
}

TelescopeReport lemma_telescope(const RealFn& f, double gamma, double q, int kmin, int kmax, double tol) {
  auto g = QGridFunction::sample(f, gamma, q, kmin, kmax);
  auto d = qcalc::qderiv(g);
  TelescopeReport r;
  Complex s = 0.0;
  for (int k = d.kmin(); k <= d.kmax(); ++k) {
    double x = d.point(1, k);
    s += (d.at(1, k) + d.at(-1, k)) * x * (1 - q);
  }
  r.integral = s.real();
  r.boundary = (g.at(1, kmin) - g.at(1, kmax) - g.at(-1, kmin) + g.at(-1, kmax)).real();
  r.pass = std::abs(r.integral) < tol && std::abs(r.integral - r.boundary) < tol;
  return r;
}

}  // namespace qcalc
