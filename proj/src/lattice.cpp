#include "qcalc/lattice.hpp"

#include <cmath>
#include <string>

namespace qcalc {

QGridFunction::QGridFunction(double gamma, double q, int kmin, int kmax)
    : gamma_(gamma), q_(q), kmin_(kmin), kmax_(kmax) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::InvalidArgument, "lattice anchor must be positive");
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "lattice needs 0 < q < 1");
  if (kmax < kmin) throw Error(ErrorKind::InvalidArgument, "empty lattice window");
  pos_.assign(kmax - kmin + 1, Complex(0.0));
  neg_.assign(kmax - kmin + 1, Complex(0.0));
}

QGridFunction QGridFunction::sample(const std::function<Complex(double)>& f, double gamma, double q, int kmin,
                                    int kmax, bool with_zero) {
  QGridFunction g(gamma, q, kmin, kmax);
  for (int k = kmin; k <= kmax; ++k) {
    g.set(1, k, f(g.point(1, k)));
    g.set(-1, k, f(g.point(-1, k)));
  }
  if (with_zero) g.set_zero(f(0.0));
  return g;
}

double QGridFunction::point(int sign, int k) const { return sign * gamma_ * std::pow(q_, k); }

Complex QGridFunction::at(int sign, int k) const {
  if (!has(sign, k))
    throw Error(ErrorKind::MissingSample, "no sample at lattice index " + std::to_string(sign * k) +
                                              (sign < 0 ? " (negative side)" : ""));
  return sign > 0 ? pos_[k - kmin_] : neg_[k - kmin_];
}

void QGridFunction::set(int sign, int k, Complex v) {
  if (!has(sign, k)) throw Error(ErrorKind::MissingSample, "lattice index outside the window");
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::InvalidArgument, "lattice samples must be finite");
  (sign > 0 ? pos_ : neg_)[k - kmin_] = v;
}

namespace {

constexpr int kPrecBits = PrecisePoly::kBits;

mpf_class eval_vpoly(const VPoly& p, const mpf_class& v) {
  mpf_class r(0, kPrecBits);
  for (int i = p.degree(); i >= 0; --i) r = r * v + mpf_class(p[i], kPrecBits);
  return r;
}

}  // namespace

PrecisePoly::PrecisePoly(const std::vector<ScalarQ>& coeffs, double q) {
  mpf_class v(q, kPrecBits);
  v = sqrt(v);
  for (const auto& c : coeffs) {
    if (c.is_exact()) {
      re_.push_back(eval_vpoly(c.numerator(), v) / eval_vpoly(c.denominator(), v));
      im_.emplace_back(0, kPrecBits);
    } else {
      re_.emplace_back(c.numeric_value().real(), kPrecBits);
      im_.emplace_back(c.numeric_value().imag(), kPrecBits);
    }
  }
}

Complex PrecisePoly::operator()(double x) const {
  mpf_class xr(x, kPrecBits), a(0, kPrecBits), b(0, kPrecBits);
  for (int i = degree(); i >= 0; --i) {
    a = a * xr + re_[i];
    b = b * xr + im_[i];
  }
  return {a.get_d(), b.get_d()};
}

mpf_class PrecisePoly::real_at(const mpf_class& x) const {
  mpf_class a(0, kPrecBits);
  for (int i = degree(); i >= 0; --i) a = a * x + re_[i];
  return a;
}

}  // namespace qcalc
