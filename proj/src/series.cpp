#include "qcalc/series.hpp"

#include <algorithm>

namespace qcalc {

namespace {

const ScalarQ& zero_scalar() {
  static const ScalarQ z(0);
  return z;
}

}  // namespace

PowerSeries::PowerSeries(int trunc) : trunc_(trunc), c_(trunc + 1, ScalarQ(0)), polynomial_(true) {
  if (trunc < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
}

PowerSeries::PowerSeries(int trunc, std::vector<ScalarQ> coeffs, bool polynomial)
    : trunc_(trunc), c_(std::move(coeffs)), polynomial_(polynomial) {
  if (trunc < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
  if (static_cast<int>(c_.size()) > trunc + 1) {
    for (std::size_t k = trunc + 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) polynomial_ = false;
    c_.resize(trunc + 1);
  }
  c_.resize(trunc + 1, ScalarQ(0));
}

PowerSeries PowerSeries::monomial(int trunc, int k, const ScalarQ& c) {
  PowerSeries p(trunc);
  if (k <= trunc) p.c_[k] = c;
  else p.polynomial_ = c.is_zero();
  return p;
}

PowerSeries PowerSeries::constant(int trunc, const ScalarQ& c) { return monomial(trunc, 0, c); }

const ScalarQ& PowerSeries::operator[](int k) const {
  if (k < 0 || k > trunc_) return zero_scalar();
  return c_[k];
}

void PowerSeries::set(int k, ScalarQ c) {
  if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "negative series index");
  if (k > trunc_) {
    if (!c.is_zero()) polynomial_ = false;
    return;
  }
  c_[k] = std::move(c);
}

int PowerSeries::degree() const {
  for (int k = trunc_; k >= 0; --k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.trunc_, b.trunc_));
  for (int k = 0; k <= r.trunc_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  r.polynomial_ = a.polynomial_ && b.polynomial_ && a.degree() <= r.trunc_ && b.degree() <= r.trunc_;
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.trunc_, b.trunc_);
  PowerSeries r(n);
  int da = std::min(a.degree(), n), db = std::min(b.degree(), n);
  for (int i = 0; i <= da; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= db && i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.polynomial_ = a.polynomial_ && b.polynomial_ && da + db <= n;
  return r;
}

PowerSeries operator*(const ScalarQ& c, const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& x : r.c_) x = c * x;
  return r;
}

PowerSeries PowerSeries::dilate(const ScalarQ& c) const {
  PowerSeries r = *this;
  ScalarQ p(1);
  for (int k = 0; k <= trunc_; ++k) {
    if (!r.c_[k].is_zero()) r.c_[k] = r.c_[k] * p;
    if (k < trunc_) p = p * c;
  }
  return r;
}

PowerSeries PowerSeries::shift_up(int k) const {
  PowerSeries r(trunc_);
  for (int i = 0; i + k <= trunc_; ++i) r.c_[i + k] = c_[i];
  r.polynomial_ = polynomial_ && degree() + k <= trunc_;
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  if (!g[0].is_zero() && !polynomial_)
    throw Error(ErrorKind::NonNilpotentArgument, "substituting a series with nonzero constant term");
  int n = std::min(trunc_, g.trunc_);
  PowerSeries r(n);
  int d = degree();
  if (d < 0) return r;
  r.c_[0] = c_[d];
  for (int k = d - 1; k >= 0; --k) {
    r = r * g;
    r.c_[0] += c_[k];
  }
  r.polynomial_ = polynomial_ && g.polynomial_ && d * std::max(g.degree(), 0) <= n;
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0].is_zero()) throw Error(ErrorKind::NonUnitConstantTerm, "series with zero constant term is not invertible");
  PowerSeries r(trunc_);
  ScalarQ inv = c_[0].inverse();
  r.c_[0] = inv;
  for (int n = 1; n <= trunc_; ++n) {
    ScalarQ s(0);
    for (int k = 1; k <= n; ++k)
      if (!c_[k].is_zero()) s += c_[k] * r.c_[n - k];
    r.c_[n] = -(inv * s);
  }
  r.polynomial_ = degree() == 0;
  return r;
}

PowerSeries PowerSeries::with_trunc(int n) const {
  PowerSeries r(n);
  for (int k = 0; k <= std::min(n, trunc_); ++k) r.c_[k] = c_[k];
  r.polynomial_ = polynomial_ && degree() <= n;
  if (n > trunc_ && !polynomial_) throw Error(ErrorKind::InvalidArgument, "cannot extend a truncated series");
  return r;
}

PowerSeries PowerSeries::in_mode(const QMode& mode) const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = c.in_mode(mode);
  return r;
}

std::complex<double> PowerSeries::evaluate(std::complex<double> z, double q) const {
  std::complex<double> acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * z + c_[k].evaluate(q);
  return acc;
}

std::string PowerSeries::to_string(const std::string& var) const {
  std::vector<std::pair<ScalarQ, std::string>> terms;
  for (int k = 0; k <= trunc_; ++k) {
    if (c_[k].is_zero()) continue;
    std::string m = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    terms.emplace_back(c_[k], m);
  }
  return render_terms(terms);
}

}  // namespace qcalc
