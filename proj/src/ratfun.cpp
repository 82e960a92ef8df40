#include "qcalc/detail/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>

#include "qcalc/error.hpp"

namespace qcalc::detail {

namespace {

const ZPoly kOne(std::int64_t{1});

bool maybe_root_of_unity(const ZPoly& p, int d) {
  if (d <= 2 && p.is_small()) return p.eval_real(d == 1 ? 1.0L : -1.0L) == 0.0L;
  long double ang = 2.0L * std::numbers::pi_v<long double> / d;
  std::complex<long double> z(std::cos(ang), std::sin(ang));
  long double tol = 1e-9L * std::max<long double>(p.norm1(), 1.0L);
  return std::abs(p.eval(z)) <= tol;
}

void merge_cyc(std::vector<std::pair<int, int>>& into, const std::vector<std::pair<int, int>>& from) {
  std::vector<std::pair<int, int>> out;
  out.reserve(into.size() + from.size());
  std::size_t i = 0, j = 0;
  while (i < into.size() || j < from.size()) {
    if (j == from.size() || (i < into.size() && into[i].first < from[j].first)) {
      out.push_back(into[i++]);
    } else if (i == into.size() || from[j].first < into[i].first) {
      out.push_back(from[j++]);
    } else {
      out.emplace_back(into[i].first, into[i].second + from[j].second);
      ++i;
      ++j;
    }
  }
  into = std::move(out);
}

ZPoly cyc_product(const std::vector<std::pair<int, int>>& cyc) {
  ZPoly p = kOne;
  for (auto [d, e] : cyc)
    for (int k = 0; k < e; ++k) p = p * cyclotomic(d);
  return p;
}

std::string q_power_string(int vexp) {
  if (vexp % 2 == 0) {
    int k = vexp / 2;
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
  }
  return "q^(" + std::to_string(vexp) + "/2)";
}

// Laurent polynomial in v printed in powers of q, lowest power first.
std::string laurent_string(const ZPoly& p, int off, int* terms = nullptr) {
  std::ostringstream os;
  int count = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    mpz_class c = p.coeff(i);
    if (c == 0) continue;
    int e = i + off;
    bool neg = c < 0;
    mpz_class a = neg ? mpz_class(-c) : c;
    if (count == 0)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << q_power_string(e);
    }
    ++count;
  }
  if (terms) *terms = count;
  return count == 0 ? "0" : os.str();
}

}  // namespace

RatFun::RatFun(long long c) : num_(static_cast<std::int64_t>(c)) { reduce(); }

RatFun::RatFun(const mpq_class& c) : num_(c.get_num()), den_c_(c.get_den()) { reduce(); }

RatFun::RatFun(ZPoly num, int off) : off_(off), num_(std::move(num)) { reduce(); }

RatFun RatFun::v_power(int k) { return RatFun(kOne, k); }

bool RatFun::is_constant() const {
  return num_.degree() <= 0 && off_ == 0 && cyc_.empty() && rest_.is_one();
}

mpq_class RatFun::constant_value() const {
  mpq_class r(num_.coeff(0), den_c_);
  r.canonicalize();
  return r;
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    off_ = 0;
    den_c_ = 1;
    cyc_.clear();
    rest_ = kOne;
    return;
  }
  int lo = num_.low_order();
  if (lo > 0) {
    num_ = num_.shifted_down(lo);
    off_ += lo;
  }
  for (auto& [d, e] : cyc_) {
    while (e > 0 && num_.degree() >= euler_phi(d)) {
      if (!maybe_root_of_unity(num_, d)) break;
      auto q = num_.div_monic(cyclotomic(d));
      if (!q) break;
      num_ = std::move(*q);
      --e;
    }
  }
  cyc_.erase(std::remove_if(cyc_.begin(), cyc_.end(), [](const auto& p) { return p.second == 0; }), cyc_.end());
  if (!rest_.is_one() && num_.degree() > 0) {
    ZPoly g = ZPoly::gcd(num_, rest_);
    if (g.degree() > 0) {
      num_ = num_.div_exact(g);
      rest_ = rest_.div_exact(g);
      if (rest_.lead_sign() < 0) {
        rest_ = -rest_;
        num_ = -num_;
      }
    }
  }
  if (rest_.degree() == 0) {
    mpz_class r = rest_.coeff(0);
    rest_ = kOne;
    den_c_ *= r;
  }
  if (den_c_ != 1) {
    mpz_class g;
    mpz_class c = num_.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_c_.get_mpz_t());
    if (g != 1) {
      num_ = num_.div_exact(g);
      den_c_ /= g;
    }
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  int m = std::min(a.off_, b.off_);
  r.off_ = m;
  if (a.den_c_ == b.den_c_ && a.cyc_ == b.cyc_ && a.rest_ == b.rest_) {
    r.num_ = a.num_.shifted_up(a.off_ - m) + b.num_.shifted_up(b.off_ - m);
    r.den_c_ = a.den_c_;
    r.cyc_ = a.cyc_;
    r.rest_ = a.rest_;
    r.reduce();
    return r;
  }
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.den_c_.get_mpz_t(), b.den_c_.get_mpz_t());
  std::map<int, int> ea, eb, em;
  for (auto [d, e] : a.cyc_) ea[d] = e, em[d] = std::max(em[d], e);
  for (auto [d, e] : b.cyc_) eb[d] = e, em[d] = std::max(em[d], e);
  std::vector<std::pair<int, int>> fa, fb;
  for (auto [d, e] : em) {
    if (e > ea[d]) fa.emplace_back(d, e - ea[d]);
    if (e > eb[d]) fb.emplace_back(d, e - eb[d]);
    r.cyc_.emplace_back(d, e);
  }
  ZPoly ra = kOne, rb = kOne;
  if (a.rest_ == b.rest_) {
    r.rest_ = a.rest_;
  } else if (a.rest_.is_one()) {
    r.rest_ = b.rest_;
    ra = b.rest_;
  } else if (b.rest_.is_one()) {
    r.rest_ = a.rest_;
    rb = a.rest_;
  } else {
    ZPoly g = ZPoly::gcd(a.rest_, b.rest_);
    ra = b.rest_.div_exact(g);
    rb = a.rest_.div_exact(g);
    r.rest_ = a.rest_ * ra;
  }
  ZPoly na = a.num_.shifted_up(a.off_ - m).scaled(l / a.den_c_) * cyc_product(fa) * ra;
  ZPoly nb = b.num_.shifted_up(b.off_ - m).scaled(l / b.den_c_) * cyc_product(fb) * rb;
  r.num_ = na + nb;
  r.den_c_ = l;
  r.reduce();
  return r;
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  RatFun r;
  r.off_ = a.off_ + b.off_;
  r.num_ = a.num_ * b.num_;
  r.den_c_ = a.den_c_ * b.den_c_;
  r.cyc_ = a.cyc_;
  merge_cyc(r.cyc_, b.cyc_);
  if (a.rest_.is_one())
    r.rest_ = b.rest_;
  else if (b.rest_.is_one())
    r.rest_ = a.rest_;
  else
    r.rest_ = a.rest_ * b.rest_;
  r.reduce();
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  RatFun r;
  r.off_ = -off_;
  mpz_class c = num_.content();
  if (num_.lead_sign() < 0) c = -c;
  ZPoly p = num_.div_exact(c);
  std::vector<std::pair<int, int>> found;
  int bound = 6 * p.degree() + 6;
  for (int d = 1; d <= bound && p.degree() > 0; ++d) {
    int ph = euler_phi(d);
    if (ph > p.degree()) continue;
    int e = 0;
    while (p.degree() >= ph && maybe_root_of_unity(p, d)) {
      auto q = p.div_monic(cyclotomic(d));
      if (!q) break;
      p = std::move(*q);
      ++e;
    }
    if (e > 0) found.emplace_back(d, e);
  }
  // p keeps a positive leading coefficient: each Phi_d is monic
  ZPoly top = rest_ * cyc_product(cyc_);
  top = top.scaled(den_c_);
  mpz_class ac = abs(c);
  if (c < 0) top = -top;
  if (p.degree() == 0) {
    ac *= p.coeff(0);
    p = kOne;
  }
  r.num_ = std::move(top);
  r.den_c_ = ac;
  r.cyc_ = std::move(found);
  r.rest_ = std::move(p);
  r.reduce();
  return r;
}

RatFun RatFun::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  RatFun result(1LL), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

RatFun RatFun::invert_v() const {
  if (is_zero()) return *this;
  RatFun r;
  int sign = 1;
  int shift = -off_ - num_.degree();
  for (auto [d, e] : cyc_) {
    shift += e * euler_phi(d);
    if (d == 1 && (e % 2)) sign = -sign;
  }
  shift += rest_.degree();
  ZPoly rr = rest_.reversed();
  if (rr.lead_sign() < 0) {
    rr = -rr;
    sign = -sign;
  }
  r.off_ = shift;
  r.num_ = sign < 0 ? -num_.reversed() : num_.reversed();
  r.den_c_ = den_c_;
  r.cyc_ = cyc_;
  r.rest_ = std::move(rr);
  r.reduce();
  return r;
}

long double RatFun::eval_v(long double v) const {
  if (is_zero()) return 0.0L;
  long double den = den_c_.get_d();
  for (auto [d, e] : cyc_) den *= std::pow(cyclotomic(d).eval_real(v), static_cast<long double>(e));
  den *= rest_.eval_real(v);
  if (den == 0.0L) throw Error(ErrorKind::PoleHit, "rational function evaluated at a pole");
  return num_.eval_real(v) * std::pow(v, static_cast<long double>(off_)) / den;
}

std::pair<ZPoly, int> RatFun::numerator_poly() const { return {num_, off_}; }

std::pair<ZPoly, int> RatFun::denominator_poly() const {
  return {(rest_ * cyc_product(cyc_)).scaled(den_c_), 0};
}

std::string RatFun::to_string() const {
  if (is_zero()) return "0";
  std::map<int, int> left;
  for (auto [d, e] : cyc_) left[d] = e;
  std::vector<int> groups;
  int sign = 1;
  while (!left.empty()) {
    int best = 0;
    for (auto it = left.rbegin(); it != left.rend() && best == 0; ++it) {
      int m = it->first;
      bool ok = true;
      for (int d = 1; d <= m && ok; ++d)
        if (m % d == 0 && !left.count(d)) ok = false;
      if (ok) best = m;
    }
    if (best == 0) break;
    for (int d = 1; d <= best; ++d) {
      if (best % d) continue;
      if (--left[d] == 0) left.erase(d);
    }
    groups.push_back(best);
    sign = -sign;
  }
  std::vector<std::string> factors;
  if (den_c_ != 1) factors.push_back(den_c_.get_str());
  std::sort(groups.begin(), groups.end());
  for (int m : groups) factors.push_back("(1 - " + q_power_string(m) + ")");
  for (auto [d, e] : left)
    for (int k = 0; k < e; ++k) factors.push_back("(" + laurent_string(cyclotomic(d), 0) + ")");
  if (!rest_.is_one()) factors.push_back("(" + laurent_string(rest_, 0) + ")");

  int terms = 0;
  std::string num = laurent_string(sign < 0 ? -num_ : num_, off_, &terms);
  if (factors.empty()) return num;
  if (terms > 1) num = "(" + num + ")";
  std::string den;
  for (std::size_t i = 0; i < factors.size(); ++i) den += (i ? "*" : "") + factors[i];
  if (factors.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace qcalc::detail
