#include "qcalc/detail/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qcalc::detail {

namespace {

bool fits_small(const mpz_class& c) {
  return mpz_sizeinbase(c.get_mpz_t(), 2) <= 52;
}

std::int64_t to_i64(const mpz_class& c) { return static_cast<std::int64_t>(c.get_si()); }

mpz_class from_i64(std::int64_t c) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(c));
  return r;
}

mpz_class from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi;
  mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
  hi <<= 64;
  mpz_class lo;
  mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = hi + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

ZPoly::ZPoly(std::int64_t c) {
  if (c != 0) {
    if (c >= kSmallLimit || c <= -kSmallLimit) {
      is_big_ = true;
      big_.push_back(from_i64(c));
    } else {
      small_.push_back(c);
    }
  }
}

ZPoly::ZPoly(const mpz_class& c) {
  if (c != 0) {
    if (fits_small(c)) {
      small_.push_back(to_i64(c));
    } else {
      is_big_ = true;
      big_.push_back(c);
    }
  }
}

ZPoly ZPoly::from_small(std::vector<std::int64_t> coeffs) {
  ZPoly p;
  bool ok = std::all_of(coeffs.begin(), coeffs.end(),
                        [](std::int64_t c) { return c < kSmallLimit && c > -kSmallLimit; });
  if (ok) {
    p.small_ = std::move(coeffs);
  } else {
    p.is_big_ = true;
    p.big_.reserve(coeffs.size());
    for (auto c : coeffs) p.big_.push_back(from_i64(c));
  }
  p.normalize();
  return p;
}

ZPoly ZPoly::from_big(std::vector<mpz_class> coeffs) {
  ZPoly p;
  p.is_big_ = true;
  p.big_ = std::move(coeffs);
  p.normalize();
  return p;
}

ZPoly ZPoly::monomial(std::int64_t c, int degree) {
  return ZPoly(c).shifted_up(degree);
}

void ZPoly::normalize() {
  if (is_big_) {
    while (!big_.empty() && big_.back() == 0) big_.pop_back();
    demote_if_possible();
  } else {
    while (!small_.empty() && small_.back() == 0) small_.pop_back();
  }
}

void ZPoly::demote_if_possible() {
  if (!is_big_) return;
  for (const auto& c : big_)
    if (!fits_small(c)) return;
  small_.clear();
  small_.reserve(big_.size());
  for (const auto& c : big_) small_.push_back(to_i64(c));
  big_.clear();
  is_big_ = false;
}

std::vector<mpz_class> ZPoly::to_big() const {
  if (is_big_) return big_;
  std::vector<mpz_class> out;
  out.reserve(small_.size());
  for (auto c : small_) out.push_back(from_i64(c));
  return out;
}

bool ZPoly::is_one() const {
  if (is_big_) return false;
  return small_.size() == 1 && small_[0] == 1;
}

int ZPoly::degree() const {
  return is_big_ ? static_cast<int>(big_.size()) - 1 : static_cast<int>(small_.size()) - 1;
}

int ZPoly::low_order() const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (is_big_ ? big_[i] != 0 : small_[i] != 0) return i;
  }
  return -1;
}

mpz_class ZPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return is_big_ ? big_[i] : from_i64(small_[i]);
}

int ZPoly::lead_sign() const {
  if (is_zero()) return 0;
  return is_big_ ? sgn(big_.back()) : (small_.back() > 0 ? 1 : -1);
}

int ZPoly::const_sign() const {
  if (is_zero()) return 0;
  if (is_big_) return sgn(big_[0]);
  return small_[0] > 0 ? 1 : (small_[0] < 0 ? -1 : 0);
}

ZPoly ZPoly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  ZPoly r = *this;
  if (is_big_)
    r.big_.insert(r.big_.begin(), k, mpz_class(0));
  else
    r.small_.insert(r.small_.begin(), k, 0);
  return r;
}

ZPoly ZPoly::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  ZPoly r = *this;
  if (is_big_)
    r.big_.erase(r.big_.begin(), r.big_.begin() + std::min<int>(k, r.big_.size()));
  else
    r.small_.erase(r.small_.begin(), r.small_.begin() + std::min<int>(k, r.small_.size()));
  r.normalize();
  return r;
}

ZPoly ZPoly::reversed() const {
  ZPoly r = *this;
  if (is_big_)
    std::reverse(r.big_.begin(), r.big_.end());
  else
    std::reverse(r.small_.begin(), r.small_.end());
  r.normalize();
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.small_) c = -c;
  for (auto& c : r.big_) c = -c;
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.is_big_ && !b.is_big_) {
    const auto& x = a.small_.size() >= b.small_.size() ? a.small_ : b.small_;
    const auto& y = a.small_.size() >= b.small_.size() ? b.small_ : a.small_;
    std::vector<std::int64_t> out(x);
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return ZPoly::from_small(std::move(out));
  }
  auto x = a.to_big();
  auto y = b.to_big();
  if (x.size() < y.size()) std::swap(x, y);
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
  return ZPoly::from_big(std::move(x));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  if (!a.is_big_ && !b.is_big_) {
    const auto& x = a.small_;
    const auto& y = b.small_;
    std::size_t n = x.size() + y.size() - 1;
    std::vector<__int128> acc(n, 0);
    // each product is < 2^104 so a 128-bit accumulator holds 2^23 of them
    bool overflow = std::min(x.size(), y.size()) >= (std::size_t{1} << 22);
    if (!overflow) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        __int128 xi = x[i];
        if (xi == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] += xi * y[j];
      }
      const __int128 lim = ZPoly::kSmallLimit;
      bool small = true;
      for (auto v : acc)
        if (v >= lim || v <= -lim) {
          small = false;
          break;
        }
      if (small) {
        std::vector<std::int64_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(acc[i]);
        return ZPoly::from_small(std::move(out));
      }
      std::vector<mpz_class> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = from_i128(acc[i]);
      return ZPoly::from_big(std::move(out));
    }
  }
  auto x = a.to_big();
  auto y = b.to_big();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
  return ZPoly::from_big(std::move(out));
}

bool operator==(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return false;
  if (!a.is_big_ && !b.is_big_) return a.small_ == b.small_;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

ZPoly ZPoly::scaled(const mpz_class& c) const {
  if (c == 0 || is_zero()) return ZPoly();
  if (c == 1) return *this;
  if (!is_big_ && fits_small(c)) {
    __int128 cc = to_i64(c);
    const __int128 lim = kSmallLimit;
    std::vector<std::int64_t> out(small_.size());
    bool ok = true;
    for (std::size_t i = 0; i < small_.size(); ++i) {
      __int128 v = cc * small_[i];
      if (v >= lim || v <= -lim) {
        ok = false;
        break;
      }
      out[i] = static_cast<std::int64_t>(v);
    }
    if (ok) return from_small(std::move(out));
  }
  auto x = to_big();
  for (auto& v : x) v *= c;
  return from_big(std::move(x));
}

ZPoly ZPoly::div_exact(const mpz_class& c) const {
  if (c == 0) throw std::domain_error("division of polynomial by zero");
  if (c == 1) return *this;
  if (!is_big_ && fits_small(c)) {
    std::int64_t cc = to_i64(c);
    std::vector<std::int64_t> out(small_);
    for (auto& v : out) v /= cc;
    return from_small(std::move(out));
  }
  auto x = to_big();
  for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return from_big(std::move(x));
}

mpz_class ZPoly::content() const {
  if (is_zero()) return 0;
  if (!is_big_) {
    std::int64_t g = 0;
    for (auto c : small_) {
      std::int64_t a = c < 0 ? -c : c;
      while (a != 0) {
        std::int64_t t = g % a;
        g = a;
        a = t;
      }
      if (g == 1) break;
    }
    return from_i64(g);
  }
  mpz_class g = 0;
  for (const auto& c : big_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class c = content();
  if (lead_sign() < 0) c = -c;
  return div_exact(c);
}

std::optional<ZPoly> ZPoly::div_monic(const ZPoly& d) const {
  int n = degree(), m = d.degree();
  if (m < 0) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return ZPoly();
  if (n < m) return std::nullopt;
  if (!is_big_ && !d.is_big_) {
    std::vector<__int128> r(small_.begin(), small_.end());
    std::vector<std::int64_t> q(n - m + 1);
    const __int128 lim = kSmallLimit;
    bool ok = true;
    for (int i = n - m; i >= 0 && ok; --i) {
      __int128 c = r[i + m];
      if (c >= lim || c <= -lim) {
        ok = false;
        break;
      }
      q[i] = static_cast<std::int64_t>(c);
      if (c == 0) continue;
      for (int j = 0; j <= m; ++j) {
        r[i + j] -= c * d.small_[j];
        if (r[i + j] >= (lim << 20) || r[i + j] <= -(lim << 20)) ok = false;
      }
    }
    if (ok) {
      for (int i = 0; i < m; ++i)
        if (r[i] != 0) return std::nullopt;
      return from_small(std::move(q));
    }
  }
  auto r = to_big();
  auto dd = d.to_big();
  std::vector<mpz_class> q(n - m + 1);
  for (int i = n - m; i >= 0; --i) {
    q[i] = r[i + m];
    if (q[i] == 0) continue;
    for (int j = 0; j <= m; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), dd[j].get_mpz_t());
  }
  for (int i = 0; i < m; ++i)
    if (r[i] != 0) return std::nullopt;
  return from_big(std::move(q));
}

ZPoly ZPoly::div_exact(const ZPoly& d) const {
  int n = degree(), m = d.degree();
  if (m < 0) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return ZPoly();
  if (n < m) throw std::logic_error("inexact polynomial division");
  auto r = to_big();
  auto dd = d.to_big();
  const mpz_class& lc = dd.back();
  std::vector<mpz_class> q(n - m + 1);
  for (int i = n - m; i >= 0; --i) {
    if (r[i + m] == 0) continue;
    if (!mpz_divisible_p(r[i + m].get_mpz_t(), lc.get_mpz_t())) throw std::logic_error("inexact polynomial division");
    mpz_divexact(q[i].get_mpz_t(), r[i + m].get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= m; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), dd[j].get_mpz_t());
  }
  for (int i = 0; i < m; ++i)
    if (r[i] != 0) throw std::logic_error("inexact polynomial division");
  return from_big(std::move(q));
}

std::complex<long double> ZPoly::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (int i = degree(); i >= 0; --i) {
    long double c = is_big_ ? static_cast<long double>(big_[i].get_d()) : static_cast<long double>(small_[i]);
    acc = acc * z + c;
  }
  return acc;
}

long double ZPoly::eval_real(long double x) const {
  long double acc = 0;
  for (int i = degree(); i >= 0; --i) {
    long double c = is_big_ ? static_cast<long double>(big_[i].get_d()) : static_cast<long double>(small_[i]);
    acc = acc * x + c;
  }
  return acc;
}

long double ZPoly::norm1() const {
  long double s = 0;
  if (is_big_)
    for (const auto& c : big_) s += std::fabs(static_cast<long double>(c.get_d()));
  else
    for (auto c : small_) s += std::fabs(static_cast<long double>(c));
  return s;
}

namespace {

// pseudo-remainder of a by b, both big
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  int m = static_cast<int>(b.size()) - 1;
  const mpz_class& lc = b.back();
  while (static_cast<int>(a.size()) - 1 >= m && !a.empty()) {
    int n = static_cast<int>(a.size()) - 1;
    mpz_class c = a.back();
    for (auto& v : a) v *= lc;
    for (int j = 0; j <= m; ++j) a[n - m + j] -= c * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  ZPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return ZPoly(1);
    auto r = prem(x.to_big(), y.to_big());
    x = y;
    y = from_big(std::move(r)).primitive_part();
  }
  return x.primitive_part();
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const ZPoly& cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ZPoly>> cache;
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
  }
  ZPoly p = ZPoly::monomial(1, d) - ZPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = *p.div_monic(cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(d, std::make_unique<ZPoly>(std::move(p)));
  return *it->second;
}

}  // namespace qcalc::detail
