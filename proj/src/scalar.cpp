#include "qcalc/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace qcalc {

using detail::RatFun;
using detail::ZPoly;

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

VPoly::VPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QMode QMode::numeric(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidArgument, "numeric q must lie in (0,1)");
  QMode m;
  m.exact_ = false;
  m.q_ = q;
  return m;
}

std::string QMode::to_string() const {
  if (exact_) return "exact";
  std::ostringstream os;
  os.precision(17);
  os << q_;
  return os.str();
}

namespace {

ScalarQ::Numeric to_numeric_or_throw(const ScalarQ& s) {
  if (!s.is_exact()) return s.numeric_value();
  if (!s.is_constant()) throw Error(ErrorKind::ModeMismatch, "symbolic value combined with a numeric one");
  return {s.as_rational().get_d(), 0.0};
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(16);
  os << x;
  return os.str();
}

}  // namespace

ScalarQ ScalarQ::numeric(Numeric z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::InvalidArgument, "numeric scalar must be finite");
  ScalarQ s;
  s.v_ = z;
  return s;
}

ScalarQ ScalarQ::from_vpolys(const VPoly& num, const VPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator polynomial");
  auto clear = [](const VPoly& p, BigInt& scale) {
    scale = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (scale / c.get_den()));
    return ZPoly::from_big(std::move(out));
  };
  BigInt ln, ld;
  ZPoly n = clear(num, ln);
  ZPoly d = clear(den, ld);
  RatFun r = RatFun(std::move(n), 0) * RatFun(make_rational(ld, ln)) * RatFun(std::move(d), 0).inverse();
  return ScalarQ(std::move(r));
}

bool ScalarQ::is_zero() const {
  if (is_exact()) return exact().is_zero();
  return numeric_value() == Numeric(0.0, 0.0);
}

bool ScalarQ::is_constant() const { return !is_exact() || exact().is_constant(); }

bool ScalarQ::is_one() const { return is_exact() && exact().is_constant() && exact().constant_value() == 1; }

BigRational ScalarQ::as_rational() const {
  if (!is_exact() || !exact().is_constant()) throw Error(ErrorKind::ModeMismatch, "value is not a rational constant");
  return exact().constant_value();
}

ScalarQ::Numeric ScalarQ::evaluate(double q) const {
  if (!is_exact()) return numeric_value();
  if (!(q > 0.0)) throw Error(ErrorKind::InvalidArgument, "evaluation requires q > 0");
  return {static_cast<double>(exact().eval_v(std::sqrt(static_cast<long double>(q)))), 0.0};
}

ScalarQ ScalarQ::in_mode(const QMode& mode) const {
  if (mode.is_exact() || !is_exact()) return *this;
  return numeric(evaluate(mode.q()));
}

ScalarQ ScalarQ::operator-() const {
  if (is_exact()) return ScalarQ(-exact());
  return numeric(-numeric_value());
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& b) {
  if (is_exact() && b.is_exact())
    v_ = exact() + b.exact();
  else
    v_ = to_numeric_or_throw(*this) + to_numeric_or_throw(b);
  return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& b) {
  if (is_exact() && b.is_exact())
    v_ = exact() - b.exact();
  else
    v_ = to_numeric_or_throw(*this) - to_numeric_or_throw(b);
  return *this;
}

ScalarQ& ScalarQ::operator*=(const ScalarQ& b) {
  if (is_exact() && b.is_exact())
    v_ = exact() * b.exact();
  else
    v_ = to_numeric_or_throw(*this) * to_numeric_or_throw(b);
  return *this;
}

ScalarQ& ScalarQ::operator/=(const ScalarQ& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
  if (is_exact() && b.is_exact())
    v_ = exact() * b.exact().inverse();
  else
    v_ = to_numeric_or_throw(*this) / to_numeric_or_throw(b);
  return *this;
}

ScalarQ ScalarQ::inverse() const { return ScalarQ(1) / *this; }

ScalarQ ScalarQ::pow(long long n) const {
  if (is_exact()) {
    if (n < 0 && is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return ScalarQ(exact().pow(n));
  }
  if (n < 0 && is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
  Numeric r(1.0, 0.0), b = numeric_value();
  long long m = n < 0 ? -n : n;
  while (m > 0) {
    if (m & 1) r *= b;
    m >>= 1;
    if (m) b *= b;
  }
  return numeric(n < 0 ? Numeric(1.0, 0.0) / r : r);
}

ScalarQ ScalarQ::invert_q() const {
  if (!is_exact()) throw Error(ErrorKind::ModeMismatch, "q -> 1/q needs an exact value");
  return ScalarQ(exact().invert_v());
}

VPoly ScalarQ::numerator() const {
  if (!is_exact()) throw Error(ErrorKind::ModeMismatch, "numerator of a numeric value");
  auto [p, off] = exact().numerator_poly();
  if (off > 0) p = p.shifted_up(off);
  std::vector<BigRational> c;
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
  return VPoly(std::move(c));
}

VPoly ScalarQ::denominator() const {
  if (!is_exact()) throw Error(ErrorKind::ModeMismatch, "denominator of a numeric value");
  auto [p, ignored] = exact().denominator_poly();
  int off = exact().numerator_poly().second;
  if (off < 0) p = p.shifted_up(-off);
  std::vector<BigRational> c;
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
  return VPoly(std::move(c));
}

bool ScalarQ::display_negative() const {
  std::string s = to_string();
  return !s.empty() && s[0] == '-';
}

std::string ScalarQ::to_string() const {
  if (is_exact()) return exact().to_string();
  Numeric z = numeric_value();
  if (z.imag() == 0.0) return format_double(z.real());
  if (z.real() == 0.0) return format_double(z.imag()) + "*i";
  std::string im = format_double(std::abs(z.imag()));
  return "(" + format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + im + "*i)";
}

namespace {

bool compound(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && ch == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') return true;
  }
  return false;
}

}  // namespace

std::string render_terms(const std::vector<std::pair<ScalarQ, std::string>>& terms) {
  std::string out;
  for (const auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    bool neg = c.display_negative();
    std::string cs = neg ? (-c).to_string() : c.to_string();
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty()) {
      out += compound(cs) && neg ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += (compound(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

ScalarQ scalar_arith(const ScalarQ& a, const ScalarQ& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

ScalarQ q_of(const QMode& mode) {
  if (mode.is_exact()) return ScalarQ::q_power(1);
  return ScalarQ::numeric({mode.q(), 0.0});
}

ScalarQ qshifted_factorial(const ScalarQ& a, int k, const ScalarQ& base) {
  if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "q-shifted factorial needs k >= 0");
  ScalarQ r(1), t = a;
  for (int j = 0; j < k; ++j) {
    r *= ScalarQ(1) - t;
    t *= base;
  }
  return r;
}

ScalarQ qshifted_factorial(const ScalarQ& a, int k, const QMode& mode) {
  return qshifted_factorial(a.in_mode(mode), k, q_of(mode));
}

ScalarQ qfactorial(int k, const QMode& mode) {
  if (!mode.is_exact()) return qshifted_factorial(q_of(mode), k, q_of(mode));
  static std::mutex mu;
  static std::vector<ScalarQ> table{ScalarQ(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    int j = static_cast<int>(table.size());
    table.push_back(table.back() * (ScalarQ(1) - ScalarQ::q_power(j)));
  }
  return table[k];
}

ScalarQ qbinomial(int n, int k, const QMode& mode) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorKind::IndexOutOfRange, "q-binomial needs 0 <= k <= n");
  if (!mode.is_exact()) return qfactorial(n, mode) / (qfactorial(k, mode) * qfactorial(n - k, mode));
  static std::mutex mu;
  static std::map<std::pair<int, int>, ScalarQ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  ScalarQ r = qfactorial(n, mode) / (qfactorial(k, mode) * qfactorial(n - k, mode));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), r);
  return r;
}

InfiniteProduct qpochhammer_infinite(std::complex<double> a, double q, double tol) {
  if (!(std::abs(q) < 1.0)) throw Error(ErrorKind::NonConvergent, "infinite q-product needs |q| < 1");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  InfiniteProduct r{{1.0, 0.0}, 0};
  std::complex<double> t = a;
  while (std::abs(t) >= tol && r.terms < 1000000) {
    if (std::abs(1.0 - t) < 1e-12) {
      r.value = 0.0;
      ++r.terms;
      return r;
    }
    r.value *= 1.0 - t;
    t *= q;
    ++r.terms;
  }
  return r;
}

std::complex<double> qpochhammer_inf(std::complex<double> a, double q) {
  return qpochhammer_infinite(a, q, 1e-18).value;
}

GaussianQ GaussianQ::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {ScalarQ(1), ScalarQ(0)};
    case 1: return {ScalarQ(0), ScalarQ(1)};
    case 2: return {ScalarQ(-1), ScalarQ(0)};
    default: return {ScalarQ(0), ScalarQ(-1)};
  }
}

std::string GaussianQ::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return "(" + im.to_string() + ")*i";
  return re.to_string() + " + (" + im.to_string() + ")*i";
}

}  // namespace qcalc
