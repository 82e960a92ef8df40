#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "qcalc/detail/ratfun.hpp"
#include "qcalc/error.hpp"

namespace qcalc {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Polynomial in v with rational coefficients, dense, trailing zeros stripped.
class VPoly {
 public:
  VPoly() = default;
  explicit VPoly(std::vector<BigRational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigRational& operator[](int i) const { return c_[i]; }
  const std::vector<BigRational>& coeffs() const { return c_; }

 private:
  std::vector<BigRational> c_;
};

/// How q is interpreted: as the formal indeterminate or as a number in (0,1).
class QMode {
 public:
  static QMode exact() { return QMode(); }
  static QMode numeric(double q);

  bool is_exact() const { return exact_; }
  double q() const { return q_; }
  std::string to_string() const;

 private:
  bool exact_ = true;
  double q_ = 0.0;
};

/// A coefficient: either an exact element of Q(v), q = v^2, or a complex number.
class ScalarQ {
 public:
  using Numeric = std::complex<double>;

  ScalarQ() = default;
  ScalarQ(int c) : v_(detail::RatFun(static_cast<long long>(c))) {}
  ScalarQ(long long c) : v_(detail::RatFun(c)) {}
  ScalarQ(const BigRational& c) : v_(detail::RatFun(c)) {}
  explicit ScalarQ(detail::RatFun r) : v_(std::move(r)) {}

  static ScalarQ numeric(Numeric z);
  static ScalarQ v_power(int k) { return ScalarQ(detail::RatFun::v_power(k)); }
  static ScalarQ q_power(int k) { return v_power(2 * k); }
  /// num/den with rational coefficients; den must be nonzero.
  static ScalarQ from_vpolys(const VPoly& num, const VPoly& den);

  bool is_exact() const { return std::holds_alternative<detail::RatFun>(v_); }
  bool is_zero() const;
  bool is_constant() const;
  bool is_one() const;
  BigRational as_rational() const;
  const detail::RatFun& exact() const { return std::get<detail::RatFun>(v_); }
  Numeric numeric_value() const { return std::get<Numeric>(v_); }

  /// Numeric value; exact values are evaluated at the given q.
  Numeric evaluate(double q) const;
  ScalarQ in_mode(const QMode& mode) const;

  ScalarQ operator-() const;
  ScalarQ& operator+=(const ScalarQ& b);
  ScalarQ& operator-=(const ScalarQ& b);
  ScalarQ& operator*=(const ScalarQ& b);
  ScalarQ& operator/=(const ScalarQ& b);
  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
  friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }
  friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return (a - b).is_zero(); }

  ScalarQ inverse() const;
  ScalarQ pow(long long n) const;
  /// q -> 1/q (v -> 1/v) on exact values.
  ScalarQ invert_q() const;

  VPoly numerator() const;
  VPoly denominator() const;

  /// True if the value prints with a leading minus sign.
  bool display_negative() const;
  std::string to_string() const;

 private:
  std::variant<detail::RatFun, Numeric> v_;
};

/// Renders  c1*m1 + c2*m2 ...  with signs pulled out and compound
/// coefficients parenthesized; an empty monomial is a constant term.
std::string render_terms(const std::vector<std::pair<ScalarQ, std::string>>& terms);

enum class ArithOp { Add, Sub, Mul, Div };
ScalarQ scalar_arith(const ScalarQ& a, const ScalarQ& b, ArithOp op);

/// q itself in the given mode.
ScalarQ q_of(const QMode& mode);

/// (a; base)_k = prod_{j<k} (1 - base^j a).
ScalarQ qshifted_factorial(const ScalarQ& a, int k, const ScalarQ& base);
ScalarQ qshifted_factorial(const ScalarQ& a, int k, const QMode& mode);
/// (q;q)_k in the given mode.
ScalarQ qfactorial(int k, const QMode& mode);
ScalarQ qbinomial(int n, int k, const QMode& mode);

struct InfiniteProduct {
  std::complex<double> value;
  int terms = 0;
};
/// (a;q)_inf, stopping once |q^j a| < tol; a factor within 1e-12 of zero makes the product exactly zero.
InfiniteProduct qpochhammer_infinite(std::complex<double> a, double q, double tol = 1e-17);
std::complex<double> qpochhammer_inf(std::complex<double> a, double q);

/// ScalarQ pair re + i*im for identities carrying an explicit i.
struct GaussianQ {
  ScalarQ re, im;

  GaussianQ() = default;
  GaussianQ(ScalarQ r) : re(std::move(r)) {}
  GaussianQ(ScalarQ r, ScalarQ i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianQ i_power(int k);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianQ operator-() const { return {-re, -im}; }
  friend GaussianQ operator+(const GaussianQ& a, const GaussianQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianQ operator-(const GaussianQ& a, const GaussianQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianQ operator*(const GaussianQ& a, const GaussianQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianQ& a, const GaussianQ& b) { return (a - b).is_zero(); }
  GaussianQ invert_q() const { return {re.invert_q(), im.invert_q()}; }
  std::string to_string() const;
};

}  // namespace qcalc
