#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcalc::detail {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
///
/// Coefficients live in machine words while every |c| stays below 2^52 and are
/// promoted to GMP integers as soon as an operation would leave that range.
/// Results are demoted again when they fit, so the fast path is the common one.
class ZPoly {
 public:
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 52;

  ZPoly() = default;
  explicit ZPoly(std::int64_t c);
  explicit ZPoly(const mpz_class& c);

  static ZPoly from_small(std::vector<std::int64_t> coeffs);
  static ZPoly from_big(std::vector<mpz_class> coeffs);
  static ZPoly monomial(std::int64_t c, int degree);

  bool is_zero() const { return small_.empty() && big_.empty(); }
  bool is_one() const;
  bool is_small() const { return !is_big_; }
  int degree() const;
  int size() const { return degree() + 1; }
  int low_order() const;

  mpz_class coeff(int i) const;
  int lead_sign() const;
  int const_sign() const;

  ZPoly shifted_up(int k) const;
  ZPoly shifted_down(int k) const;
  ZPoly reversed() const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b);

  ZPoly scaled(const mpz_class& c) const;
  ZPoly div_exact(const mpz_class& c) const;
  mpz_class content() const;
  ZPoly primitive_part() const;

  /// Exact division by a monic divisor; nullopt if the remainder is nonzero.
  std::optional<ZPoly> div_monic(const ZPoly& d) const;
  /// Exact division by an arbitrary divisor known to divide this polynomial.
  ZPoly div_exact(const ZPoly& d) const;

  std::complex<long double> eval(std::complex<long double> z) const;
  long double eval_real(long double x) const;
  long double norm1() const;

  /// Primitive gcd with positive leading coefficient.
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

 private:
  void normalize();
  std::vector<mpz_class> to_big() const;
  void demote_if_possible();

  bool is_big_ = false;
  std::vector<std::int64_t> small_;
  std::vector<mpz_class> big_;
};

int euler_phi(int n);

/// The d-th cyclotomic polynomial Phi_d(v); computed once and cached.
const ZPoly& cyclotomic(int d);

}  // namespace qcalc::detail
