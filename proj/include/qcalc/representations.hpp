#pragma once

#include <string>
#include <vector>

#include "qcalc/ncalg.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

/// Actions of the q-plane (xy = q yx) on series in z.
///   REP47: x f = qz f(qz),  y f = z f(z)
///   REP48: x f = f(qz),     y f = z f(z)
///   REP49: x f = D_q f,     y f = f(qz)
///   REP120: x f = gamma f(qz), y f = z f(z)
struct RepSpec {
  enum Kind { REP47, REP48, REP49, REP120 };
  Kind kind = REP47;
  ScalarQ gamma = ScalarQ(1);

  static RepSpec rep47() { return {REP47, ScalarQ(1)}; }
  static RepSpec rep48() { return {REP48, ScalarQ(1)}; }
  static RepSpec rep49() { return {REP49, ScalarQ(1)}; }
  static RepSpec rep120(ScalarQ gamma);
  std::string name() const;
};

/// pi(y^l x^k) z^m = coef * z^power; coef is zero when the monomial is killed.
struct MonomialImage {
  ScalarQ coef;
  int power = 0;
};
MonomialImage act_monomial(const RepSpec& rep, int l, int k, int m, const QMode& mode);

/// Single generator actions, applied directly to coefficients.
PowerSeries apply_x(const RepSpec& rep, const PowerSeries& f, const QMode& mode);
PowerSeries apply_y(const RepSpec& rep, const PowerSeries& f, const QMode& mode);

/// pi(a) f for a in the q-plane; REP49 lowers the reliable truncation by the x-degree of a.
PowerSeries act(const RepSpec& rep, const NCElement& a, const PowerSeries& f);

struct RelationReport {
  std::string rep;
  int checked = 0;
  int failures = 0;
  bool pass = false;
};
/// pi(x) pi(y) z^m = q pi(y) pi(x) z^m for m <= m_max.
RelationReport verify_relation(const RepSpec& rep, int m_max = 16, const QMode& mode = QMode::exact());

struct FaithfulnessReport {
  std::vector<int> degrees, ranks, expected;
  bool pass = false;
};
/// Exact rank of (q^{k(k+1)/2} (q^m)^k)_{m < rows, k <= n} for each n <= degree; rows defaults to degree+1.
FaithfulnessReport faithfulness_check(int degree, int rows = -1);
/// Rank of a matrix over the coefficient field.
int exact_rank(std::vector<std::vector<ScalarQ>> m);

struct ReductionReport {
  std::string id;
  std::string rep;
  int m = 0;
  int n = 0;
  /// Both sides acting on z^m, divided by the common power of z.
  PowerSeries lhs, rhs;
  /// The commutative identity the reduction should reproduce.
  PowerSeries target_lhs, target_rhs;
  bool sides_agree = false;
  bool matches_target = false;
  bool pass() const { return sides_agree && matches_target; }
};
/// Applies both sides to z^m and strips z^m (and z^n for homogeneous sides).
ReductionReport reduce_identity(const NCElement& lhs, const NCElement& rhs, const RepSpec& rep, int m, int strip);
/// (x+y)^n = sum [n,k] y^{n-k} x^k under REP47 against the terminating q-binomial sum at z = -q^{n+m+1}.
ReductionReport reduce_binomial(int n, int m);
/// e_q(x+y) = e_q(y) e_q(x) under REP47 against 1phi0(-q^{m+1};;q,z) = e_q(z) E_q(q^{m+1} z).
ReductionReport reduce_exponential(int m, int trunc);
/// Dispatch by identity id ("eq3" with param = n, "eq12" with param = trunc); REP47 only.
ReductionReport reduce_to_commutative(const std::string& id, const RepSpec& rep, int m, int param);

}  // namespace qcalc
