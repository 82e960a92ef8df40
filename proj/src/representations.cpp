#include "qcalc/representations.hpp"

#include <algorithm>

#include "qcalc/qfunctions.hpp"

namespace qcalc {

namespace {

ScalarQ qint(int n, const ScalarQ& q) {
  ScalarQ s(0), p(1);
  for (int j = 0; j < n; ++j) {
    s += p;
    p = p * q;
  }
  return s;
}

int low_order(const PowerSeries& f) {
  for (int k = 0; k <= f.trunc(); ++k)
    if (!f[k].is_zero()) return k;
  return f.trunc() + 1;
}

PowerSeries shift_down(const PowerSeries& f, int s) {
  int n = std::max(f.trunc() - s, 0);
  std::vector<ScalarQ> c(n + 1, ScalarQ(0));
  for (int k = s; k <= f.trunc(); ++k) c[k - s] = f[k];
  return PowerSeries(n, std::move(c), f.is_polynomial());
}

void require_qplane(const NCElement& a) {
  if (a.algebra()->name() != "QPLANE")
    throw Error(ErrorKind::AlgebraMismatch, "representations act on the q-plane, not " + a.algebra()->name());
}

}  // namespace

RepSpec RepSpec::rep120(ScalarQ gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::InvalidArgument, "gamma must be nonzero");
  return {REP120, std::move(gamma)};
}

std::string RepSpec::name() const {
  switch (kind) {
    case REP47: return "rep47";
    case REP48: return "rep48";
    case REP49: return "rep49";
    case REP120: return "rep120";
  }
  return "?";
}

MonomialImage act_monomial(const RepSpec& rep, int l, int k, int m, const QMode& mode) {
  ScalarQ q = q_of(mode);
  switch (rep.kind) {
    case RepSpec::REP47: return {q.pow(static_cast<long long>(k) * (k + 1) / 2 + static_cast<long long>(k) * m), k + l + m};
    case RepSpec::REP48: return {q.pow(static_cast<long long>(k) * m), m + l};
    case RepSpec::REP49: {
      if (k > m) return {ScalarQ(0), 0};
      ScalarQ c(1);
      for (int j = 0; j < k; ++j) c = c * qint(m - j, q);
      return {c * q.pow(static_cast<long long>(l) * (m - k)), m - k};
    }
    case RepSpec::REP120:
      return {rep.gamma.in_mode(mode).pow(k) * q.pow(static_cast<long long>(k) * m), m + l};
  }
  return {ScalarQ(0), 0};
}

PowerSeries apply_x(const RepSpec& rep, const PowerSeries& f, const QMode& mode) {
  ScalarQ q = q_of(mode);
  switch (rep.kind) {
    case RepSpec::REP47: return (q * f.dilate(q)).shift_up(1);
    case RepSpec::REP48: return f.dilate(q);
    case RepSpec::REP49: return qderiv(f, mode);
    case RepSpec::REP120: return rep.gamma.in_mode(mode) * f.dilate(q);
  }
  return f;
}

PowerSeries apply_y(const RepSpec& rep, const PowerSeries& f, const QMode& mode) {
  if (rep.kind == RepSpec::REP49) return f.dilate(q_of(mode));
  return f.shift_up(1);
}

PowerSeries act(const RepSpec& rep, const NCElement& a, const PowerSeries& f) {
  require_qplane(a);
  const Algebra& alg = *a.algebra();
  const QMode& mode = alg.mode();
  int ix = alg.index("x");
  int kmax = 0;
  for (const auto& [w, c] : a.terms()) kmax = std::max<int>(kmax, std::count(w.begin(), w.end(), ix));
  int out = f.trunc();
  if (rep.kind == RepSpec::REP47) out = std::min(out, a.trunc() + low_order(f));
  if (rep.kind == RepSpec::REP49 && !f.is_polynomial()) out = std::max(f.trunc() - kmax, 0);
  std::vector<ScalarQ> acc(out + 1, ScalarQ(0));
  for (const auto& [w, c] : a.terms()) {
    int k = std::count(w.begin(), w.end(), ix);
    int l = static_cast<int>(w.size()) - k;
    for (int m = 0; m <= f.trunc(); ++m) {
      if (f[m].is_zero()) continue;
      auto img = act_monomial(rep, l, k, m, mode);
      if (img.coef.is_zero() || img.power > out) continue;
      acc[img.power] += c * f[m].in_mode(mode) * img.coef;
    }
  }
  return PowerSeries(out, std::move(acc), f.is_polynomial());
}

RelationReport verify_relation(const RepSpec& rep, int m_max, const QMode& mode) {
  RelationReport r;
  r.rep = rep.name();
  ScalarQ q = q_of(mode);
  for (int m = 0; m <= m_max; ++m) {
    auto f = PowerSeries::monomial(m_max + 2, m);
    auto xy = apply_x(rep, apply_y(rep, f, mode), mode);
    auto yx = apply_y(rep, apply_x(rep, f, mode), mode);
    ++r.checked;
    if (!(xy == q * yx)) ++r.failures;
  }
  r.pass = r.failures == 0;
  return r;
}

int exact_rank(std::vector<std::vector<ScalarQ>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    ScalarQ inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      ScalarQ f = m[r][c] * inv;
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

FaithfulnessReport faithfulness_check(int degree, int rows) {
  if (rows < 0) rows = degree + 1;
  FaithfulnessReport rep;
  ScalarQ q = ScalarQ::q_power(1);
  rep.pass = true;
  for (int n = 0; n <= degree; ++n) {
    std::vector<std::vector<ScalarQ>> mat(rows, std::vector<ScalarQ>(n + 1));
    for (int m = 0; m < rows; ++m)
      for (int k = 0; k <= n; ++k) mat[m][k] = q.pow(k * (k + 1) / 2 + k * m);
    int rk = exact_rank(mat);
    rep.degrees.push_back(n);
    rep.ranks.push_back(rk);
    rep.expected.push_back(n + 1);
    if (rk != n + 1) rep.pass = false;
  }
  return rep;
}

ReductionReport reduce_identity(const NCElement& lhs, const NCElement& rhs, const RepSpec& rep, int m, int strip) {
  ReductionReport r;
  r.rep = rep.name();
  r.m = m;
  int t = std::max(lhs.trunc(), rhs.trunc()) + m;
  auto f = PowerSeries::monomial(t, m);
  r.lhs = shift_down(act(rep, lhs, f), strip);
  r.rhs = shift_down(act(rep, rhs, f), strip);
  r.sides_agree = r.lhs == r.rhs;
  return r;
}

ReductionReport reduce_binomial(int n, int m) {
  const QMode X = QMode::exact();
  auto alg = algebras::qplane(X);
  auto x = NCElement::gen(alg, n, "x"), y = NCElement::gen(alg, n, "y");
  NCElement rhs(alg, n);
  for (int k = 0; k <= n; ++k) rhs += qbinomial(n, k, X) * (y.pow(n - k) * x.pow(k));
  auto r = reduce_identity((x + y).pow(n), rhs, RepSpec::rep47(), m, m + n);
  r.id = "eq3";
  r.n = n;
  ScalarQ q = ScalarQ::q_power(1);
  ScalarQ tl = qshifted_factorial(-q.pow(m + 1), n, X);
  ScalarQ z = -q.pow(m + n + 1), tr(0);
  for (int k = 0; k <= n; ++k) tr += qshifted_factorial(q.pow(-n), k, X) / qfactorial(k, X) * z.pow(k);
  r.target_lhs = PowerSeries::constant(0, tl);
  r.target_rhs = PowerSeries::constant(0, tr);
  r.matches_target = r.lhs.trunc() == 0 && r.lhs == r.target_lhs && r.target_lhs == r.target_rhs;
  return r;
}

ReductionReport reduce_exponential(int m, int trunc) {
  const QMode X = QMode::exact();
  auto alg = algebras::qplane(X);
  auto x = NCElement::gen(alg, trunc, "x"), y = NCElement::gen(alg, trunc, "y");
  auto e = series_of(NamedSeries::eq(), trunc, X);
  auto r = reduce_identity(compose_series(e, x + y), compose_series(e, y) * compose_series(e, x), RepSpec::rep47(), m, m);
  r.id = "eq12";
  ScalarQ q = ScalarQ::q_power(1);
  r.target_lhs = series_of(NamedSeries::phi10(-q.pow(m + 1)), trunc, X);
  r.target_rhs = e * series_of(NamedSeries::big_eq(), trunc, X).dilate(q.pow(m + 1));
  r.matches_target = r.lhs.trunc() == trunc && r.lhs == r.target_lhs && r.target_lhs == r.target_rhs;
  return r;
}

ReductionReport reduce_to_commutative(const std::string& id, const RepSpec& rep, int m, int param) {
  if (rep.kind != RepSpec::REP47)
    throw Error(ErrorKind::InvalidArgument, "commutative targets are tabulated for rep47 only");
  if (id == "eq3") return reduce_binomial(param, m);
  if (id == "eq12") return reduce_exponential(m, param);
  throw Error(ErrorKind::UnknownIdentity, "no commutative reduction registered for " + id);
}

}  // namespace qcalc
