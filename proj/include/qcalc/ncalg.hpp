#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcalc/scalar.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

/// A generator word; each char is a generator index.
using Word = std::string;
using Combination = std::vector<std::pair<Word, ScalarQ>>;

/// Ordered generators with degrees and oriented rewrite rules  a*b -> sum c_i w_i.
class Algebra {
 public:
  Algebra(std::string name, std::vector<std::string> generators, std::vector<int> degrees, QMode mode);

  /// Adds the rule  lhs[0]*lhs[1] -> rhs, words written as generator-name lists.
  void add_rule(const std::string& a, const std::string& b,
                const std::vector<std::pair<std::vector<std::string>, ScalarQ>>& rhs);

  const std::string& name() const { return name_; }
  const QMode& mode() const { return mode_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::string& generator(int i) const { return gens_[i]; }
  int index(const std::string& g) const;
  Word word(const std::vector<std::string>& names) const;
  int degree(const Word& w) const;
  int degree_of(int g) const { return deg_[g]; }
  bool has_rule(int a, int b) const;
  const Combination* rule(int a, int b) const;
  std::vector<std::pair<int, int>> rule_pairs() const;
  bool is_normal(const Word& w) const;

  /// Exhaustive rewriting of a word; memoized.
  const Combination& normal_form(const Word& w) const;

  std::string render_word(const Word& w) const;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<int> deg_;
  QMode mode_;
  std::map<std::pair<int, int>, Combination> rules_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<Word, std::unique_ptr<Combination>> memo_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

namespace algebras {
/// y < x with  x*y -> q y*x.
AlgebraPtr qplane(const QMode& mode);
/// c < y < x,  x*y -> q y*x + (1-q) c, c central of degree 2.
AlgebraPtr qheis(const QMode& mode);
/// y < z < x,  x*y -> y*x + (1-q) z, x*z -> q z*x, z*y -> q y*z, deg z = 2.
AlgebraPtr qheisz(const QMode& mode);
/// w < x < z,  x*w -> q w*x + (1-q) z^2, z*x -> q^-1 x*z, z*w -> q w*z.
AlgebraPtr gf98(const QMode& mode);
/// w < x < v,  x*w -> q w*x + (1-q) v, v*x -> q^-2 x*v, v*w -> q^2 w*v, deg v = 2.
AlgebraPtr gf103(const QMode& mode);
/// No relations.
AlgebraPtr free_algebra(const std::vector<std::string>& gens, const QMode& mode);
/// g1 < ... < gn with  gi*gj -> q gj*gi for i > j.
AlgebraPtr skew(int n, const QMode& mode);
/// mu < lambda with  lambda*mu -> q^(1/2) mu*lambda.
AlgebraPtr lambda_mu(const QMode& mode);
}  // namespace algebras

/// Truncated element of a relation algebra, keyed by normal words.
class NCElement {
 public:
  NCElement(AlgebraPtr alg, int trunc);
  static NCElement scalar(AlgebraPtr alg, int trunc, const ScalarQ& c);
  static NCElement gen(AlgebraPtr alg, int trunc, const std::string& name);
  static NCElement from_word(AlgebraPtr alg, int trunc, const Word& w, const ScalarQ& c = ScalarQ(1));

  const AlgebraPtr& algebra() const { return alg_; }
  int trunc() const { return trunc_; }
  const std::map<Word, ScalarQ>& terms() const { return terms_; }
  long dropped() const { return dropped_; }
  bool is_zero() const { return terms_.empty(); }
  ScalarQ coeff(const Word& w) const;
  ScalarQ constant_term() const { return coeff(Word()); }
  NCElement degree_part(int d) const;
  int max_degree() const;

  void add_term(const Word& normal_word, const ScalarQ& c);

  NCElement operator-() const;
  friend NCElement operator+(const NCElement& a, const NCElement& b);
  friend NCElement operator-(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const ScalarQ& c, const NCElement& a);
  friend bool operator==(const NCElement& a, const NCElement& b) { return (a - b).is_zero(); }
  NCElement& operator+=(const NCElement& b);

  NCElement pow(int n) const;
  NCElement with_trunc(int n) const;
  NCElement in_mode(const QMode& mode) const;

  /// Terms ordered by degree, then generator order.
  std::string to_string() const;

 private:
  void check_compatible(const NCElement& b) const;

  AlgebraPtr alg_;
  int trunc_;
  std::map<Word, ScalarQ> terms_;
  long dropped_ = 0;
};

/// Normal form of a raw word as an element.
NCElement normal_order(const AlgebraPtr& alg, const std::vector<std::string>& word, int trunc);

NCElement nc_mul(const NCElement& a, const NCElement& b);
NCElement nc_pow(const NCElement& a, int n);
/// sum_k f_k a^k, truncated.
NCElement compose_series(const PowerSeries& f, const NCElement& a);
NCElement nc_invert(const NCElement& a);
/// Homomorphic image under generator images; the algebra relations are checked first.
NCElement substitute(const NCElement& a, const std::map<std::string, NCElement>& images);

struct ConfluenceReport {
  /// Overlap words abc with rules for both ab and bc.
  std::vector<Word> overlaps;
  /// Overlaps whose two one-step reductions have different normal forms.
  std::vector<Word> failures;
  bool pass() const { return failures.empty(); }
};
/// Resolves every overlap ambiguity of the rewrite rules.
ConfluenceReport confluence_check(const Algebra& alg);

struct AnsatzReport {
  NCElement degree0, degree1, degree2, degree3;
  NCElement expected_degree2;
  /// degree3 = alpha*(x u - q^2 u x) + beta*(u w - q^2 w u) with u = x w - q w x.
  ScalarQ alpha, beta;
  bool degree2_matches = false;
  bool degree3_in_span = false;
};
/// Expands E_q(-w) e_q(x+w) E_q(-x) in the free algebra on x, w up to degree 3.
AnsatzReport ansatz_expand(int trunc = 3);

}  // namespace qcalc
