#include "qcalc/ncalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qcalc {

Algebra::Algebra(std::string name, std::vector<std::string> generators, std::vector<int> degrees, QMode mode)
    : name_(std::move(name)), gens_(std::move(generators)), deg_(std::move(degrees)), mode_(mode) {
  if (gens_.size() != deg_.size()) throw Error(ErrorKind::InvalidArgument, "one degree per generator");
  for (int d : deg_)
    if (d <= 0) throw Error(ErrorKind::InvalidArgument, "generator degrees must be positive");
}

int Algebra::index(const std::string& g) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == g) return static_cast<int>(i);
  throw Error(ErrorKind::UnknownGenerator, "'" + g + "' is not a generator of " + name_);
}

Word Algebra::word(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) w.push_back(static_cast<char>(index(n)));
  return w;
}

int Algebra::degree(const Word& w) const {
  int d = 0;
  for (char c : w) d += deg_[static_cast<unsigned char>(c)];
  return d;
}

void Algebra::add_rule(const std::string& a, const std::string& b,
                       const std::vector<std::pair<std::vector<std::string>, ScalarQ>>& rhs) {
  int ia = index(a), ib = index(b);
  Combination comb;
  int lhs_deg = deg_[ia] + deg_[ib];
  for (const auto& [names, c] : rhs) {
    Word w = word(names);
    if (degree(w) != lhs_deg) throw Error(ErrorKind::InvalidArgument, "rule " + a + b + " is not homogeneous");
    comb.emplace_back(w, c.in_mode(mode_));
  }
  rules_[{ia, ib}] = std::move(comb);
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.clear();
}

bool Algebra::has_rule(int a, int b) const { return rules_.count({a, b}) > 0; }

const Combination* Algebra::rule(int a, int b) const {
  auto it = rules_.find({a, b});
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, int>> Algebra::rule_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [k, v] : rules_) out.push_back(k);
  return out;
}

bool Algebra::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (has_rule(static_cast<unsigned char>(w[i]), static_cast<unsigned char>(w[i + 1]))) return false;
  return true;
}

const Combination& Algebra::normal_form(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return *it->second;
  }
  auto out = std::make_unique<Combination>();
  std::size_t pos = w.size();
  const Combination* r = nullptr;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    r = rule(static_cast<unsigned char>(w[i]), static_cast<unsigned char>(w[i + 1]));
    if (r) {
      pos = i;
      break;
    }
  }
  if (!r) {
    out->emplace_back(w, ScalarQ(1));
  } else {
    std::map<Word, ScalarQ> acc;
    for (const auto& [rw, c] : *r) {
      Word sub = w.substr(0, pos) + rw + w.substr(pos + 2);
      for (const auto& [t, d] : normal_form(sub)) {
        auto [it, inserted] = acc.try_emplace(t, c * d);
        if (!inserted) it->second += c * d;
      }
    }
    for (auto& [t, c] : acc)
      if (!c.is_zero()) out->emplace_back(t, std::move(c));
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  auto [it, inserted] = memo_.try_emplace(w, std::move(out));
  return *it->second;
}

std::string Algebra::render_word(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += gens_[static_cast<unsigned char>(w[i])];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace algebras {

namespace {

std::string mode_key(const std::string& name, const QMode& mode) { return name + "@" + mode.to_string(); }

AlgebraPtr cached(const std::string& key, const std::function<AlgebraPtr()>& make) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgebraPtr a = make();
  cache.emplace(key, a);
  return a;
}

}  // namespace

AlgebraPtr qplane(const QMode& mode) {
  return cached(mode_key("qplane", mode), [&] {
    auto a = std::make_shared<Algebra>("QPLANE", std::vector<std::string>{"y", "x"}, std::vector<int>{1, 1}, mode);
    a->add_rule("x", "y", {{{"y", "x"}, q_of(mode)}});
    return a;
  });
}

AlgebraPtr qheis(const QMode& mode) {
  return cached(mode_key("qheis", mode), [&] {
    auto a = std::make_shared<Algebra>("QHEIS", std::vector<std::string>{"c", "y", "x"}, std::vector<int>{2, 1, 1},
                                       mode);
    ScalarQ q = q_of(mode);
    a->add_rule("x", "y", {{{"y", "x"}, q}, {{"c"}, ScalarQ(1) - q}});
    a->add_rule("x", "c", {{{"c", "x"}, ScalarQ(1)}});
    a->add_rule("y", "c", {{{"c", "y"}, ScalarQ(1)}});
    return a;
  });
}

AlgebraPtr qheisz(const QMode& mode) {
  return cached(mode_key("qheisz", mode), [&] {
    auto a = std::make_shared<Algebra>("QHEISZ", std::vector<std::string>{"y", "z", "x"}, std::vector<int>{1, 2, 1},
                                       mode);
    ScalarQ q = q_of(mode);
    a->add_rule("x", "y", {{{"y", "x"}, ScalarQ(1)}, {{"z"}, ScalarQ(1) - q}});
    a->add_rule("x", "z", {{{"z", "x"}, q}});
    a->add_rule("z", "y", {{{"y", "z"}, q}});
    return a;
  });
}

AlgebraPtr gf98(const QMode& mode) {
  return cached(mode_key("gf98", mode), [&] {
    auto a = std::make_shared<Algebra>("GF98", std::vector<std::string>{"w", "x", "z"}, std::vector<int>{1, 1, 1},
                                       mode);
    ScalarQ q = q_of(mode);
    a->add_rule("x", "w", {{{"w", "x"}, q}, {{"z", "z"}, ScalarQ(1) - q}});
    a->add_rule("z", "x", {{{"x", "z"}, q.inverse()}});
    a->add_rule("z", "w", {{{"w", "z"}, q}});
    return a;
  });
}

AlgebraPtr gf103(const QMode& mode) {
  return cached(mode_key("gf103", mode), [&] {
    auto a = std::make_shared<Algebra>("GF103", std::vector<std::string>{"w", "x", "v"}, std::vector<int>{1, 1, 2},
                                       mode);
    ScalarQ q = q_of(mode);
    a->add_rule("x", "w", {{{"w", "x"}, q}, {{"v"}, ScalarQ(1) - q}});
    a->add_rule("v", "x", {{{"x", "v"}, q.pow(-2)}});
    a->add_rule("v", "w", {{{"w", "v"}, q.pow(2)}});
    return a;
  });
}

AlgebraPtr free_algebra(const std::vector<std::string>& gens, const QMode& mode) {
  std::string key = "free";
  for (const auto& g : gens) key += ":" + g;
  return cached(mode_key(key, mode), [&] {
    return std::make_shared<Algebra>("FREE", gens, std::vector<int>(gens.size(), 1), mode);
  });
}

AlgebraPtr skew(int n, const QMode& mode) {
  return cached(mode_key("skew" + std::to_string(n), mode), [&] {
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i) gens.push_back("g" + std::to_string(i));
    auto a = std::make_shared<Algebra>("SKEW" + std::to_string(n), gens, std::vector<int>(n, 1), mode);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) a->add_rule(gens[i], gens[j], {{{gens[j], gens[i]}, q_of(mode)}});
    return a;
  });
}

AlgebraPtr lambda_mu(const QMode& mode) {
  return cached(mode_key("lambdamu", mode), [&] {
    auto a = std::make_shared<Algebra>("LAMBDAMU", std::vector<std::string>{"mu", "lambda"}, std::vector<int>{1, 1},
                                       mode);
    ScalarQ v = mode.is_exact() ? ScalarQ::v_power(1) : ScalarQ::numeric({std::sqrt(mode.q()), 0.0});
    a->add_rule("lambda", "mu", {{{"mu", "lambda"}, v}});
    return a;
  });
}

}  // namespace algebras

NCElement::NCElement(AlgebraPtr alg, int trunc) : alg_(std::move(alg)), trunc_(trunc) {
  if (!alg_) throw Error(ErrorKind::InvalidArgument, "element without an algebra");
  if (trunc < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
}

NCElement NCElement::scalar(AlgebraPtr alg, int trunc, const ScalarQ& c) {
  NCElement e(std::move(alg), trunc);
  e.add_term(Word(), c);
  return e;
}

NCElement NCElement::gen(AlgebraPtr alg, int trunc, const std::string& name) {
  Word w(1, static_cast<char>(alg->index(name)));
  return from_word(std::move(alg), trunc, w);
}

NCElement NCElement::from_word(AlgebraPtr alg, int trunc, const Word& w, const ScalarQ& c) {
  NCElement e(alg, trunc);
  if (alg->degree(w) > trunc) {
    e.dropped_ = 1;
    return e;
  }
  for (const auto& [t, d] : alg->normal_form(w)) e.add_term(t, c * d);
  return e;
}

ScalarQ NCElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ScalarQ(0) : it->second;
}

void NCElement::add_term(const Word& w, const ScalarQ& c) {
  if (c.is_zero()) return;
  if (alg_->degree(w) > trunc_) {
    ++dropped_;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement NCElement::degree_part(int d) const {
  NCElement r(alg_, trunc_);
  for (const auto& [w, c] : terms_)
    if (alg_->degree(w) == d) r.terms_.emplace(w, c);
  return r;
}

int NCElement::max_degree() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, alg_->degree(w));
  return m;
}

void NCElement::check_compatible(const NCElement& b) const {
  if (alg_.get() != b.alg_.get()) throw Error(ErrorKind::AlgebraMismatch, alg_->name() + " vs " + b.alg_->name());
}

NCElement NCElement::operator-() const {
  NCElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCElement& NCElement::operator+=(const NCElement& b) {
  check_compatible(b);
  int old = trunc_;
  trunc_ = std::min(trunc_, b.trunc_);
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  if (trunc_ < old) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (alg_->degree(it->first) > trunc_)
        it = terms_.erase(it);
      else
        ++it;
    }
  }
  dropped_ += b.dropped_;
  return *this;
}

NCElement operator+(const NCElement& a, const NCElement& b) {
  NCElement r = a;
  r += b;
  return r;
}

NCElement operator-(const NCElement& a, const NCElement& b) { return a + (-b); }

NCElement operator*(const NCElement& a, const NCElement& b) {
  a.check_compatible(b);
  int n = std::min(a.trunc_, b.trunc_);
  NCElement r(a.alg_, n);
  const Algebra& alg = *a.alg_;
  std::vector<std::pair<int, const ScalarQ*>> bdeg;
  for (const auto& [v, c2] : b.terms_) bdeg.emplace_back(alg.degree(v), &c2);
  for (const auto& [u, c1] : a.terms_) {
    int du = alg.degree(u);
    std::size_t idx = 0;
    for (const auto& [v, c2] : b.terms_) {
      int dv = bdeg[idx++].first;
      if (du + dv > n) {
        ++r.dropped_;
        continue;
      }
      ScalarQ c12 = c1 * c2;
      for (const auto& [t, e] : alg.normal_form(u + v)) r.add_term(t, e.is_one() ? c12 : c12 * e);
    }
  }
  r.dropped_ += a.dropped_ + b.dropped_;
  return r;
}

NCElement operator*(const ScalarQ& c, const NCElement& a) {
  NCElement r(a.alg_, a.trunc_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second.is_zero())
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

NCElement NCElement::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of an algebra element");
  NCElement r = scalar(alg_, trunc_, ScalarQ(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

NCElement NCElement::with_trunc(int n) const {
  NCElement r(alg_, n);
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  return r;
}

std::string NCElement::to_string() const {
  std::vector<std::pair<int, const std::pair<const Word, ScalarQ>*>> order;
  for (const auto& t : terms_) order.emplace_back(alg_->degree(t.first), &t);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->first < b.second->first;
  });
  std::vector<std::pair<ScalarQ, std::string>> out;
  for (const auto& [d, t] : order) out.emplace_back(t->second, alg_->render_word(t->first));
  return render_terms(out);
}

NCElement normal_order(const AlgebraPtr& alg, const std::vector<std::string>& word, int trunc) {
  return NCElement::from_word(alg, trunc, alg->word(word));
}

NCElement nc_mul(const NCElement& a, const NCElement& b) { return a * b; }

NCElement nc_pow(const NCElement& a, int n) { return a.pow(n); }

NCElement compose_series(const PowerSeries& f, const NCElement& a) {
  bool nilpotent = a.constant_term().is_zero();
  if (!nilpotent && !f.is_polynomial())
    throw Error(ErrorKind::NonNilpotentArgument, "series applied to an element with nonzero constant term");
  int d = f.degree();
  if (nilpotent) d = std::min(d, a.trunc());
  const QMode& mode = a.algebra()->mode();
  NCElement r(a.algebra(), a.trunc());
  if (d < 0) return r;
  r = NCElement::scalar(a.algebra(), a.trunc(), f[d].in_mode(mode));
  for (int k = d - 1; k >= 0; --k) {
    r = r * a;
    r.add_term(Word(), f[k].in_mode(mode));
  }
  return r;
}

NCElement nc_invert(const NCElement& a) {
  ScalarQ c0 = a.constant_term();
  if (c0.is_zero()) throw Error(ErrorKind::NonUnitConstantTerm, "element with zero constant term");
  ScalarQ inv = c0.inverse();
  NCElement one = NCElement::scalar(a.algebra(), a.trunc(), ScalarQ(1));
  NCElement u = one - inv * a;
  int steps = a.trunc();
  NCElement s = one;
  for (int i = 0; i < steps; ++i) s = one + u * s;
  return inv * s;
}

NCElement substitute(const NCElement& a, const std::map<std::string, NCElement>& images) {
  const Algebra& src = *a.algebra();
  std::vector<const NCElement*> img(src.size(), nullptr);
  for (int g = 0; g < src.size(); ++g) {
    auto it = images.find(src.generator(g));
    if (it == images.end()) throw Error(ErrorKind::UnknownGenerator, "no image given for " + src.generator(g));
    img[g] = &it->second;
  }
  const NCElement& first = *img[0];
  for (const auto* e : img)
    if (e->algebra().get() != first.algebra().get())
      throw Error(ErrorKind::AlgebraMismatch, "generator images live in different algebras");
  auto image_of = [&](const Word& w) {
    NCElement r = NCElement::scalar(first.algebra(), first.trunc(), ScalarQ(1));
    for (char ch : w) r = r * *img[static_cast<unsigned char>(ch)];
    return r;
  };
  for (auto [ga, gb] : src.rule_pairs()) {
    NCElement lhs = *img[ga] * *img[gb];
    NCElement rhs(first.algebra(), first.trunc());
    for (const auto& [w, c] : *src.rule(ga, gb)) rhs += c * image_of(w);
    if (!(lhs - rhs).is_zero())
      throw Error(ErrorKind::RelationViolation,
                  "images violate " + src.generator(ga) + "*" + src.generator(gb) + " rule of " + src.name());
  }
  NCElement r(first.algebra(), first.trunc());
  for (const auto& [w, c] : a.terms()) r += c * image_of(w);
  return r;
}

ConfluenceReport confluence_check(const Algebra& alg) {
  ConfluenceReport r;
  auto reduce = [&](const Combination& step, const Word& pre, const Word& post) {
    std::map<Word, ScalarQ> acc;
    for (const auto& [w, c] : step)
      for (const auto& [t, d] : alg.normal_form(pre + w + post)) {
        auto [it, inserted] = acc.try_emplace(t, c * d);
        if (!inserted) it->second += c * d;
      }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    return acc;
  };
  for (auto [a, b] : alg.rule_pairs())
    for (auto [b2, c] : alg.rule_pairs()) {
      if (b2 != b) continue;
      Word abc{static_cast<char>(a), static_cast<char>(b), static_cast<char>(c)};
      r.overlaps.push_back(abc);
      auto left = reduce(*alg.rule(a, b), "", Word(1, static_cast<char>(c)));
      auto right = reduce(*alg.rule(b, c), Word(1, static_cast<char>(a)), "");
      bool same = left.size() == right.size();
      for (auto it = left.begin(), jt = right.begin(); same && it != left.end(); ++it, ++jt)
        same = it->first == jt->first && it->second == jt->second;
      if (!same) r.failures.push_back(abc);
    }
  return r;
}

AnsatzReport ansatz_expand(int trunc) {
  QMode mode = QMode::exact();
  auto alg = algebras::free_algebra({"x", "w"}, mode);
  NCElement x = NCElement::gen(alg, trunc, "x");
  NCElement w = NCElement::gen(alg, trunc, "w");
  PowerSeries small_e(trunc), big_e(trunc);
  for (int k = 0; k <= trunc; ++k) {
    small_e.set(k, qfactorial(k, mode).inverse());
    big_e.set(k, ScalarQ::q_power(k * (k - 1) / 2) / qfactorial(k, mode));
  }
  NCElement lhs = compose_series(big_e, -w) * compose_series(small_e, x + w) * compose_series(big_e, -x);
  AnsatzReport r{lhs.degree_part(0), lhs.degree_part(1), lhs.degree_part(2), lhs.degree_part(3),
                 NCElement(alg, trunc), ScalarQ(0), ScalarQ(0)};
  ScalarQ q = ScalarQ::q_power(1);
  NCElement u = x * w - q * (w * x);
  r.expected_degree2 = qfactorial(2, mode).inverse() * u;
  r.degree2_matches = r.degree2 == r.expected_degree2;
  NCElement r1 = x * u - q.pow(2) * (u * x);
  NCElement r2 = u * w - q.pow(2) * (w * u);
  r.alpha = r.degree3.coeff(alg->word({"x", "x", "w"}));
  r.beta = r.degree3.coeff(alg->word({"x", "w", "w"}));
  if (trunc >= 3) r.degree3_in_span = (r.degree3 - r.alpha * r1 - r.beta * r2).is_zero();
  return r;
}

}  // namespace qcalc
