#include "qcalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "qcalc/identities.hpp"
#include "qcalc/jackson.hpp"
#include "qcalc/qfourier.hpp"
#include "qcalc/qfunctions.hpp"
#include "qcalc/qhermite.hpp"

namespace qcalc {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_double(const std::string& s) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// "exact" gives nullopt; otherwise a number strictly inside (0,1).
std::optional<double> parse_q(const std::string& s, const std::string& source) {
  if (s == "exact") return std::nullopt;
  auto v = parse_double(s);
  if (!v || !(*v > 0.0 && *v < 1.0))
    throw UsageError(source + " must be 'exact' or a number strictly between 0 and 1, got '" + s + "'");
  return v;
}

struct Config {
  std::string q_text;
  std::optional<double> q_flag;
  std::optional<double> env_q;
  int trunc = 12;
  double gamma = 1.0;
  double tol = 1e-9;
  std::string format;
  std::string out;
  int jobs = 0;

  std::optional<double> numeric_q() const { return q_flag ? q_flag : env_q; }
  double table_q() const {
    if (!q_text.empty() && !q_flag) throw UsageError("tables are numeric; give --q as a number");
    return numeric_q().value_or(0.5);
  }
  double require_q(const std::string& what) const {
    auto q = numeric_q();
    if (!q) throw UsageError(what + " needs a numeric q (--q or QCALC_Q)");
    return *q;
  }
  QMode series_mode() const { return q_flag ? QMode::numeric(*q_flag) : QMode::exact(); }
};

void add_common(CLI::App* sub, Config& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--q", c.q_text, "exact, or a numeric q in (0,1)");
  sub->add_option("--trunc", c.trunc, "series truncation degree (>= 4)");
  sub->add_option("--gamma", c.gamma, "lattice anchor gamma > 0");
  sub->add_option("--tol", c.tol, "tolerance for exact entries rebuilt at numeric q");
  sub->add_option("--format", c.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "write output to this file");
  sub->add_option("--jobs", c.jobs, "worker threads for verify (0: all cores)");
}

void finish_config(Config& c, const char* env_q) {
  if (!c.q_text.empty()) c.q_flag = parse_q(c.q_text, "--q");
  if (env_q && *env_q) c.env_q = parse_q(env_q, "QCALC_Q");
  if (c.trunc < 4) throw UsageError("--trunc must be at least 4");
  if (!(c.gamma > 0.0)) throw UsageError("--gamma must be positive");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.jobs < 0) throw UsageError("--jobs must be nonnegative");
}

std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string im = fmt_double(std::abs(z.imag()));
  return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}


json report_json(const Report& r) {
  json j;
  j["id"] = r.id;
  j["status"] = r.pass ? "pass" : "fail";
  j["mode"] = to_string(r.mode);
  j["truncation"] = r.truncation;
  j["q"] = r.q ? json(*r.q) : json(nullptr);
  j["max_residual"] = r.max_residual;
  j["elapsed_ms"] = r.elapsed_ms;
  j["residual_terms"] = r.residual_terms;
  j["subchecks"] = r.subchecks;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

int cmd_verify(const Config& c, const std::vector<std::string>& ids, bool all, const std::string& only,
               std::ostream& out) {
  if (ids.empty() && !all) throw UsageError("verify needs identity ids or --all");
  if (!ids.empty() && all) throw UsageError("give either identity ids or --all, not both");
  CheckParams p;
  p.q = c.q_flag;
  p.default_q = c.numeric_q().value_or(0.5);
  p.trunc = c.trunc;
  p.gamma = c.gamma;
  p.tol = c.tol;
  p.jobs = c.jobs;
  std::vector<Report> reports;
  if (all) {
    std::optional<CheckMode> m;
    if (only == "exact") m = CheckMode::Exact;
    if (only == "numeric") m = CheckMode::Numeric;
    reports = check_all(p, m);
  } else {
    for (const auto& id : ids) find_identity(id);
    reports = check_selected(ids, p);
  }
  int failed = 0;
  if (c.format == "csv") out << "id,status,mode,truncation,q,max_residual,elapsed_ms,detail\n";
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    if (c.format == "json") {
      out << report_json(r).dump() << "\n";
    } else if (c.format == "csv") {
      out << r.id << "," << (r.pass ? "pass" : "fail") << "," << to_string(r.mode) << "," << r.truncation << ","
          << (r.q ? fmt_double(*r.q) : "") << "," << fmt_double(r.max_residual) << "," << fmt_double(r.elapsed_ms)
          << "," << csv_field(r.detail) << "\n";
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.id << " " << to_string(r.mode);
      if (r.mode == CheckMode::Exact) out << " N=" << r.truncation;
      if (r.q) out << " q=" << fmt_double(*r.q);
      out << " residual=" << fmt_double(r.max_residual) << " (" << std::fixed << std::setprecision(1)
          << r.elapsed_ms << " ms)" << std::defaultfloat << std::setprecision(6);
      if (!r.pass && !r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
  }
  if (c.format == "text") out << reports.size() - failed << "/" << reports.size() << " passed\n";
  return failed ? kExitFailure : kExitPass;
}


ScalarQ parse_scalar(const std::string& s) {
  try {
    BigRational r(s);
    r.canonicalize();
    return ScalarQ(r);
  } catch (const std::exception&) {
  }
  auto d = parse_double(s);
  if (!d) throw UsageError("not a number: '" + s + "'");
  return ScalarQ::numeric(*d);
}

double arg_double(const std::vector<std::string>& a, size_t i, const std::string& what) {
  if (i >= a.size()) throw UsageError("missing argument " + what);
  auto d = parse_double(a[i]);
  if (!d) throw UsageError(what + " must be a number, got '" + a[i] + "'");
  return *d;
}

int arg_int(const std::vector<std::string>& a, size_t i, const std::string& what) {
  if (i >= a.size()) throw UsageError("missing argument " + what);
  try {
    size_t used = 0;
    int v = std::stoi(a[i], &used);
    if (used == a[i].size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be a nonnegative integer, got '" + a[i] + "'");
}

std::optional<NamedSeries> named(const std::string& f) {
  if (f == "eq") return NamedSeries::eq();
  if (f == "bigEq") return NamedSeries::big_eq();
  if (f == "logq") return NamedSeries::logq();
  if (f == "li2q") return NamedSeries::li2q();
  if (f == "gq") return NamedSeries::gauss_g();
  if (f == "bigGq") return NamedSeries::gauss_big_g();
  return std::nullopt;
}

/// Integrands for eval jackson: a named series or x^n.
struct Integrand {
  std::optional<NamedSeries> series;
  int power = -1;
};

Integrand parse_integrand(const std::string& s) {
  if (auto n = named(s)) return {n, -1};
  if (s == "1") return {std::nullopt, 0};
  if (s == "x") return {std::nullopt, 1};
  if (s.rfind("x^", 0) == 0) {
    std::vector<std::string> a{s.substr(2)};
    return {std::nullopt, arg_int(a, 0, "exponent")};
  }
  throw UsageError("unknown integrand '" + s + "' (eq, bigEq, logq, li2q, gq, bigGq, 1, x, x^n)");
}

struct EvalResult {
  std::optional<std::string> expression;
  std::optional<Complex> value;
};

EvalResult eval_function(const Config& c, const std::string& fn, const std::vector<std::string>& a) {
  EvalResult r;
  if (auto f = named(fn)) {
    if (a.empty()) {
      r.expression = series_of(*f, c.trunc, c.series_mode()).to_string("z");
    } else {
      double q = c.require_q("numeric evaluation");
      r.value = numeric_eval(*f, arg_double(a, 0, "z"), q);
    }
    return r;
  }
  if (fn == "phi10") {
    if (a.empty()) throw UsageError("phi10 needs the parameter a");
    if (a.size() == 1) {
      QMode m = c.series_mode();
      r.expression = series_of(NamedSeries::phi10(parse_scalar(a[0]).in_mode(m)), c.trunc, m).to_string("z");
    } else {
      double q = c.require_q("numeric evaluation");
      r.value = numeric_eval(NamedSeries::phi10(ScalarQ::numeric(arg_double(a, 0, "a"))), arg_double(a, 1, "z"), q);
    }
    return r;
  }
  if (fn == "hermite1" || fn == "hermite2") {
    auto h = hermite(fn == "hermite1" ? HermiteFamily::I : HermiteFamily::II, arg_int(a, 0, "n"));
    if (a.size() == 1) {
      if (c.q_flag) {
        std::vector<std::pair<ScalarQ, std::string>> terms;
        for (int j = static_cast<int>(h.coeffs.size()) - 1; j >= 0; --j)
          terms.emplace_back(h.coeffs[j].in_mode(QMode::numeric(*c.q_flag)),
                             j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j));
        r.expression = render_terms(terms);
      } else {
        r.expression = h.to_string();
      }
    } else {
      r.value = h.at(c.require_q("numeric evaluation"))(arg_double(a, 1, "x"));
    }
    return r;
  }
  if (fn == "bq") {
    r.value = b_q(c.require_q("bq"));
    return r;
  }
  if (fn == "cq") {
    double g = a.empty() ? c.gamma : arg_double(a, 0, "gamma");
    if (!(g > 0)) throw UsageError("gamma must be positive");
    r.value = c_q(c.require_q("cq"), g);
    return r;
  }
  if (fn == "jackson") {
    if (a.empty()) throw UsageError("jackson needs an integrand");
    auto in = parse_integrand(a[0]);
    if (a.size() == 1) {
      QMode m = c.series_mode();
      PowerSeries s = in.series ? series_of(*in.series, c.trunc, m) : PowerSeries::monomial(c.trunc, in.power);
      r.expression = jackson_0_to_x(s, m).to_string("x");
      return r;
    }
    double q = c.require_q("numeric Jackson integration");
    double lo = arg_double(a, 1, "a"), hi = arg_double(a, 2, "b");
    RealFn f;
    if (in.series) {
      NamedSeries s = *in.series;
      f = [s, q](double t) { return numeric_eval(s, t, q); };
    } else {
      int p = in.power;
      f = [p](double t) { return Complex(std::pow(t, p)); };
    }
    r.value = jackson_interval(f, lo, hi, q);
    return r;
  }
  throw UsageError("unknown function '" + fn + "' (eq, bigEq, phi10, logq, li2q, hermite1, hermite2, bq, cq, jackson)");
}

int cmd_eval(const Config& c, const std::string& fn, const std::vector<std::string>& args, std::ostream& out) {
  auto r = eval_function(c, fn, args);
  if (c.format == "json") {
    json j{{"function", fn}, {"args", args}};
    j["q"] = c.numeric_q() ? json(*c.numeric_q()) : json(nullptr);
    if (r.expression) j["expression"] = *r.expression;
    if (r.value) j["value"] = complex_json(*r.value);
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "function,value\n" << fn << "," << csv_field(r.expression ? *r.expression : fmt_complex(*r.value)) << "\n";
  } else {
    out << (r.expression ? *r.expression : fmt_complex(*r.value)) << "\n";
  }
  return kExitPass;
}


struct Row {
  std::string index;
  Complex computed, closed;
  double deviation = 0;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + s + "'");
  std::vector<std::string> parts{s.substr(0, dots), s.substr(dots + 2)};
  return {arg_int(parts, 0, "range start"), arg_int(parts, 1, "range end")};
}

HermiteFamily parse_family(const std::string& f) {
  if (f == "I" || f == "1") return HermiteFamily::I;
  if (f == "II" || f == "2") return HermiteFamily::II;
  throw UsageError("family must be I or II, got '" + f + "'");
}

std::vector<Row> table_rows(const Config& c, const std::string& kind, int lo, int hi, HermiteFamily fam, double at) {
  double q = c.table_q();
  std::vector<Row> rows;
  JacksonConfig cfg;
  if (kind == "moments-I") {
    for (int m = lo; m <= hi; ++m) {
      auto f = GaussianTimesPoly::monomial(QGaussian::Big, m).at(q);
      Complex got = jackson_interval(f, -q, q, q, cfg);
      double want = moment_big_gauss(m, q);
      rows.push_back({std::to_string(m), got, want, std::abs(got - want)});
    }
  } else if (kind == "moments-II") {
    for (int m = lo; m <= hi; ++m) {
      auto f = GaussianTimesPoly::monomial(QGaussian::Small, m).at(q);
      Complex got = jackson_realline(f, c.gamma, q, cfg).value;
      double want = moment_small_gauss(m, q, c.gamma);
      rows.push_back({std::to_string(m), got, want, std::abs(got - want)});
    }
  } else if (kind == "orthogonality") {
    for (int m = lo; m <= hi; ++m)
      for (int n = lo; n <= hi; ++n) {
        auto r = orthogonality_numeric(fam, m, n, q, c.gamma, cfg);
        rows.push_back({std::to_string(m) + ":" + std::to_string(n), r.value, r.expected,
                        std::abs(r.value - r.expected)});
      }
  } else if (kind == "fourier-pairs") {
    TransformConfig tc;
    tc.q = q;
    tc.gamma = c.gamma;
    auto wI = hermite_weight(HermiteFamily::I, q), wII = hermite_weight(HermiteFamily::II, q);
    for (int n = lo; n <= hi; ++n) {
      QPoly mono(n + 1, ScalarQ(0));
      mono[n] = ScalarQ(1);
      bool first = fam == HermiteFamily::I;
      PrecisePoly p(first ? hermite(HermiteFamily::I, n).coeffs : mono, q);
      PrecisePoly image(first ? mono : hermite(HermiteFamily::II, n).coeffs, q);
      RealFn f = [p, wI](double x) { return p(x) * wI(x); };
      Complex got = fq_transform(f, {Complex(at)}, tc)[0];
      Complex want = std::pow(q, n * (n - 1) / 2.0) / std::pow(Complex(0, 1), n) * image(at) * wII(at);
      rows.push_back({std::to_string(n), got, want, std::abs(got - want)});
    }
  } else {
    throw UsageError("unknown table '" + kind + "' (moments-I, moments-II, orthogonality, fourier-pairs)");
  }
  return rows;
}

int cmd_table(const Config& c, const std::string& kind, const std::string& range, const std::vector<std::string>& rest,
              std::string family, double at, std::ostream& out) {
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == "family" && i + 1 < rest.size()) {
      family = rest[++i];
    } else {
      throw UsageError("unexpected argument '" + rest[i] + "'");
    }
  }
  auto [lo, hi] = range.empty() ? std::pair<int, int>{1, 0} : parse_range(range);
  auto rows = table_rows(c, kind, lo, hi, parse_family(family), at);
  if (c.format == "csv") {
    out << "index,computed,closed-form,deviation\n";
    for (const auto& r : rows)
      out << r.index << "," << csv_field(fmt_complex(r.computed)) << "," << csv_field(fmt_complex(r.closed)) << ","
          << fmt_double(r.deviation) << "\n";
  } else if (c.format == "json") {
    for (const auto& r : rows)
      out << json{{"table", kind},
                  {"index", r.index},
                  {"computed", complex_json(r.computed)},
                  {"closed_form", complex_json(r.closed)},
                  {"deviation", r.deviation}}
                 .dump()
          << "\n";
  } else {
    out << std::left << std::setw(8) << "index" << std::setw(28) << "computed" << std::setw(28) << "closed-form"
        << "deviation\n";
    for (const auto& r : rows)
      out << std::setw(8) << r.index << std::setw(28) << fmt_complex(r.computed) << std::setw(28)
          << fmt_complex(r.closed) << fmt_double(r.deviation) << "\n";
  }
  return kExitPass;
}

int cmd_list(const std::string& format, std::ostream& out) {
  for (const auto& e : registry()) {
    if (format == "json")
      out << json{{"id", e.id}, {"mode", to_string(e.mode)}, {"statement", e.statement}}.dump() << "\n";
    else
      out << std::left << std::setw(22) << e.id << std::setw(9) << to_string(e.mode) << e.statement << "\n";
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, std::getenv("QCALC_Q"));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_q) {
  CLI::App app{"Exact and numeric checks of q-special-function identities", "qcalc"};
  app.require_subcommand(1);

  Config vc, ec, tc;
  std::vector<std::string> ids;
  bool all = false;
  std::string only;
  auto* verify = app.add_subcommand("verify", "check registered identities");
  verify->add_option("ids", ids, "identity ids");
  verify->add_flag("--all", all, "check every registered identity");
  verify->add_option("--only", only, "restrict --all to exact or numeric entries")
      ->check(CLI::IsMember({"exact", "numeric"}));
  add_common(verify, vc, "json");

  std::string fn;
  std::vector<std::string> eargs;
  auto* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("function", fn, "eq | bigEq | phi10 | logq | li2q | hermite1 | hermite2 | bq | cq | jackson")
      ->required();
  eval->add_option("args", eargs, "function arguments");
  add_common(eval, ec, "text");

  std::string kind, range, family = "I";
  std::vector<std::string> rest;
  double at = 0.5;
  auto* table = app.add_subcommand("table", "tabulate computed values against closed forms");
  table->add_option("kind", kind, "moments-I | moments-II | orthogonality | fourier-pairs")->required();
  table->add_option("range", range, "index range a..b");
  table->add_option("rest", rest, "optional 'family I|II'");
  table->add_option("--family", family, "Hermite family I or II");
  table->add_option("--at", at, "sample point y for fourier-pairs");
  add_common(table, tc, "csv");

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "list registered identities");
  list->add_option("--format", list_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Config* active = verify->parsed() ? &vc : eval->parsed() ? &ec : table->parsed() ? &tc : nullptr;
  std::ofstream file;
  std::ostream* os = &out;
  try {
    if (active) {
      finish_config(*active, env_q);
      if (!active->out.empty()) {
        file.open(active->out);
        if (!file) throw UsageError("cannot open " + active->out + " for writing");
        os = &file;
      }
    }
    if (verify->parsed()) return cmd_verify(vc, ids, all, only, *os);
    if (eval->parsed()) return cmd_eval(ec, fn, eargs, *os);
    if (table->parsed()) return cmd_table(tc, kind, range, rest, family, at, *os);
    return cmd_list(list_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::UnknownIdentity || e.kind() == ErrorKind::InvalidArgument ? kExitUsage
                                                                                              : kExitFailure;
  }
}

}  // namespace qcalc
