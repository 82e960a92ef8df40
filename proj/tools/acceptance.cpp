#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qcalc/identities.hpp"

using namespace qcalc;

namespace {

struct Criterion {
  std::string title;
  std::vector<std::string> ids;
  bool symbolic = true;
  double time_limit_s = 0;
};

bool run(int index, const Criterion& c) {
  CheckParams p;
  p.trunc = 12;
  p.default_q = 0.5;
  p.gamma = 1.0;
  p.jobs = 1;
  auto start = std::chrono::steady_clock::now();
  auto reports = check_selected(c.ids, p);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::vector<std::string> failed;
  double worst = 0;
  for (const auto& r : reports) {
    bool ok = r.pass && (!c.symbolic || (r.mode == CheckMode::Exact && !r.q && r.residual_terms == 0));
    if (!ok) failed.push_back(r.id + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    if (r.mode == CheckMode::Numeric) worst = std::max(worst, r.max_residual);
  }
  bool timely = c.time_limit_s <= 0 || secs <= c.time_limit_s;
  bool pass = failed.empty() && timely && reports.size() == c.ids.size();
  std::printf("%s criterion %d: %s [%zu checks, %.1f s", pass ? "PASS" : "FAIL", index, c.title.c_str(),
              reports.size(), secs);
  if (!c.symbolic) std::printf(", max residual %.2e", worst);
  std::printf("]");
  if (!timely) std::printf(" over the %.0f s limit", c.time_limit_s);
  for (const auto& f : failed) std::printf(" failed: %s;", f.c_str());
  std::printf("\n");
  return pass;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"exact suite at N = 12 with zero residual",
       {"eq3",   "eq12",  "eq15",  "eq16",  "eq17",  "eq18",  "eq19",  "eq20",   "eq23",  "eq24",
        "eq25",  "eq28",  "eq31",  "eq35",  "eq36",  "eq38",  "eq39",  "eq40",   "eq41",  "eq51",
        "eq117", "eq52",  "eq62",  "eq68",  "eq77",  "eq93",  "eq99",  "eq104",  "eq113", "eq115",
        "eq133", "eq137", "eq144", "eq145", "eq163", "eq179", "volkov", "eq105"},
       true,
       60},
      {"braided Hopf structure on the basis up to degree 12",
       {"hopf-axioms", "eq175", "eq176", "eq168", "eq77", "eq88"}},
      {"representation reductions and faithfulness", {"rep47-binomial", "rep47-exponential", "rep47-faithful"}},
      {"orthogonality of both Hermite families at q = 1/2", {"eq139", "eq151"}, false},
      {"q-Gaussian moments and gamma -> q gamma invariance", {"eq69", "eq126"}, false},
      {"q-Fourier pair, roundtrip and exchange relations", {"eq153", "eq154", "prop27"}, false},
      {"infinite-interval invariance and detected divergence", {"eq170", "eq170-divergence"}, false},
      {"hybrid identities and q -> 1 limits",
       {"eq89", "eq108", "eq109", "eq111", "eq90", "eq90-big", "eq107", "eq116"},
       false},
      {"property suites",
       {"eq6", "eq45", "ncalg-associativity", "ncalg-confluence", "eq142", "eq160", "eq161", "eq138", "eq141"}},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i)
    if (!run(static_cast<int>(i + 1), criteria[i])) ++failures;
  return failures == 0 ? 0 : 1;
}
