#include <algorithm>
#include <chrono>

#include "doctest.h"
#include "qcalc/identities.hpp"

using namespace qcalc;

TEST_CASE("single exact entries") {
  for (const char* id : {"eq12", "eq15", "volkov"}) {
    auto r = check(id);
    INFO(id << " " << r.detail);
    CHECK(r.pass);
    CHECK(r.mode == CheckMode::Exact);
    CHECK(r.truncation == 12);
    CHECK_FALSE(r.q.has_value());
    CHECK(r.residual_terms == 0);
    CHECK(r.subchecks > 0);
  }
}

TEST_CASE("unknown ids and empty selections") {
  CHECK_THROWS_AS(check("eq9999"), Error);
  try {
    check("nope");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownIdentity);
  }
  CHECK_THROWS_AS(check_selected({"eq12", "nope"}), Error);
  CHECK(check_selected({}).empty());
}

TEST_CASE("registry order and selection") {
  auto ids = identity_ids();
  CHECK(ids.size() >= 60);
  auto a = std::find(ids.begin(), ids.end(), "eq3"), b = std::find(ids.begin(), ids.end(), "eq12"),
       c = std::find(ids.begin(), ids.end(), "eq105");
  REQUIRE(a != ids.end());
  CHECK(a < b);
  CHECK(b < c);
  auto rs = check_selected({"eq38", "eq12", "eq12"});
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].id == "eq12");
  CHECK(rs[1].id == "eq38");
}

TEST_CASE("truncation monotonicity") {
  for (const char* id : {"eq18", "eq23", "eq68", "eq99", "eq31", "eq35"}) {
    CheckParams hi;
    hi.trunc = 10;
    CheckParams lo;
    lo.trunc = 6;
    auto rh = check(id, hi), rl = check(id, lo);
    INFO(id);
    CHECK(rh.pass);
    CHECK(rl.pass);
    CHECK(rl.truncation == 6);
  }
}

TEST_CASE("exact entries rebuilt at numeric q") {
  CheckParams p;
  p.q = 0.3;
  p.trunc = 8;
  for (const char* id : {"eq3", "eq12", "eq15", "eq19", "eq28", "eq36", "eq93", "eq104", "volkov"}) {
    auto r = check(id, p);
    INFO(id << " " << r.detail << " " << r.max_residual);
    CHECK(r.pass);
    REQUIRE(r.q.has_value());
    CHECK(*r.q == 0.3);
    CHECK(r.max_residual < 1e-9);
  }
  auto sym = check("eq137", p);
  CHECK_FALSE(sym.pass);
  CHECK(sym.detail.find("ModeMismatch") != std::string::npos);
}

TEST_CASE("numeric entries") {
  for (const char* id : {"eq89", "eq32", "eq69", "eq126", "eq170-divergence", "lemma23"}) {
    auto r = check(id);
    INFO(id << " " << r.detail << " " << r.max_residual);
    CHECK(r.pass);
    CHECK(r.mode == CheckMode::Numeric);
    CHECK(r.truncation == 0);
    REQUIRE(r.q.has_value());
    CHECK(*r.q == 0.5);
  }
}

TEST_CASE("all exact entries at truncation 12") {
  CheckParams p;
  p.jobs = 0;
  auto start = std::chrono::steady_clock::now();
  auto rs = check_all(p, CheckMode::Exact);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : rs) {
    INFO(r.id << " " << r.detail << " " << r.elapsed_ms << "ms");
    CHECK(r.pass);
  }
  MESSAGE("exact registry: " << rs.size() << " entries in " << secs << " s");
  CHECK(secs < 60);
}

TEST_CASE("all numeric entries") {
  CheckParams p;
  p.jobs = 0;
  auto rs = check_all(p, CheckMode::Numeric);
  for (const auto& r : rs) {
    INFO(r.id << " " << r.detail << " " << r.max_residual << " " << r.elapsed_ms << "ms");
    CHECK(r.pass);
  }
}

TEST_CASE("all numeric entries at q = 0.3 and 0.7") {
  for (double q : {0.3, 0.7}) {
    CheckParams p;
    p.jobs = 0;
    p.default_q = q;
    for (const auto& r : check_all(p, CheckMode::Numeric)) {
      INFO(q << " " << r.id << " " << r.detail << " " << r.max_residual);
      CHECK(r.pass);
      CHECK(*r.q == q);
    }
  }
}
