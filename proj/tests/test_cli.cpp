#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qcalc/cli.hpp"

using namespace qcalc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const char* env_q = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err, env_q);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> r;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) r.push_back(l);
  return r;
}

}  // namespace

TEST_CASE("verify exit codes and json lines") {
  auto r = run({"verify", "eq12", "eq15"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  for (const auto& l : ls) {
    auto j = nlohmann::json::parse(l);
    for (const char* key : {"id", "status", "mode", "truncation", "q", "max_residual", "elapsed_ms"})
      CHECK(j.contains(key));
    CHECK(j["status"] == "pass");
    CHECK(j["mode"] == "exact");
    CHECK(j["truncation"] == 12);
    CHECK(j["q"].is_null());
  }
  CHECK(nlohmann::json::parse(ls[0])["id"] == "eq12");

  auto bad = run({"verify", "bogus-id"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("UnknownIdentity") != std::string::npos);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "eq12", "--trunc", "3"}).code == 2);
  CHECK(run({"verify", "eq12", "--q", "1"}).code == 2);
  CHECK(run({"verify", "eq12", "--q", "0"}).code == 2);
  CHECK(run({"verify", "eq12", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify failure exit code") {
  auto r = run({"verify", "eq137", "--q", "0.5"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(lines(r.out)[0])["status"] == "fail");
}

TEST_CASE("verify numeric entries and formats") {
  auto r = run({"verify", "eq153", "--q", "0.5", "--gamma", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(lines(r.out)[0]);
  CHECK(j["q"] == 0.5);
  CHECK(j["max_residual"].get<double>() < 1e-9);
  auto csv = run({"verify", "eq12", "--format", "csv"});
  CHECK(lines(csv.out)[0] == "id,status,mode,truncation,q,max_residual,elapsed_ms,detail");
  CHECK(lines(csv.out)[1].rfind("eq12,pass,exact,12,,0,", 0) == 0);
  auto text = run({"verify", "eq12", "--format", "text"});
  CHECK(text.out.find("PASS eq12") == 0);
  auto env = run({"verify", "eq32"}, "0.3");
  CHECK(nlohmann::json::parse(lines(env.out)[0])["q"] == 0.3);
  auto env_exact = run({"verify", "eq12"}, "0.3");
  CHECK(nlohmann::json::parse(lines(env_exact.out)[0])["q"].is_null());
  CHECK(run({"verify", "eq12"}, "2").code == 2);
}

TEST_CASE("eval") {
  auto h = run({"eval", "hermite1", "3"});
  CHECK(h.code == 0);
  CHECK(h.out == "x^3 - (1 - q^3)*x\n");
  auto b = run({"eval", "bq", "--q", "0.5"});
  CHECK(b.code == 0);
  CHECK(std::abs(std::stod(b.out) - 1.641632560655153) < 1e-12);
  CHECK(run({"eval", "eq", "0", "--q", "0.5"}).out == "1\n");
  CHECK(run({"eval", "eq", "--trunc", "4"}).out.rfind("1 + 1/(1 - q)*z", 0) == 0);
  CHECK(run({"eval", "bq"}).code == 2);
  CHECK(run({"eval", "eq", "1", "--q", "0.5"}).code == 1);
  CHECK(run({"eval", "nosuch"}).code == 2);
  auto j = run({"eval", "jackson", "x^2", "0", "1", "--q", "0.5"});
  CHECK(std::abs(std::stod(j.out) - 0.5 / 0.875) < 1e-12);
  auto js = nlohmann::json::parse(run({"eval", "hermite2", "2", "0.3", "--q", "0.5", "--format", "json"}).out);
  CHECK(js["function"] == "hermite2");
  CHECK(js["value"].is_number());
  CHECK(run({"eval", "phi10", "1/3", "--trunc", "4"}).code == 0);
  CHECK(run({"eval", "phi10", "2", "0.1", "--q", "0.5"}).code == 0);
  CHECK(run({"eval", "cq", "0.7", "--q", "0.5"}).code == 0);
}

TEST_CASE("table") {
  auto m = run({"table", "moments-II", "0..4", "--q", "0.5", "--gamma", "1"});
  CHECK(m.code == 0);
  auto ls = lines(m.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "index,computed,closed-form,deviation");
  for (size_t i = 1; i < ls.size(); ++i) CHECK(std::stod(ls[i].substr(ls[i].rfind(',') + 1)) < 1e-10);
  auto o = run({"table", "orthogonality", "0..3", "family", "I"});
  CHECK(o.code == 0);
  CHECK(lines(o.out).size() == 17);
  CHECK(lines(run({"table", "moments-I", "3..2"}).out).size() == 1);
  CHECK(run({"table", "moments-I", "0-2"}).code == 2);
  CHECK(run({"table", "nosuch", "0..2"}).code == 2);
  CHECK(run({"table", "moments-I", "0..2", "--q", "exact"}).code == 2);
  CHECK(lines(run({"table", "fourier-pairs", "0..3", "--family", "II"}).out).size() == 5);
}

TEST_CASE("output file") {
  std::string path = "qcalc_cli_test_out.jsonl";
  auto r = run({"verify", "eq12", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string l;
  std::getline(in, l);
  CHECK(nlohmann::json::parse(l)["id"] == "eq12");
  std::remove(path.c_str());
  CHECK(run({"verify", "eq12", "--out", "/nonexistent-dir/x"}).code == 2);
}
