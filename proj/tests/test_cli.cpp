#include "doctest.h"

#include "codeg/cli.hpp"

#include "json.hpp"

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = codeg::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string fixture(std::string const& n) { return std::string(CODEG_DATA_DIR) + "/fixtures/" + n + ".tbl"; }

std::string last_line(std::string const& s) {
  auto t = s.substr(0, s.size() - 1);
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("order") {
  auto r = run({"order", "PSL", "4", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "20160\n");
  CHECK(run({"order", "PSp", "3", "3"}).out == "4585351680\n");
  CHECK(run({"order", "A8"}).out == "20160\n");
  auto j = nlohmann::json::parse(run({"--json", "order", "PSL", "3", "4"}).out);
  CHECK(j.dump().find("20160") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"order"}).code == 2);
  CHECK(run({"order", "PSL", "2", "6"}).code == 2);
  CHECK(run({"codegrees", "--table", "/nonexistent.tbl"}).code == 2);
  CHECK(run({"coincidences", "--max-order", "lots"}).code == 2);
  auto r = run({"order", "PSL", "2", "6"});
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("codegrees of the A5 fixture") {
  auto r = run({"codegrees", "--table", fixture("A5"), "--pseudo"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\t1\n12\t1\n15\t1\n20\t2\n");
}

TEST_CASE("certify-divides") {
  auto ok = run({"certify-divides", "--table", fixture("A5"), "--table", fixture("A5xC2")});
  CHECK(ok.code == 0);
  CHECK(last_line(ok.out) == "PASS");
  auto bad = run({"certify-divides", "--table", fixture("A5"), "--table", fixture("A6")});
  CHECK(bad.code == 1);
  CHECK(last_line(bad.out) == "FAIL");
}

TEST_CASE("scan verdicts follow the exit-code contract") {
  auto c = run({"coincidences", "--max-order", "5000000000"});
  CHECK(c.code == 0);
  CHECK(last_line(c.out) == "PASS");
  CHECK(c.out.find("20160") != std::string::npos);
  CHECK(c.out.find("4585351680") != std::string::npos);
  CHECK(run({"coincidences", "--max-order", "5e9"}).out == c.out);

  auto k = run({"kimmerle", "--control"});
  CHECK(k.code == 1);
  CHECK(last_line(k.out) == "FAIL");

  auto s = run({"f-scan", "--sporadic"});
  CHECK(s.code == 1);
  CHECK(run({"separation", "3", "3"}).code == 0);
  CHECK(run({"sandwich", "PSp", "3", "3"}).code == 0);
  CHECK(run({"defect-zero", "--max-m", "20"}).code == 0);
}

TEST_CASE("json output ends with the verdict") {
  auto r = run({"--json", "separation"});
  CHECK(r.code == 0);
  auto body = r.out.substr(0, r.out.size() - 5);
  auto j = nlohmann::json::parse(body);
  CHECK(j["scan"].is_string());
  CHECK(j["rows"].is_array());
  CHECK(last_line(r.out) == "PASS");
}

TEST_CASE("output is byte-identical across thread counts") {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"artin-scan"},
                                       {"artin-scan", "--collisions"},
                                       {"sandwich"},
                                       {"mixed-scan", "--max-m", "12", "--max-order", "1e10"},
                                       {"kimmerle", "--max-order", "1e9"}}) {
    auto a = cmd, b = cmd;
    a.insert(a.begin(), {"--threads", "1"});
    b.insert(b.begin(), {"--threads", "6"});
    auto ra = run(a), rb = run(b);
    INFO(cmd[0]);
    CHECK(ra.code == rb.code);
    CHECK(ra.out == rb.out);
    CHECK(run(a).out == ra.out);
  }
}

TEST_CASE("small query commands") {
  CHECK(run({"artin", "PSL", "3", "4"}).out.find("omega\t4") != std::string::npos);
  CHECK(run({"cyclo", "12", "3"}).out == "73\n");
  CHECK(run({"defect-zero", "10", "2"}).code == 0);
  CHECK(run({"pcore", "5", "2"}).code == 0);
  CHECK(run({"enumerate", "--max-order", "60"}).out == "A5\t60\n");
}
