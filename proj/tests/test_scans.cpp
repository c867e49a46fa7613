#include "doctest.h"

#include "codeg/chartab.hpp"
#include "codeg/partitions.hpp"
#include "codeg/scans.hpp"

#include <algorithm>

using namespace codeg;

namespace {

std::string status_of(ScanReport const& r, std::string const& claim) {
  for (auto const& c : r.claims)
    if (c.name == claim) return to_string(c.verdict);
  return "missing";
}

}  // namespace

TEST_CASE("report formatting") {
  ScanReport r;
  r.scan = "demo";
  r.param("k", "v");
  r.columns = {"a", "b"};
  r.rows = {{"1", "2"}};
  r.claim("x", true);
  CHECK(r.verdict_line() == "PASS");
  CHECK(r.to_tsv() == "# scan\tdemo\n# param\tk\tv\na\tb\n1\t2\n# claim\tx\tPASS\nPASS\n");
  r.claim("y", Verdict::Inconclusive);
  r.inconclusive = 1;
  CHECK(r.verdict() == Verdict::Inconclusive);
  CHECK(r.verdict_line() == "INCONCLUSIVE(1)");
  r.claim("z", false);
  CHECK(r.verdict() == Verdict::Fail);
  auto js = r.to_json();
  CHECK(js.find("\"demo\"") != std::string::npos);
  CHECK(js.substr(js.size() - 5) == "FAIL\n");
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](size_t i) { hit[i] += 1; });
  CHECK(std::all_of(hit.begin(), hit.end(), [](int x) { return x == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3, [](size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("coincidences") {
  CHECK(coincidence_classes(10000).empty());
  auto c = coincidence_classes(20160);
  REQUIRE(c.size() == 1);
  CHECK(c[0].order == 20160);
  auto big = coincidence_classes(Nat("5000000000"));
  REQUIRE(big.size() == 2);
  CHECK(big[1].order == Nat("4585351680"));
  for (auto const& x : big) CHECK(is_known_coincidence(x));
  CHECK(coincidence_search(Nat("5000000000")).passed());
}

TEST_CASE("order inequality and its negative control") {
  CHECK_FALSE(kimmerle_violation(Factored(Nat(60))));
  auto ctl = kimmerle_negative_control();
  REQUIRE(ctl.size() == 1);
  CHECK(ctl[0].second.value() == (Nat(1) << 59) * 3);
  CHECK(kimmerle_violation(ctl[0].second) == Nat(2));
  CHECK(kimmerle_check(ctl).verdict() == Verdict::Fail);
  CHECK(kimmerle_sweep(Nat("100000000000")).passed());
}

TEST_CASE("order sandwich") {
  auto a = order_sandwich_check(lie(Family::PSp, 3, 3));
  CHECK(a.r == 3);
  CHECK(a.d == 2);
  CHECK(a.holds());
  // G = SL2(4) = PSL2(4): 12 <= 15 <= 16
  auto b = order_sandwich_check(lie(Family::PSL, 2, 4));
  CHECK(b.r == 1);
  CHECK(b.sc_pprime == 15);
  CHECK(b.holds());
  CHECK(order_sandwich_check(lie(Family::E8, 8, 2)).holds());
  CHECK(order_sandwich_check(lie(Family::Suzuki, 2, 32)).holds());
  CHECK(order_sandwich_check(lie(Family::Ree2F4, 4, 8)).holds());
  CHECK(sandwich_sweep(lie_sweep(9, 8), {4, false}).passed());
}

TEST_CASE("degree upper bounds") {
  auto sz = b_upper_bound(lie(Family::Suzuki, 2, 8));
  CHECK(sz.steinbergDegree.value() == 64);
  auto t = load_table(std::string(CODEG_DATA_DIR) + "/fixtures/Sz8.tbl");
  CHECK(max_degree(t) < 26 * 64);
  CHECK(max_degree(t) <= sz.bUpper);
  auto g2 = b_upper_bound(lie(Family::G2, 2, 3));
  CHECK(g2.bUpper <= 26 * g2.steinbergDegree.value() - 1);
  auto e = b_upper_bound(lie(Family::F4, 4, 2));
  CHECK(e.bUpper <= 256 * e.steinbergDegree.value() - 1);
  for (auto const& g : lie_sweep(9, 6)) {
    if (g.family == Family::Ree2F4 && g.q() == 2) continue;
    INFO(name(g));
    auto r = b_upper_bound(g);
    CHECK(r.fLower <= r.fUpper);
    CHECK(r.steinbergDegree.value() <= r.bUpper);
  }
  for (unsigned m = 5; m <= 20; ++m) {
    auto r = b_upper_bound(alternating(m));
    CHECK(b_alternating(m) <= r.bUpper);
    CHECK(r.fLower <= f_alternating(m));
  }
  auto j2 = b_upper_bound(sporadic("J2"));
  CHECK(j2.bUpper == 336);
  CHECK_THROWS(b_upper_bound(tits()));
}

TEST_CASE("Spin and PSp separation") {
  auto a = separation_check(3, 3);
  CHECK(a.alpha == -1);
  CHECK(a.d_spin == 27);
  CHECK(a.psp_degree == 13);
  CHECK(a.holds());
  auto b = separation_check(3, 5);
  CHECK(b.alpha == 1);
  CHECK(b.d_spin == 651);
  CHECK(b.psp_degree == 63);
  auto c = separation_check(4, 3);
  CHECK(c.d_spin == 780);
  CHECK(c.psp_degree == 41);
  CHECK_THROWS(separation_check(3, 4));
  CHECK_THROWS(separation_check(2, 5));
  CHECK(separation_sweep(10, 13).passed());
}

TEST_CASE("alternating scans") {
  auto f = f_alternating_scan(30);
  CHECK(f.passed());
  CHECK(status_of(f, "b(A_19) = 64664600") == "PASS");
  auto d = defect_zero_scan(45);
  CHECK(d.passed());
  CHECK(std::any_of(d.notes.begin(), d.notes.end(),
                    [](std::string const& n) { return n.rfind("orientation discrepancy", 0) == 0; }));
}

TEST_CASE("sporadic scan keeps the failing square-root claim") {
  auto s = sporadic_scan();
  CHECK(s.verdict() == Verdict::Fail);
  CHECK(status_of(s, "no sporadic group passes f(S) >= sqrt(p_S!/2)") == "FAIL");
  CHECK(status_of(s, "f(S) < f(A_m) whenever |S| divides |A_m|") == "PASS");
  CHECK(status_of(s, "16 sporadic groups have a 2-defect-zero character") == "PASS");
}

TEST_CASE("defect-zero codegrees and the mixed scan") {
  CHECK(defect_zero_codegrees(10, 2) == std::vector<Nat>{4725});
  CHECK(defect_zero_codegrees(10, 3) == std::vector<Nat>{3200});
  CHECK(defect_zero_codegrees(11, 2).empty());
  auto gs = lie_groups_in_characteristic(2, Nat(30000));
  CHECK(std::find(gs.begin(), gs.end(), lie(Family::PSL, 3, 4)) != gs.end());
  CHECK(std::find(gs.begin(), gs.end(), tits()) == gs.end());
  for (auto const& g : gs) CHECK(order_value(g) <= 30000);
  auto r = mixed_case_scan(12, Nat("10000000000"));
  CHECK(r.verdict() != Verdict::Fail);
  CHECK(status_of(r, "m = 10 candidates are 4725 (p=2) and 3200 (p=3)") == "PASS");
  for (auto const& row : r.rows) CHECK(row.back() != "VIOLATION");
}

TEST_CASE("Artin scans") {
  auto gs = lie_sweep(9, 8);
  auto t = artin_table1_scan(gs, {2, false});
  CHECK(t.passed());
  unsigned listed = 0;
  for (auto const& row : t.rows) {
    CHECK(row.back() != "UNLISTED-MISMATCH");
    if (row.back() == "listed-exception") ++listed;
  }
  CHECK(listed == artin_exception_list().size());
  auto c = artin_collision_scan(gs);
  CHECK(c.passed());
  CHECK(status_of(c, "char 2 bucket (4,3) holds PSL3(4), PSL4(2) and O8+(2)") == "PASS");
  bool o73 = false;
  for (auto const& row : c.rows)
    if (row[0] == "pair" && std::find(row.begin(), row.end(), "O7(3),PSp6(3)") != row.end())
      o73 = true;
  CHECK(o73);
}

TEST_CASE("results do not depend on the thread count") {
  auto gs = lie_sweep(9, 8);
  CHECK(artin_table1_scan(gs, {1, false}).to_tsv() == artin_table1_scan(gs, {8, false}).to_tsv());
  CHECK(sandwich_sweep(gs, {1, false}).to_tsv() == sandwich_sweep(gs, {8, false}).to_tsv());
  CHECK(mixed_case_scan(11, Nat("1000000000"), {1, false}).to_tsv() ==
        mixed_case_scan(11, Nat("1000000000"), {8, false}).to_tsv());
}
