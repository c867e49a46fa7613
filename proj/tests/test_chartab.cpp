#include "doctest.h"

#include "codeg/chartab.hpp"
#include "codeg/checksum.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>

using namespace codeg;
namespace fs = std::filesystem;

namespace {

std::string fixture(std::string const& n) { return std::string(CODEG_DATA_DIR) + "/fixtures/" + n + ".tbl"; }

CharacterTable fx(std::string const& n) { return load_table(fixture(n)); }

int parse_error_line(std::string const& text) {
  try {
    parse_table_string(text);
  } catch (ParseError const& e) {
    return e.line;
  }
  return 0;
}

std::string invariant_error(std::string const& text) {
  try {
    parse_table_string(text);
  } catch (TableInvariantError const& e) {
    return e.what();
  }
  return "";
}

std::vector<std::pair<Nat, Nat>> sorted_records(CharacterTable const& t) {
  std::vector<std::pair<Nat, Nat>> v;
  for (auto const& r : t.records) v.emplace_back(r.degree, r.kernelOrder);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (auto const& e : fs::directory_iterator(fs::path(CODEG_DATA_DIR) / "fixtures"))
    if (e.path().extension() == ".tbl") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Nat> prime_divisors(Nat n) {
  std::set<Nat> s;
  for (Nat p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      s.insert(p);
      n /= p;
    }
  if (n > 1) s.insert(n);
  return s;
}

}  // namespace

TEST_CASE("fixture checksums") {
  auto m = read_manifest(std::string(CODEG_DATA_DIR) + "/SHA256SUMS");
  unsigned tbl = 0;
  for (auto const& [path, hex] : m) {
    INFO(path);
    CHECK(sha256_hex(read_file(std::string(CODEG_DATA_DIR) + "/" + path)) == hex);
    if (path.rfind("fixtures/", 0) == 0) ++tbl;
  }
  CHECK(tbl == fixture_names().size());
}

TEST_CASE("parsing the A5 fixture") {
  auto t = fx("A5");
  CHECK(t.name == "A5");
  CHECK(t.groupOrder.value() == 60);
  std::vector<Nat> d;
  for (auto const& r : t.records) d.push_back(r.degree);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<Nat>{1, 3, 3, 4, 5});
  CHECK(parse_table_string(format_table(t)).records.size() == 5);
  CHECK(format_table(parse_table_string(format_table(t))) == format_table(t));
}

TEST_CASE("malformed tables") {
  CHECK(invariant_error("group X\norder 60\nchar 1 60\nchar 3 1\nchar 4 1\nchar 5 1\n") == "sum-of-squares mismatch");
  CHECK(invariant_error("group X\norder 6\nchar 1 6\nchar 1 6\nchar 2 1\n") == "expected exactly one trivial character");
  CHECK(invariant_error("group X\norder 6\nchar 1 6\nchar 1 5\nchar 2 1\n") ==
        "kernel order does not divide group order");
  CHECK(invariant_error("group X\norder 8\nchar 1 8\nchar 1 4\nchar 1 4\nchar 1 4\nchar 2 8\n") ==
        "non-integral codegree");
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("group X\norder 2\nchar 1 2\nchar 1 1") == 4);
  CHECK(parse_error_line("group X\n\norder 2\n") == 2);
  CHECK(parse_error_line("group X\norder 2\nchar 1  2\n") == 3);
  CHECK(parse_error_line("group X\norder 2\r\nchar 1 2\n") == 2);
  CHECK(parse_error_line("order 2\ngroup X\n") == 1);
  CHECK(parse_error_line("group X\nchar 1 2\n") == 2);
  CHECK(parse_error_line("group X\norder 2\nchar 1 2\ncolour 3\n") == 4);
  CHECK(parse_error_line("group X\norder -2\n") == 2);
  CHECK(parse_error_line("group X\norder 2\nchar 1 0x2\n") == 3);
  CHECK(parse_error_line("group X\norder 2\nchar 1\n") == 3);
  CHECK(parse_error_line("group X\norder 2\n") > 0);
  CHECK(parse_error_line("group X\ngroup Y\n") == 2);
  CHECK_THROWS(load_table("/nonexistent/x.tbl"));
}

TEST_CASE("codegree profiles") {
  auto a5 = codegree_profile(fx("A5"));
  CHECK(a5 == CodegreeProfile{{{Nat(1), 1}, {Nat(12), 1}, {Nat(15), 1}, {Nat(20), 2}}});
  auto l27 = codegree_profile(fx("L2_7"));
  CHECK(l27 == CodegreeProfile{{{Nat(1), 1}, {Nat(21), 1}, {Nat(24), 1}, {Nat(28), 1}, {Nat(56), 2}}});
  auto c6 = codegree_profile(fx("C6"));
  CHECK(c6 == CodegreeProfile{{{Nat(1), 1}, {Nat(2), 1}, {Nat(3), 2}, {Nat(6), 2}}});
  CHECK(is_perfect_by_codegrees(fx("A5")));
  CHECK_FALSE(is_perfect_by_codegrees(fx("C6")));
  CHECK(is_perfect_by_codegrees(fx("L3_4")));
  CHECK_FALSE(has_prime_power_codegree(fx("A5")));
  CHECK(has_prime_power_codegree(fx("C6")));
  CHECK(smallest_nontrivial_codegree(fx("A5")) == 12);
  CHECK(smallest_nontrivial_codegree(fx("L2_7")) == 21);
}

TEST_CASE("codegree containment") {
  auto a5 = codegree_profile(fx("A5"));
  CHECK(cod_subset(a5, a5, true));
  CHECK_FALSE(cod_subset(codegree_profile(fx("L3_4")), codegree_profile(fx("L4_2")), false));
  CHECK_FALSE(cod_subset(a5, codegree_profile(fx("C6")), false));
  CHECK(first_missing_codegree(a5, codegree_profile(fx("C6")), false) == 12);
  // A5 embeds in A6 by order only; codegrees differ
  CHECK(first_missing_codegree(a5, codegree_profile(fx("A6")), false) > 0);
}

TEST_CASE("predicates over every fixture") {
  for (auto const& n : fixture_names()) {
    INFO(n);
    auto t = fx(n);
    auto prof = codegree_profile(t);
    unsigned long total = 0;
    for (auto const& [c, m] : prof.entries) total += m;
    CHECK(total == t.records.size());
    CHECK(prof.entries.front() == std::pair<Nat, unsigned long>{Nat(1), 1});
    std::set<Nat> cp;
    for (auto const& r : t.records) {
      Nat c = t.codegree(r);
      bool trivial = r.degree == 1 && r.kernelOrder == t.groupOrder.value();
      if (!trivial) CHECK(c > r.degree);
      for (auto const& p : prime_divisors(c)) cp.insert(p);
    }
    CHECK(cp == prime_divisors(t.groupOrder.value()));
    bool simple = kernels_trivial(t) && max_degree(t) > 1;
    if (simple) {
      CHECK_FALSE(has_prime_codegree(t));
      CHECK_FALSE(has_prime_power_codegree(t));
      CHECK(smallest_nontrivial_codegree(t) * max_degree(t) == t.groupOrder.value());
      auto cert = divisibility_certificate(t, t);
      CHECK(cert.ok());
      Rat want(t.groupOrder.value() - 1, t.groupOrder.value() * t.groupOrder.value());
      want.canonicalize();
      CHECK(cert.identity_lhs == want);
    } else {
      CHECK(has_prime_codegree(t));
    }
  }
  CHECK(divisibility_certificate(fx("A5"), fx("A5")).identity_lhs == Rat(59, 3600));
}

TEST_CASE("abelian fixtures: codegrees are element orders") {
  for (unsigned n : {2u, 3u, 5u, 6u, 7u}) {
    auto t = fx("C" + std::to_string(n));
    std::vector<Nat> got, want;
    for (auto const& r : t.records) got.push_back(t.codegree(r));
    for (unsigned k = 0; k < n; ++k) want.push_back(Nat(n / std::gcd(k, n)));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("direct product matches the independently computed A5 x C2") {
  auto p = direct_product(fx("A5"), fx("C2"));
  auto ref = fx("A5xC2");
  CHECK(p.groupOrder == ref.groupOrder);
  CHECK(sorted_records(p) == sorted_records(ref));
  auto cert = divisibility_certificate(fx("A5"), p);
  CHECK(cert.hypothesis);
  CHECK(cert.divides);
  CHECK(cert.ok());
  CHECK(cert.witnesses.at(Nat(20)).size() == 2);
  auto bad = divisibility_certificate(fx("A5"), fx("A8"));
  CHECK_FALSE(bad.hypothesis);
  CHECK(bad.missing > 0);
  CHECK_THROWS(direct_product(fx("C2"), fx("C3")));
  CHECK_THROWS(divisibility_certificate(fx("C6"), fx("C6")));
}
