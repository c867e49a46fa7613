#include "doctest.h"

#include "codeg/catalog.hpp"
#include "codeg/invariants.hpp"

#include <set>

using namespace codeg;

namespace {

// definition by brute force: trial-divide |S|_p' and step powers of p
std::pair<unsigned long, unsigned long> brute_artin(Group const& g) {
  unsigned long p = g.p;
  Nat n = order_value(g);
  while (n % p == 0) n /= p;
  std::set<unsigned long> orders;
  auto add = [&](unsigned long r) {
    unsigned long x = p % r, e = 1;
    while (x != 1) {
      x = x * p % r;
      ++e;
    }
    orders.insert(e);
  };
  for (unsigned long r = 2; Nat(r) * r <= n; ++r)
    if (n % r == 0) {
      while (n % r == 0) n /= r;
      add(r);
    }
  if (n > 1) add(n.get_ui());
  auto it = orders.rbegin();
  unsigned long om = *it;
  unsigned long ps = orders.size() > 1 ? *std::next(it) : om;
  return {om, ps};
}

}  // namespace

TEST_CASE("Artin invariants of named groups") {
  auto a = artin_invariants(lie(Family::PSL, 3, 4));
  CHECK(a.omega == 4);
  CHECK(a.psi == 3);
  auto b = artin_invariants(lie(Family::PSp, 3, 3));
  CHECK(b.omega == 6);
  CHECK(b.psi == 4);
  auto c = artin_invariants(lie(Family::PSL, 4, 2));
  CHECK(c.omega == 4);
  CHECK(c.psi == 3);
  auto d = artin_invariants(lie(Family::PSL, 2, 7));
  CHECK(d.degenerate);
  CHECK(d.omega == d.psi);
  CHECK_THROWS(artin_invariants(alternating(7)));
}

TEST_CASE("Artin invariants agree with the brute-force definition") {
  for (auto const& g : lie_sweep(32, 6, Nat("1000000000000"))) {
    INFO(name(g));
    auto [om, ps] = brute_artin(g);
    auto a = artin_invariants(g);
    CHECK(a.omega == om);
    CHECK(a.psi == ps);
  }
}

TEST_CASE("multiset variant keeps repeated orders") {
  // 2^4 - 1 = 3 * 5: orders 2 and 4; PSL2(16) adds 17 with order 8
  auto n = Factored(Nat(16) * 15 * 17);
  auto s = artin_from_order(n, 2, false);
  CHECK(s.omega == 8);
  CHECK(s.psi == 4);
  // 2 has order 11 modulo both 23 and 89, order 2 modulo 3
  auto m = artin_from_order(Factored(Nat(3 * 23 * 89)), 2, true);
  CHECK(m.omega == 11);
  CHECK(m.psi == 11);
  auto m2 = artin_from_order(Factored(Nat(3 * 23 * 89)), 2, false);
  CHECK(m2.omega == 11);
  CHECK(m2.psi == 2);
}

TEST_CASE("generic predictions") {
  auto l = table1_prediction(lie(Family::PSL, 5, 3));
  REQUIRE(l);
  CHECK(l->omega == 5);
  CHECK(l->psi == 4);
  auto e8 = table1_prediction(lie(Family::E8, 8, 2));
  REQUIRE(e8);
  CHECK(e8->omega == 30);
  CHECK(e8->psi == 24);
  auto e8b = table1_prediction(lie(Family::E8, 8, 4));
  REQUIRE(e8b);
  CHECK(e8b->omega == 60);
  CHECK(e8b->psi == 48);
  auto sz = table1_prediction(lie(Family::Suzuki, 2, 8));
  REQUIRE(sz);
  CHECK(sz->omega == 12);
  CHECK(sz->psi == 4);
  CHECK_FALSE(table1_prediction(lie(Family::PSL, 2, 64)));
  CHECK_FALSE(table1_prediction(lie(Family::PSL, 3, 4)));
  CHECK_FALSE(table1_prediction(lie(Family::PSL, 3, 8)));
}

TEST_CASE("exception list") {
  auto const& ex = artin_exception_list();
  CHECK(ex.size() == 6);
  for (auto const& e : ex) {
    Group g = parse_group_name(e.group);
    CHECK(is_listed_exception(g));
    auto a = artin_invariants(g);
    CHECK(a.omega == e.omega);
    CHECK(a.psi == e.psi);
    auto gen = table1_prediction(g);
    REQUIRE(gen);
    CHECK(gen->omega == e.gen_omega);
    CHECK(gen->psi == e.gen_psi);
  }
  CHECK_FALSE(is_listed_exception(lie(Family::PSL, 3, 4)));
}
