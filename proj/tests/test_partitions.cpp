#include "doctest.h"

#include "codeg/numtheory.hpp"
#include "codeg/partitions.hpp"

#include <algorithm>
#include <map>

using namespace codeg;

namespace {

void gen(unsigned left, unsigned maxpart, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(left, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen(left - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> all_partitions(unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  gen(m, m, cur, out);
  return out;
}

// hook lengths read off the diagram cell by cell
std::vector<unsigned> diagram_hooks(std::vector<unsigned> const& l) {
  std::vector<unsigned> col(l.empty() ? 0 : l[0], 0);
  for (auto r : l)
    for (unsigned j = 0; j < r; ++j) ++col[j];
  std::vector<unsigned> h;
  for (unsigned i = 0; i < l.size(); ++i)
    for (unsigned j = 0; j < l[i]; ++j) h.push_back(l[i] - j + col[j] - i - 1);
  std::sort(h.begin(), h.end());
  return h;
}

bool brute_core(unsigned m, unsigned p) {
  for (auto const& l : all_partitions(m)) {
    auto h = diagram_hooks(l);
    if (std::none_of(h.begin(), h.end(), [&](unsigned x) { return x % p == 0; })) return true;
  }
  return false;
}

Nat brute_degree(std::vector<unsigned> const& l) {
  unsigned m = 0;
  for (auto x : l) m += x;
  Nat h = 1;
  for (auto x : diagram_hooks(l)) h *= x;
  return factorial(m) / h;
}

}  // namespace

TEST_CASE("partition enumeration matches the recursive generator") {
  for (unsigned m = 1; m <= 22; ++m) {
    auto ours = partitions(m);
    auto ref = all_partitions(m);
    REQUIRE(ours.size() == ref.size());
    std::vector<std::vector<unsigned>> got;
    for (auto const& p : ours) got.push_back(p.parts());
    std::sort(got.begin(), got.end());
    std::sort(ref.begin(), ref.end());
    CHECK(got == ref);
  }
  CHECK(partitions(30).size() == 5604);
}

TEST_CASE("hooks and degrees") {
  Partition st({4, 3, 2, 1});
  auto h = st.hooks();
  std::sort(h.begin(), h.end());
  CHECK(h == std::vector<unsigned>{1, 1, 1, 1, 3, 3, 3, 5, 5, 7});
  CHECK(hook_degree(st) == 768);
  CHECK(hook_degree(Partition({7})) == 1);
  CHECK(hook_degree(Partition(std::vector<unsigned>(7, 1))) == 1);
  CHECK(st.self_conjugate());
  for (unsigned m = 1; m <= 20; ++m)
    for (auto const& l : partitions(m)) {
      auto hh = l.hooks();
      std::sort(hh.begin(), hh.end());
      CHECK(hh == diagram_hooks(l.parts()));
      CHECK(hook_degree(l) == hook_degree(l.conjugate()));
      if (m <= 14) CHECK(hook_degree(l) == brute_degree(l.parts()));
    }
}

TEST_CASE("alternating degree profiles") {
  auto a5 = alternating_degrees(5);
  CHECK(a5.degrees == std::vector<Nat>{1, 3, 3, 4, 5});
  CHECK(a5.sum_of_squares() == 60);
  auto a10 = alternating_degrees(10);
  CHECK(std::count(a10.degrees.begin(), a10.degrees.end(), Nat(384)) >= 2);
  CHECK(std::count(a10.degrees.begin(), a10.degrees.end(), Nat(567)) == 1);
  for (unsigned m = 5; m <= 45; ++m) {
    auto d = alternating_degrees(m);
    CHECK(d.sum_of_squares() == factorial(m) / 2);
    CHECK(std::is_sorted(d.degrees.begin(), d.degrees.end()));
    CHECK(symmetric_degrees(m).sum_of_squares() == factorial(m));
  }
  CHECK(b_alternating(5) == 5);
  CHECK(f_alternating(5) == 12);
  CHECK(f_alternating(6) > f_alternating(5));
  CHECK(b_alternating(19) == 64664600);
  CHECK_THROWS(b_alternating(4));
}

TEST_CASE("p-cores against the hook scan") {
  CHECK(has_p_core(10, 2));
  CHECK_FALSE(has_p_core(5, 2));
  CHECK(has_p_core(10, 3));
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m <= 30; ++m) {
      INFO("m=" << m << " p=" << p);
      bool b = brute_core(m, p);
      CHECK(has_p_core(m, p) == b);
      auto w = p_core_witness(m, p);
      CHECK(w.has_value() == b);
      if (w) {
        CHECK(w->size() == m);
        for (auto x : w->hooks()) CHECK(x % p != 0);
      }
    }
}

TEST_CASE("defect zero") {
  CHECK(alternating_defect_zero(10, 2));
  CHECK(alternating_defect_zero(10, 3));
  CHECK_FALSE(alternating_defect_zero(11, 2));
  CHECK(defect_zero_closed_form(10, 2));
  CHECK_FALSE(defect_zero_closed_form(23, 3));
  CHECK(defect_zero_closed_form(12, 3));
  CHECK_THROWS(defect_zero_closed_form(10, 5));
  std::vector<unsigned> natural_k_gaps;
  for (unsigned m = 5; m <= 45; ++m) {
    INFO("m=" << m);
    CHECK(alternating_defect_zero(m, 2) == defect_zero_closed_form(m, 2));
    CHECK(alternating_defect_zero(m, 3) == defect_zero_closed_form(m, 3));
    CHECK(defect_zero_closed_form_literal(m) != defect_zero_closed_form(m, 3));
    if (defect_zero_closed_form_natural_k(m) != alternating_defect_zero(m, 2)) natural_k_gaps.push_back(m);
  }
  CHECK(natural_k_gaps == std::vector<unsigned>{6, 8, 15, 17, 28, 30, 45});
}

TEST_CASE("degree bounds") {
  for (unsigned m = 5; m <= 20; ++m) {
    INFO("m=" << m);
    CHECK(vk_bounds_hold(m) == Certified::True);
    CHECK(branching_lower_bound_holds(m) == Certified::True);
  }
  for (unsigned m = 5; m <= 44; ++m) CHECK(branching_upper_bound_holds(m) == Certified::True);
  CHECK(vk_lower_holds(19) == Certified::True);
}
