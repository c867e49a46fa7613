#pragma once

#include "codeg/catalog.hpp"
#include "codeg/interval.hpp"
#include "codeg/invariants.hpp"
#include "codeg/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codeg {

struct ScanOptions {
  unsigned threads = 1;
  bool psi_multiset = false;
};

// ---- order coincidences

struct CoincidenceClass {
  Nat order;
  std::vector<Group> groups;  // canonical, sorted
};

std::vector<CoincidenceClass> coincidence_classes(Nat const& max_order);
// {A8, PSL3(4)} or {O_2n+1(q), PSp_2n(q)} with n >= 3, q odd
bool is_known_coincidence(CoincidenceClass const& c);
ScanReport coincidence_search(Nat const& max_order);

// ---- |S| < (|S|_p')^2

// first prime p | n with n >= (n_p')^2, if any
std::optional<Nat> kimmerle_violation(Factored const& n);
ScanReport kimmerle_sweep(Nat const& max_order, ScanOptions const& opt = {});
// same check over arbitrary labelled orders (used for the negative control)
ScanReport kimmerle_check(std::vector<std::pair<std::string, Factored>> const& items);
// the order 2^59 * 3 control, which must fail
std::vector<std::pair<std::string, Factored>> kimmerle_negative_control();

// ---- (q-1)^r |G|_p <= |G|_p' <= q^r |G|_p on simply connected orders

struct SandwichResult {
  Group group;
  unsigned r = 0;
  Nat d;             // |G| = d |S|
  Nat p_part;        // |G|_p = |S|_p
  Nat sc_pprime;     // |G|_p'
  Certified lower = Certified::Unknown, upper = Certified::Unknown;
  // the same pair of inequalities on |S| itself (informational)
  Certified simple_lower = Certified::Unknown, simple_upper = Certified::Unknown;
  bool holds() const { return lower == Certified::True && upper == Certified::True; }
};

// rank of the ambient algebraic group: n-1 for PSL_n and PSU_n, n for
// the other classical families, the fixed rank for exceptional ones
unsigned sandwich_rank(Group const& g);
SandwichResult order_sandwich_check(Group const& g);
ScanReport sandwich_sweep(std::vector<Group> const& groups, ScanOptions const& opt = {});

// ---- upper bounds for the largest degree

struct BoundReport {
  Group group;
  Factored steinbergDegree;  // |S|_p, 1 when not of Lie type
  Nat bUpper;
  Rat fLower;                // |S| / bUpper
  Rat fUpper;                // |S|_p' for Lie type
  std::string boundFamily;
};

// Lie type (Tits excluded), alternating, or sporadic (exact, from bundled data)
BoundReport b_upper_bound(Group const& g);

// ---- degree separation for PSp_2n(q) against Spin_2n+1(q)

struct SeparationResult {
  unsigned n = 0;
  std::uint64_t q = 0;
  int alpha = 0;       // 4 | q^n - alpha
  Nat d_spin;          // smallest nontrivial degree of Spin_2n+1(q) used
  Nat psp_degree;      // (q^n + alpha)/2
  bool separated = false;
  // second-stage comparisons; absent when not applicable
  std::optional<bool> witness_below_threshold;  // q > 3
  std::optional<bool> witness_distinct;         // q > 3
  std::optional<bool> q3_witness_below;         // q = 3, n >= 4
  Nat witness;                                  // (q^2n - 1)/(q^2 - 1)
  bool holds() const;
};

SeparationResult separation_check(unsigned n, std::uint64_t q);
ScanReport separation_sweep(unsigned max_n, std::uint64_t max_q);

// ---- alternating groups

ScanReport f_alternating_scan(unsigned max_m, ScanOptions const& opt = {});
ScanReport defect_zero_scan(unsigned max_m, ScanOptions const& opt = {});
ScanReport sporadic_scan();

// characteristic-p Lie descriptors (and Tits for p = 2) with order < bound
std::vector<Group> lie_groups_in_characteristic(std::uint64_t p, Nat const& bound);

// {|A_m| / chi(1) : chi of p-defect zero}, sorted
std::vector<Nat> defect_zero_codegrees(unsigned m, unsigned p);

ScanReport mixed_case_scan(unsigned max_m, Nat const& max_order, ScanOptions const& opt = {});

// ---- Artin invariants

ScanReport artin_table1_scan(std::vector<Group> const& groups, ScanOptions const& opt = {});
ScanReport artin_collision_scan(std::vector<Group> const& groups, ScanOptions const& opt = {});

}  // namespace codeg
