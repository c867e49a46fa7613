#pragma once

#include "codeg/interval.hpp"
#include "codeg/numtheory.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace codeg {

class Partition {
 public:
  Partition() = default;
  // parts are sorted into weakly decreasing order; zeros dropped
  explicit Partition(std::vector<unsigned> parts);

  std::vector<unsigned> const& parts() const { return parts_; }
  unsigned size() const { return size_; }
  Partition conjugate() const;
  bool self_conjugate() const { return conjugate() == *this; }
  // row by row, left to right
  std::vector<unsigned> hooks() const;
  std::string str() const;

  auto operator<=>(Partition const&) const = default;

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

// partition enumeration is capped here
inline constexpr unsigned max_partition_size = 60;

// every partition of m, reverse lexicographic from (m) down to (1^m)
void for_each_partition(unsigned m, std::function<void(Partition const&)> const& f);
std::vector<Partition> partitions(unsigned m);

Nat hook_degree(Partition const& l);

struct DegreeProfile {
  bool alternating = true;
  unsigned m = 0;
  std::vector<Nat> degrees;  // nondecreasing
  Nat group_order() const;
  Nat sum_of_squares() const;
};

DegreeProfile symmetric_degrees(unsigned m);
// each pair {l, l'} with l != l' gives hook_degree(l); a self-conjugate
// l gives hook_degree(l)/2 twice. The sum of squares is checked.
DegreeProfile alternating_degrees(unsigned m);

Nat b_symmetric(unsigned m);
Nat b_alternating(unsigned m);
Rat f_alternating(unsigned m);

bool has_p_core(unsigned m, unsigned p);
// a p-core of size m, built from a charge vector on the p-runner abacus
std::optional<Partition> p_core_witness(unsigned m, unsigned p);

bool alternating_defect_zero(unsigned m, unsigned p);
// p = 2: m = 2k^2 + k or 2k^2 + k + 2 with k an integer of either sign.
// p = 3: no prime l = 2 mod 3 divides 3m + 1 to an odd power.
bool defect_zero_closed_form(unsigned m, unsigned p);
// the p = 2 rule read with k >= 0 only
bool defect_zero_closed_form_natural_k(unsigned m);
// the p = 3 rule read literally (some such l with an odd power)
bool defect_zero_closed_form_literal(unsigned m);

// (1/2) e^{-1.28255 sqrt m} sqrt(m!) <= b(A_m) <= e^{-0.11565 sqrt m} sqrt(m!)
Certified vk_lower_holds(unsigned m);
Certified vk_upper_holds(unsigned m);
Certified vk_bounds_hold(unsigned m);
// b(A_{m+1}) >= 2(m+1)/(sqrt(8m+1)+3) * b(A_m)
Certified branching_lower_bound_holds(unsigned m);
// b(A_{m+1}) <= (sqrt(8m+9)-1)/2 * b(S_m)
Certified branching_node_bound_holds(unsigned m);
// b(A_{m+1}) < (sqrt(8m+9)-1) * b(A_m)
Certified branching_upper_bound_holds(unsigned m);

}  // namespace codeg
