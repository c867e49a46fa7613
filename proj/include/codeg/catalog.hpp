#pragma once

#include "codeg/factored.hpp"

#include <compare>
#include <map>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codeg {

enum class Family {
  Alternating,
  PSL,
  PSU,
  PSp,
  OmegaOdd,
  POmegaPlus,
  POmegaMinus,
  Suzuki,
  Ree2G2,
  Ree2F4,
  G2,
  F4,
  E6,
  TwistedE6,
  E7,
  E8,
  ThreeD4,
  Tits,
  Sporadic,
  CyclicPrime
};

// rank: m for A_m, n for PSL_n / PSU_n (dimension), n for PSp_2n,
// Omega_2n+1 and POmega^pm_2n, and the rank of the ambient algebraic
// group for the exceptional families (2 for 2B2, 4 for 2F4, ...).
// Field size is p^t. CyclicPrime keeps its order in p.
struct Group {
  Family family = Family::Alternating;
  unsigned rank = 0;
  std::uint64_t p = 0;
  unsigned t = 0;
  std::string sporadic;

  std::uint64_t q() const;
  bool is_lie() const;
  auto operator<=>(Group const&) const = default;
};

// constructors validate parameters and throw std::invalid_argument
Group alternating(unsigned m);
Group lie(Family f, unsigned rank, std::uint64_t q);
Group sporadic(std::string const& name);
Group tits();
Group cyclic(std::uint64_t p);

bool is_valid(Group const& g);
// rank forced by an exceptional family, 0 for the others
unsigned fixed_rank(Family f);

std::string family_token(Family f);
std::string name(Group const& g);
// other common spellings of the same group
std::vector<std::string> aliases(Group const& g);

// accepts names such as "PSL3(4)", "O7(3)", "O8+(2)", "2B2(8)",
// "A8", "M11", "G2(2)'", "2G2(3)'", "2F4(2)'"
Group parse_group_name(std::string const& s);
// <FAMILY> <rank> <q>, A <m>, SPOR <name>, or a single name
Group parse_group(std::vector<std::string> const& tokens);

Group canonicalize(Group const& g);
bool is_canonical(Group const& g);

// |G| = q^k prod (q^i - 1)^[-] (q^i + 1)^[+] / d, over num minus den
struct OrderTerm {
  unsigned i;
  bool plus;
};
struct OrderFormula {
  std::uint64_t q = 0;
  unsigned long k = 0;
  std::vector<OrderTerm> num;
  std::vector<OrderTerm> den;
  std::uint64_t d = 1;
};

// formula for a Lie-type family; parameters are not validated, so
// non-simple members (G2(2), 2G2(3), ...) can also be evaluated
OrderFormula order_formula(Family f, unsigned rank, std::uint64_t q);
Nat evaluate(OrderFormula const& f);
// i -> e_i with the formula equal to q^k prod Phi_i(q)^e_i / d
std::map<unsigned, unsigned> q_cyclotomic_exponents(OrderFormula const& f);
Nat order_value(Group const& g);
Factored order(Group const& g);

struct SporadicDatum {
  std::string name;
  Nat order;
  std::uint64_t smallest_prime_not_dividing;
  bool has_2_defect_zero;
  Nat largest_degree;
};

// parsed from the compiled-in table after its digest is checked
std::vector<SporadicDatum> const& sporadic_data();
SporadicDatum const& sporadic_datum(std::string const& name);
std::vector<SporadicDatum> parse_sporadic_table(std::string const& text);

inline Nat const tits_order{17971200};

struct CatalogEntry {
  Group group;
  Factored order;
};

// one canonical representative per class of nonabelian simple group
// of order <= bound, sorted by order and then by descriptor
std::vector<CatalogEntry> enumerate_simple_groups(Nat const& max_order);

// valid Lie-type descriptors, not canonicalized, with q <= max_q and
// rank parameter <= max_rank (and order <= max_order if given).
// Omega_2n+1 is produced for odd q and n >= 3 only.
std::vector<Group> lie_sweep(std::uint64_t max_q, unsigned max_rank,
                             std::optional<Nat> const& max_order = std::nullopt);

// every valid Lie descriptor (raw, each characteristic) of order <= bound
std::vector<Group> lie_descriptors_upto(Nat const& max_order);

// defining characteristic (Lie type only)
std::uint64_t characteristic(Group const& g);

}  // namespace codeg
