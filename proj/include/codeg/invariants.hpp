#pragma once

#include "codeg/catalog.hpp"
#include "codeg/cyclotomic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codeg {

struct CyclotomicFactorization {
  std::uint64_t d = 1;
  unsigned long k = 0;                                 // exponent of q
  std::vector<std::pair<unsigned, unsigned>> qFactors;  // (i, e_i), Phi_i(q)
  std::vector<std::pair<unsigned, unsigned>> pFactors;  // (j, f_j), Phi_j(p)
  std::uint64_t p = 0;
  unsigned t = 0;

  Nat q_form_value() const;
  Nat p_form_value() const;
  std::string str() const;
};

// any Lie-type descriptor, the Suzuki and Ree families included (their
// orders are products of Phi_i at the field size); both forms are
// checked against the order at construction
CyclotomicFactorization cyclotomic_factorization(Group const& g);
// same for an unvalidated order formula, e.g. G2(2) before taking G2(2)'
CyclotomicFactorization cyclotomic_factorization(OrderFormula const& f);

struct ArtinInvariants {
  Nat omega = 0;
  Nat psi = 0;
  bool degenerate = false;
  auto operator<=>(ArtinInvariants const&) const = default;
};

// largest and second largest order of p modulo the primes dividing n_{p'};
// distinct values unless multiset is set
ArtinInvariants artin_from_order(Factored const& n, Nat const& p, bool multiset = false);
ArtinInvariants artin_invariants(Group const& g, bool multiset = false);

// the generic-case row value, or nullopt when g falls in a listed exclusion
std::optional<ArtinInvariants> table1_prediction(Group const& g);
// the row used, for reports
std::string table1_row(Group const& g);

struct ArtinException {
  std::string group;
  unsigned long omega, psi;          // from the definition
  unsigned long gen_omega, gen_psi;  // generic formula
  std::string reason;
};

// reviewed mismatches between the definition and the generic formula
std::vector<ArtinException> const& artin_exception_list();
bool is_listed_exception(Group const& g);

}  // namespace codeg
