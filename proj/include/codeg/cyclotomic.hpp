#pragma once

#include "codeg/factored.hpp"

#include <map>
#include <vector>

namespace codeg {

// integer polynomial, coefficients from the constant term up
using Poly = std::vector<Nat>;

Poly poly_mul(Poly const& a, Poly const& b);
// exact division by a monic polynomial; throws if the remainder is nonzero
Poly poly_divexact(Poly const& a, Poly const& b);
Poly poly_substitute_power(Poly const& a, unsigned t);  // a(x^t)
Nat poly_eval(Poly const& a, Nat const& x);

Poly const& cyclotomic_poly(unsigned n);

// Phi_i(q) via (q^i - 1) / prod_{d | i, d < i} Phi_d(q)
Nat cyclotomic_eval(unsigned i, Nat const& q);

// the j with Phi_i(x^t) = prod Phi_j(x), increasing; the identity is
// checked by exact polynomial multiplication on first use
std::vector<unsigned> const& cyclotomic_refinement(unsigned i, unsigned t);

// factorization of Phi_j(p), cached
Factored const& cyclotomic_factored(unsigned j, unsigned long p);

// q^i - 1 (plus = false) or q^i + 1 (plus = true) as cyclotomic indices
std::vector<unsigned> binomial_indices(unsigned i, bool plus);

}  // namespace codeg
