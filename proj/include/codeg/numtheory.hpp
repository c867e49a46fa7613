#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace codeg {

using Nat = mpz_class;
using Rat = mpq_class;

bool is_prime(Nat const& n);
bool is_prime_power(std::uint64_t q);

// q = p^t; throws std::invalid_argument if q is not a prime power
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n);

Nat ipow(Nat const& b, unsigned long e);
Nat factorial(unsigned long n);

// exponent of p in n (n > 0)
unsigned valuation(Nat const& n, Nat const& p);

// prime -> exponent; n >= 1
std::map<Nat, unsigned> factor(Nat const& n);

// least e >= 1 with p^e = 1 mod r; r prime not dividing p
Nat mult_order(Nat const& p, Nat const& r);

bool is_mersenne_prime(std::uint64_t p);

std::vector<unsigned> divisors(unsigned n);

}  // namespace codeg
