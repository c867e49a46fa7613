#include "doctest.h"

#include "codeg/checksum.hpp"
#include "codeg/cyclotomic.hpp"
#include "codeg/factored.hpp"
#include "codeg/numtheory.hpp"

#include <numeric>

using namespace codeg;

namespace {

bool trial_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned long brute_order(unsigned long p, unsigned long r) {
  unsigned long x = p % r, e = 1;
  while (x != 1) {
    x = x * p % r;
    ++e;
  }
  return e;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

// Phi_n(q) = prod_{d | n} (q^d - 1)^mu(n/d), as a rational
Nat mobius_cyclotomic(unsigned n, Nat const& q) {
  Rat v = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    Nat x = ipow(q, d) - 1;
    if (mu == 1) v *= Rat(x);
    if (mu == -1) v /= Rat(x);
  }
  v.canonicalize();
  REQUIRE(v.get_den() == 1);
  return v.get_num();
}

}  // namespace

TEST_CASE("primality and prime powers agree with trial division") {
  for (unsigned long n = 0; n < 5000; ++n) CHECK(is_prime(Nat(n)) == trial_prime(n));
  auto ps = primes_up_to(1000);
  CHECK(ps.size() == 168);
  for (std::uint64_t q = 2; q < 3000; ++q) {
    bool pp = false;
    for (auto p : ps)
      if (q % p == 0) {
        std::uint64_t x = q;
        while (x % p == 0) x /= p;
        pp = x == 1;
        break;
      }
    if (q > 1000 && !pp) pp = trial_prime(q);
    CHECK(is_prime_power(q) == pp);
  }
  CHECK(prime_power(3125) == std::pair<std::uint64_t, unsigned>{5, 5});
  CHECK_THROWS_AS(prime_power(12), std::invalid_argument);
}

TEST_CASE("multiplicative order") {
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(2, 5) == 4);
  CHECK(mult_order(3, 13) == 3);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul})
    for (unsigned long r = 2; r < 600; ++r)
      if (trial_prime(r) && r != p) CHECK(mult_order(Nat(p), Nat(r)) == brute_order(p, r));
}

TEST_CASE("factorization multiplies back") {
  for (unsigned long n = 1; n < 3000; ++n) {
    Nat prod = 1;
    for (auto const& [p, e] : factor(Nat(n))) {
      CHECK(is_prime(p));
      prod *= ipow(p, e);
    }
    CHECK(prod == n);
  }
  Factored f(Nat(20160));
  CHECK(f.str() == "2^6*3^2*5*7");
  CHECK(f.p_part(2).value() == 64);
  CHECK(f.p_prime_part(2).value() == 315);
  CHECK(Factored(Nat(60)).p_part(7).is_one());
  CHECK(Factored(Nat(60)).p_prime_part(7).value() == 60);
  CHECK(Factored(Nat(243)).p_part(3).value() == 243);
  CHECK(Factored(Nat(243)).p_prime_part(3).is_one());
  CHECK((f / Factored(Nat(63))).value() == 320);
  CHECK_THROWS_AS(f / Factored(Nat(11)), std::domain_error);
  CHECK(Factored(Nat(1)).str() == "1");
  CHECK(valuation(Nat(20160), Nat(2)) == 6);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_eval(1, 2) == 1);
  CHECK(cyclotomic_eval(6, 2) == 3);
  CHECK(cyclotomic_eval(12, 3) == 73);
  CHECK(poly_eval(cyclotomic_poly(12), 3) == 73);
  for (unsigned n = 1; n <= 60; ++n)
    for (unsigned q = 2; q <= 17; ++q) {
      Nat v = cyclotomic_eval(n, q);
      if (n <= 30) CHECK(v == mobius_cyclotomic(n, q));
      CHECK(v >= ipow(Nat(q - 1), static_cast<unsigned long>(cyclotomic_poly(n).size() - 1)));
    }
  for (unsigned n = 1; n <= 60; ++n)
    for (unsigned q = 2; q <= 17; ++q) {
      Nat prod = 1;
      for (auto d : divisors(n)) prod *= cyclotomic_eval(d, q);
      CHECK(prod == ipow(Nat(q), n) - 1);
    }
}

TEST_CASE("cyclotomic refinement in x^t") {
  // Phi_1(x^3) = Phi_1 Phi_3, Phi_2(x^3) = Phi_2 Phi_6
  CHECK(cyclotomic_refinement(1, 3) == std::vector<unsigned>{1, 3});
  CHECK(cyclotomic_refinement(2, 3) == std::vector<unsigned>{2, 6});
  for (unsigned i = 1; i <= 12; ++i)
    for (unsigned t = 1; t <= 6; ++t) {
      Nat prod = 1;
      for (auto j : cyclotomic_refinement(i, t)) prod *= cyclotomic_eval(j, 2);
      CHECK(prod == cyclotomic_eval(i, ipow(Nat(2), t)));
    }
  CHECK(cyclotomic_factored(6, 2).value() == 3);
  CHECK(cyclotomic_factored(12, 2).value() == 13);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
