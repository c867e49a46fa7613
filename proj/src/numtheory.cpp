#include "codeg/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace codeg {

namespace {

  std::vector<std::uint64_t> const& small_primes() {
    static std::vector<std::uint64_t> const ps = primes_up_to(10000);
    return ps;
  }

  // Brent's variant of Pollard rho; n odd composite
  Nat brent(Nat const& n) {
    for (unsigned long c = 1;; ++c) {
      Nat y = 2, x, g = 1, q = 1, ys;
      unsigned long r = 1;
      unsigned long const m = 128;
      auto f = [&](Nat const& v) {
        Nat w = v * v + c;
        mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
        return w;
      };
      do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
          ys = y;
          for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
            y = f(y);
            Nat d = abs(x - y);
            q = q * d % n;
          }
          mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
          k += m;
        } while (k < r && g == 1);
        r *= 2;
      } while (g == 1);
      if (g == n) {
        do {
          ys = f(ys);
          Nat d = abs(x - ys);
          mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
      }
      if (g != n) return g;
    }
  }

  void split(Nat const& n, std::map<Nat, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
      ++out[n];
      return;
    }
    Nat d = brent(n);
    split(d, out);
    split(n / d, out);
  }

}  // namespace

bool is_prime(Nat const& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(n)) {
    for (std::uint64_t q = p; q <= n; q *= p) {
      out.push_back(q);
      if (q > n / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  auto f = factor(Nat(q));
  if (f.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {f.begin()->first.get_ui(), f.begin()->second};
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  return factor(Nat(q)).size() == 1;
}

Nat ipow(Nat const& b, unsigned long e) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Nat factorial(unsigned long n) {
  Nat r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

unsigned valuation(Nat const& n, Nat const& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Nat m = n;
  return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

std::map<Nat, unsigned> factor(Nat const& n) {
  if (n < 1) throw std::invalid_argument("factor: expected a positive integer");
  std::map<Nat, unsigned> out;
  Nat m = n;
  for (auto p : small_primes()) {
    if (m == 1) break;
    Nat pp(static_cast<unsigned long>(p));
    if (pp * pp > m) break;
    unsigned e = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
    if (e) out[pp] = e;
  }
  split(m, out);
  return out;
}

Nat mult_order(Nat const& p, Nat const& r) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: modulus must be prime");
  if (p % r == 0) throw std::invalid_argument("mult_order: modulus divides base");
  Nat e = r - 1;
  for (auto const& [s, k] : factor(r - 1)) {
    (void) k;
    while (e % s == 0) {
      Nat cand = e / s, v;
      mpz_powm(v.get_mpz_t(), p.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
      if (v != 1) break;
      e = cand;
    }
  }
  return e;
}

bool is_mersenne_prime(std::uint64_t p) {
  return p > 2 && ((p + 1) & p) == 0 && is_prime(Nat(p));
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace codeg
