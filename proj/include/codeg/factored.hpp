#pragma once

#include "codeg/numtheory.hpp"

#include <map>
#include <string>
#include <vector>

namespace codeg {

// exact natural number kept as a prime -> exponent map
class Factored {
 public:
  Factored() = default;
  explicit Factored(Nat const& n);
  explicit Factored(unsigned long n) : Factored(Nat(n)) {}

  // keys must be prime and exponents positive; checked
  static Factored from_map(std::map<Nat, unsigned> const& f);
  static Factored prime_power(Nat const& p, unsigned e);

  Nat const& value() const { return value_; }
  std::map<Nat, unsigned> const& factors() const { return f_; }
  std::vector<Nat> primes() const;
  unsigned exponent(Nat const& p) const;
  bool is_one() const { return f_.empty(); }

  Factored p_part(Nat const& p) const;
  Factored p_prime_part(Nat const& p) const;

  Factored& operator*=(Factored const& o);
  // exact division; throws std::domain_error if o does not divide *this
  Factored& operator/=(Factored const& o);
  Factored pow(unsigned e) const;
  bool divides(Factored const& o) const;

  // "2^6*3^2*5*7", "1" for the empty product
  std::string str() const;

  friend bool operator==(Factored const& a, Factored const& b) { return a.f_ == b.f_; }
  friend bool operator<(Factored const& a, Factored const& b) { return a.value_ < b.value_; }

 private:
  std::map<Nat, unsigned> f_;
  Nat value_ = 1;
};

inline Factored operator*(Factored a, Factored const& b) { return a *= b; }
inline Factored operator/(Factored a, Factored const& b) { return a /= b; }

}  // namespace codeg
