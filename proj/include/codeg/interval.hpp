#pragma once

#include "codeg/numtheory.hpp"

#include <mpfr.h>

#include <string>

namespace codeg {

// closed interval [lo, hi] with MPFR endpoints; every operation rounds
// lo down and hi up, so the true value stays enclosed
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(Interval const& o);
  Interval& operator=(Interval const& o);
  ~Interval();

  static Interval from(Nat const& n, mpfr_prec_t prec);
  static Interval from(Rat const& r, mpfr_prec_t prec);
  // decimal literal such as "1.28255", read as the exact rational
  static Interval decimal(std::string const& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }
  Rat lo() const;
  Rat hi() const;
  // floor(lo) and ceil(hi)
  Nat floor_lo() const;
  Nat ceil_hi() const;

  friend Interval operator+(Interval const& a, Interval const& b);
  friend Interval operator-(Interval const& a, Interval const& b);
  friend Interval operator*(Interval const& a, Interval const& b);
  // b must not contain 0
  friend Interval operator/(Interval const& a, Interval const& b);

  friend Interval sqrt(Interval const& a);  // a >= 0
  friend Interval exp(Interval const& a);
  friend Interval log(Interval const& a);   // a > 0
  // a^b = exp(b log a), a > 0
  friend Interval pow(Interval const& a, Interval const& b);

  bool certainly_lt(Interval const& o) const;
  bool certainly_le(Interval const& o) const;
  bool contains_zero() const;
  std::string str(int digits = 12) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

enum class Certified { True, False, Unknown };

std::string to_string(Certified c);

// runs test at 128 bits, then at 256 bits if undecided
template <class F>
Certified certify(F&& test) {
  for (mpfr_prec_t prec : {128, 256}) {
    Certified c = test(prec);
    if (c != Certified::Unknown) return c;
  }
  return Certified::Unknown;
}

// a < b: True if certainly, False if certainly a >= b, else Unknown
Certified compare_lt(Interval const& a, Interval const& b);
Certified compare_le(Interval const& a, Interval const& b);

}  // namespace codeg
