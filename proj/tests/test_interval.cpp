#include "doctest.h"

#include "codeg/interval.hpp"

using namespace codeg;

TEST_CASE("interval enclosures") {
  Interval two = Interval::from(Nat(2), 128);
  Interval r = sqrt(two);
  CHECK(r.lo() * r.lo() <= 2);
  CHECK(r.hi() * r.hi() >= 2);
  CHECK(r.hi() - r.lo() < Rat(1, 1000000000));
  Interval e = exp(Interval::from(Nat(1), 128));
  CHECK(e.lo() < Rat(2718281829, 1000000000));
  CHECK(e.hi() > Rat(2718281828, 1000000000));
  Interval d = Interval::decimal("1.28255", 128);
  CHECK(d.lo() <= Rat(128255, 100000));
  CHECK(d.hi() >= Rat(128255, 100000));
  CHECK(compare_lt(Interval::from(Nat(1), 64), Interval::from(Nat(2), 64)) == Certified::True);
  CHECK(compare_lt(Interval::from(Nat(2), 64), Interval::from(Nat(1), 64)) == Certified::False);
  // sqrt(2)^2 against 2 cannot be decided at any precision
  CHECK(certify([&](mpfr_prec_t p) {
          Interval s = sqrt(Interval::from(Nat(2), p));
          return compare_lt(s * s, Interval::from(Nat(2), p));
        }) == Certified::Unknown);
  Interval l = log(Interval::from(Nat(8), 128)) / log(Interval::from(Nat(2), 128));
  CHECK(l.floor_lo() <= 3);
  CHECK(l.ceil_hi() >= 3);
}
