#include "codeg/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace codeg {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(Interval const& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(Interval const& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from(Nat const& n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from(Rat const& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::decimal(std::string const& s, mpfr_prec_t prec) {
  auto dot = s.find('.');
  std::string digits = s;
  Nat den = 1;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    den = ipow(Nat(10), s.size() - dot - 1);
  }
  Rat q(Nat(digits), den);
  q.canonicalize();
  return from(q, prec);
}

Rat Interval::lo() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rat Interval::hi() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

Nat Interval::floor_lo() const {
  Nat z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

Nat Interval::ceil_hi() const {
  Nat z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

Interval operator+(Interval const& a, Interval const& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(Interval const& a, Interval const& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(Interval const& a, Interval const& b) {
  auto prec = std::max(a.prec_, b.prec_);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (auto x : {a.lo_, a.hi_})
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(Interval const& a, Interval const& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  auto prec = std::max(a.prec_, b.prec_);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (auto x : {a.lo_, a.hi_})
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval sqrt(Interval const& a) {
  if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("interval sqrt of a negative value");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(Interval const& a) {
  Interval r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(Interval const& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("interval log of a non-positive value");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval pow(Interval const& a, Interval const& b) { return exp(b * log(a)); }

bool Interval::certainly_lt(Interval const& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_le(Interval const& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

std::string Interval::str(int digits) const {
  char buf[256];
  std::string s = "[";
  mpfr_snprintf(buf, sizeof buf, "%.*RDg", digits, lo_);
  s += buf;
  s += ", ";
  mpfr_snprintf(buf, sizeof buf, "%.*RUg", digits, hi_);
  s += buf;
  return s + "]";
}

std::string to_string(Certified c) {
  switch (c) {
    case Certified::True: return "true";
    case Certified::False: return "false";
    default: return "unknown";
  }
}

Certified compare_lt(Interval const& a, Interval const& b) {
  if (a.certainly_lt(b)) return Certified::True;
  if (b.certainly_le(a)) return Certified::False;
  return Certified::Unknown;
}

Certified compare_le(Interval const& a, Interval const& b) {
  if (a.certainly_le(b)) return Certified::True;
  if (b.certainly_lt(a)) return Certified::False;
  return Certified::Unknown;
}

}  // namespace codeg
