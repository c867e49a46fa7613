#include "codeg/factored.hpp"

#include <stdexcept>

namespace codeg {

Factored::Factored(Nat const& n) : f_(factor(n)), value_(n) {}

Factored Factored::from_map(std::map<Nat, unsigned> const& f) {
  Factored r;
  for (auto const& [p, e] : f) {
    if (e == 0) continue;
    if (!is_prime(p)) throw std::invalid_argument("Factored: non-prime key " + p.get_str());
    r.f_[p] = e;
    r.value_ *= ipow(p, e);
  }
  return r;
}

Factored Factored::prime_power(Nat const& p, unsigned e) {
  return from_map({{p, e}});
}

std::vector<Nat> Factored::primes() const {
  std::vector<Nat> out;
  for (auto const& kv : f_) out.push_back(kv.first);
  return out;
}

unsigned Factored::exponent(Nat const& p) const {
  auto it = f_.find(p);
  return it == f_.end() ? 0 : it->second;
}

Factored Factored::p_part(Nat const& p) const {
  Factored r;
  if (auto e = exponent(p)) {
    r.f_[p] = e;
    r.value_ = ipow(p, e);
  }
  return r;
}

Factored Factored::p_prime_part(Nat const& p) const {
  Factored r = *this;
  if (auto e = exponent(p)) {
    r.f_.erase(p);
    r.value_ /= ipow(p, e);
  }
  return r;
}

Factored& Factored::operator*=(Factored const& o) {
  for (auto const& [p, e] : o.f_) f_[p] += e;
  value_ *= o.value_;
  return *this;
}

Factored& Factored::operator/=(Factored const& o) {
  if (!o.divides(*this)) throw std::domain_error("Factored: inexact division");
  for (auto const& [p, e] : o.f_) {
    auto it = f_.find(p);
    it->second -= e;
    if (it->second == 0) f_.erase(it);
  }
  value_ /= o.value_;
  return *this;
}

Factored Factored::pow(unsigned e) const {
  Factored r;
  if (e == 0) return r;
  for (auto const& [p, k] : f_) r.f_[p] = k * e;
  r.value_ = ipow(value_, e);
  return r;
}

bool Factored::divides(Factored const& o) const {
  for (auto const& [p, e] : f_)
    if (o.exponent(p) < e) return false;
  return true;
}

std::string Factored::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (auto const& [p, e] : f_) {
    if (!s.empty()) s += '*';
    s += p.get_str();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace codeg
