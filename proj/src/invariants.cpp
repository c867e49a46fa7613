#include "codeg/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace codeg {

Nat CyclotomicFactorization::q_form_value() const {
  Nat q = ipow(Nat(p), t);
  Nat v = ipow(q, k);
  for (auto [i, e] : qFactors) v *= ipow(cyclotomic_eval(i, q), e);
  return v / d;
}

Nat CyclotomicFactorization::p_form_value() const {
  Nat v = ipow(Nat(p), k * t);
  for (auto [j, f] : pFactors) v *= ipow(cyclotomic_eval(j, Nat(p)), f);
  return v / d;
}

std::string CyclotomicFactorization::str() const {
  std::ostringstream os;
  auto list = [&](char var, std::vector<std::pair<unsigned, unsigned>> const& fs) {
    for (auto [i, e] : fs) {
      os << "*Phi" << i << "(" << var << ")";
      if (e > 1) os << "^" << e;
    }
  };
  os << "(1/" << d << ")*q^" << k;
  list('q', qFactors);
  os << " = (1/" << d << ")*p^" << k * t;
  list('p', pFactors);
  return os.str();
}

CyclotomicFactorization cyclotomic_factorization(OrderFormula const& f) {
  auto [p, t] = prime_power(f.q);
  CyclotomicFactorization c;
  c.d = f.d;
  c.k = f.k;
  c.p = p;
  c.t = t;
  std::map<unsigned, unsigned> pf;
  for (auto [i, e] : q_cyclotomic_exponents(f)) {
    c.qFactors.emplace_back(i, e);
    for (auto j : cyclotomic_refinement(i, t)) pf[j] += e;
  }
  c.pFactors.assign(pf.begin(), pf.end());
  Nat n = evaluate(f);
  if (c.q_form_value() != n || c.p_form_value() != n)
    throw std::logic_error("cyclotomic factorization does not reproduce the order");
  return c;
}

CyclotomicFactorization cyclotomic_factorization(Group const& g) {
  if (!g.is_lie()) throw std::invalid_argument(name(g) + " is not of Lie type");
  return cyclotomic_factorization(order_formula(g.family, g.rank, g.q()));
}

ArtinInvariants artin_from_order(Factored const& n, Nat const& p, bool multiset) {
  std::vector<Nat> orders;
  for (auto const& r : n.p_prime_part(p).primes()) orders.push_back(mult_order(p, r));
  if (orders.empty()) throw std::invalid_argument("order has no prime divisor other than p");
  std::sort(orders.rbegin(), orders.rend());
  std::set<Nat> distinct(orders.begin(), orders.end());
  if (!multiset) orders.assign(distinct.rbegin(), distinct.rend());
  ArtinInvariants a;
  a.omega = orders[0];
  a.psi = orders.size() > 1 ? orders[1] : orders[0];
  a.degenerate = distinct.size() == 1;
  return a;
}

ArtinInvariants artin_invariants(Group const& g, bool multiset) {
  if (!g.is_lie()) throw std::invalid_argument(name(g) + " is not of Lie type");
  return artin_from_order(order(g), Nat(g.p), multiset);
}

namespace {

  std::optional<ArtinInvariants> pair(unsigned long w, unsigned long s) {
    ArtinInvariants a;
    a.omega = w;
    a.psi = s;
    return a;
  }

  bool mersenne_field(Group const& g) { return g.t == 1 && is_mersenne_prime(g.p); }

}  // namespace

std::optional<ArtinInvariants> table1_prediction(Group const& g) {
  if (!g.is_lie()) throw std::invalid_argument(name(g) + " is not of Lie type");
  unsigned long n = g.rank, t = g.t;
  auto q = g.q();
  auto is = [&](unsigned long nn, std::uint64_t qq) { return n == nn && q == qq; };
  switch (g.family) {
    case Family::PSL:
      if (is(2, 64) || is(3, 4) || is(3, 8) || is(4, 4) || is(6, 2) || is(7, 2)) return std::nullopt;
      if (n == 2 && g.t == 2 && is_mersenne_prime(g.p)) return std::nullopt;
      if (n == 3 && mersenne_field(g)) return std::nullopt;
      return pair(n * t, (n - 1) * t);
    case Family::PSU:
      if (n == 4) return pair(6 * t, 4 * t);
      if (n % 2 == 1) {
        if (is(3, 8) || is(5, 2) || (n == 3 && mersenne_field(g))) return std::nullopt;
        return pair(2 * n * t, 2 * (n - 2) * t);
      }
      if (is(6, 2)) return std::nullopt;
      // even dimension n: the primitive orders come from q^(n-1)+1 and q^(n-3)+1
      return pair(2 * (n - 1) * t, 2 * (n - 3) * t);
    case Family::OmegaOdd:
    case Family::PSp:
      if (g.family == Family::PSp && n >= 3) return pair(2 * n * t, 2 * (n - 1) * t);
      if (is(2, 256) || is(3, 2) || is(4, 2) || (n == 2 && mersenne_field(g))) return std::nullopt;
      return pair(2 * n * t, 2 * (n - 1) * t);
    case Family::POmegaPlus:
      if (is(4, 2) || is(5, 2)) return std::nullopt;
      return pair(2 * (n - 1) * t, 2 * (n - 2) * t);
    case Family::POmegaMinus:
      if (is(4, 2)) return std::nullopt;
      return pair(2 * n * t, 2 * (n - 1) * t);
    case Family::Suzuki: return t % 6 == 3 ? pair(4 * t, 4 * t / 3) : pair(4 * t, t);
    case Family::G2:
      if (q == 4) return std::nullopt;
      return pair(6 * t, 3 * t);
    case Family::Ree2G2: return pair(6 * t, 2 * t);
    case Family::ThreeD4:
      if (q == 2) return std::nullopt;
      return pair(12 * t, 6 * t);
    case Family::F4: return pair(12 * t, 8 * t);
    case Family::Ree2F4: return pair(12 * t, 6 * t);
    case Family::E6: return pair(12 * t, 9 * t);
    case Family::TwistedE6: return pair(18 * t, 12 * t);
    case Family::E7: return pair(18 * t, 14 * t);
    case Family::E8: return pair(30 * t, 24 * t);
    default: throw std::logic_error("table1_prediction: unhandled family");
  }
}

std::string table1_row(Group const& g) {
  switch (g.family) {
    case Family::PSL: return "PSL_n";
    case Family::PSU:
      return g.rank == 4 ? "PSU_4" : g.rank % 2 ? "PSU_n odd" : "PSU_n even";
    case Family::OmegaOdd: return "Omega_2n+1";
    case Family::PSp: return g.rank == 2 ? "Omega_5 (PSp_4)" : "PSp_2n";
    case Family::POmegaPlus: return "POmega+_2n";
    case Family::POmegaMinus: return "POmega-_2n";
    case Family::Suzuki: return g.t % 6 == 3 ? "2B2, t=3 mod 6" : "2B2, t=+-1 mod 6";
    default: return family_token(g.family);
  }
}

std::vector<ArtinException> const& artin_exception_list() {
  static std::vector<ArtinException> const list = {
      {"PSL2(7)", 1, 1, 2, 1, "7^2-1 = 2^4*3 has no primitive prime divisor (7 Mersenne)"},
      {"PSL2(8)", 3, 2, 6, 3, "2^6-1 = 3^2*7 has no primitive prime divisor"},
      {"PSU4(2)", 4, 2, 6, 4, "2^6-1 has no primitive prime divisor"},
      {"PSp4(8)", 12, 4, 12, 6, "8^2-1 = 2^6-1 has no primitive prime divisor"},
      {"PSp6(2)", 4, 3, 6, 4, "2^6-1 has no primitive prime divisor"},
      {"PSp8(2)", 8, 4, 8, 6, "2^6-1 has no primitive prime divisor"},
  };
  return list;
}

bool is_listed_exception(Group const& g) {
  auto nm = name(g);
  for (auto const& e : artin_exception_list())
    if (e.group == nm) return true;
  return false;
}

}  // namespace codeg
