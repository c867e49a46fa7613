#include "codeg/catalog.hpp"

#include "codeg/checksum.hpp"
#include "codeg/cyclotomic.hpp"
#include "sporadic_data.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace codeg {

namespace {

  bool lie_family(Family f) {
    switch (f) {
      case Family::Alternating:
      case Family::Tits:
      case Family::Sporadic:
      case Family::CyclicPrime: return false;
      default: return true;
    }
  }

  unsigned min_rank(Family f) {
    switch (f) {
      case Family::PSL: return 2;
      case Family::PSU: return 3;
      case Family::PSp: return 2;
      case Family::OmegaOdd: return 2;
      case Family::POmegaPlus:
      case Family::POmegaMinus: return 4;
      default: return fixed_rank(f);
    }
  }

  std::vector<Family> const lie_families = {
      Family::PSL,     Family::PSU,    Family::PSp,     Family::OmegaOdd,  Family::POmegaPlus,
      Family::POmegaMinus, Family::Suzuki, Family::Ree2G2, Family::Ree2F4, Family::G2,
      Family::F4,      Family::E6,     Family::TwistedE6, Family::E7,      Family::E8,
      Family::ThreeD4};

  std::string const& sporadic_canonical_name(std::string const& s) {
    static std::map<std::string, std::string> const alias = {
        {"Fi24", "Fi24'"}, {"F3+", "Fi24'"}, {"O'N", "ON"}, {"Monster", "M"},
        {"Baby", "B"},     {"F2", "B"},      {"F1", "M"}};
    auto it = alias.find(s);
    return it == alias.end() ? s : it->second;
  }

  Nat term_value(std::uint64_t q, OrderTerm const& t) {
    Nat v = ipow(Nat(q), t.i);
    return t.plus ? Nat(v + 1) : Nat(v - 1);
  }

  std::uint64_t q_pow_mod(std::uint64_t q, unsigned e, std::uint64_t m) {
    std::uint64_t r = 1 % m, b = q % m;
    for (unsigned i = 0; i < e; ++i) r = r * b % m;
    return r;
  }

  std::uint64_t max_denominator(Family f, unsigned n) {
    switch (f) {
      case Family::PSL:
      case Family::PSU: return n;
      case Family::PSp:
      case Family::OmegaOdd:
      case Family::E7: return 2;
      case Family::POmegaPlus:
      case Family::POmegaMinus: return 4;
      case Family::E6:
      case Family::TwistedE6: return 3;
      default: return 1;
    }
  }

  // valid raw descriptors with order <= bound (rank loop: monotone at q = 2)
  std::vector<Group> raw_lie_upto(Nat const& max_order, bool skip_omega_duplicates) {
    Nat qcap = 2;
    while (qcap * (qcap * qcap - 1) / 2 <= max_order) qcap *= 2;
    if (qcap > Nat(1) << 27) throw std::invalid_argument("enumeration bound too large");
    auto qs = prime_powers_up_to(qcap.get_ui());
    std::vector<Group> out;
    for (Family f : lie_families) {
      for (unsigned n = min_rank(f);; ++n) {
        if (evaluate(order_formula(f, n, 2)) > max_order) break;
        for (auto q : qs) {
          // |S| * d grows with q but |S| alone need not (PSL2(512) > PSL2(521))
          OrderFormula of = order_formula(f, n, q);
          Nat v = evaluate(of);
          if (v * of.d > max_order * max_denominator(f, n)) break;
          if (v > max_order) continue;
          Group g;
          g.family = f;
          g.rank = n;
          std::tie(g.p, g.t) = prime_power(q);
          if (!is_valid(g)) continue;
          if (skip_omega_duplicates && f == Family::OmegaOdd && (n == 2 || g.p == 2)) continue;
          out.push_back(g);
        }
        if (fixed_rank(f)) break;
      }
    }
    return out;
  }

}  // namespace

std::uint64_t Group::q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < t; ++i) r *= p;
  return r;
}

bool Group::is_lie() const { return lie_family(family); }

unsigned fixed_rank(Family f) {
  switch (f) {
    case Family::Suzuki:
    case Family::Ree2G2:
    case Family::G2: return 2;
    case Family::Ree2F4:
    case Family::F4:
    case Family::ThreeD4: return 4;
    case Family::E6:
    case Family::TwistedE6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
  }
}

bool is_valid(Group const& g) {
  switch (g.family) {
    case Family::Alternating: return g.rank >= 5 && g.p == 0 && g.t == 0;
    case Family::Tits: return g.rank == 0 && g.p == 0 && g.t == 0;
    case Family::Sporadic:
      for (auto const& d : sporadic_data())
        if (d.name == g.sporadic) return true;
      return false;
    case Family::CyclicPrime: return g.t == 1 && is_prime(Nat(g.p));
    default: break;
  }
  if (g.t < 1 || !is_prime(Nat(g.p))) return false;
  unsigned n = g.rank;
  std::uint64_t q = g.q();
  switch (g.family) {
    case Family::PSL: return n >= 2 && !(n == 2 && q <= 3);
    case Family::PSU: return n >= 3 && !(n == 3 && q == 2);
    case Family::PSp:
    case Family::OmegaOdd: return n >= 2 && !(n == 2 && q == 2);
    case Family::POmegaPlus:
    case Family::POmegaMinus: return n >= 4;
    case Family::Suzuki: return n == 2 && g.p == 2 && g.t % 2 == 1 && g.t >= 3;
    case Family::Ree2F4: return n == 4 && g.p == 2 && g.t % 2 == 1 && g.t >= 3;
    case Family::Ree2G2: return n == 2 && g.p == 3 && g.t % 2 == 1 && g.t >= 3;
    case Family::G2: return n == 2 && q > 2;
    default: return n == fixed_rank(g.family);
  }
}

Group alternating(unsigned m) {
  Group g;
  g.family = Family::Alternating;
  g.rank = m;
  if (!is_valid(g)) throw std::invalid_argument("alternating group needs m >= 5");
  return g;
}

Group lie(Family f, unsigned rank, std::uint64_t q) {
  if (!lie_family(f)) throw std::invalid_argument("not a Lie-type family");
  Group g;
  g.family = f;
  g.rank = rank == 0 ? fixed_rank(f) : rank;
  std::tie(g.p, g.t) = prime_power(q);
  if (!is_valid(g))
    throw std::invalid_argument("invalid parameters for " + family_token(f) + ": rank " +
                                std::to_string(rank) + ", q " + std::to_string(q));
  return g;
}

Group sporadic(std::string const& nm) {
  Group g;
  g.family = Family::Sporadic;
  g.sporadic = sporadic_canonical_name(nm);
  if (!is_valid(g)) throw std::invalid_argument("unknown sporadic group " + nm);
  return g;
}

Group tits() {
  Group g;
  g.family = Family::Tits;
  return g;
}

Group cyclic(std::uint64_t p) {
  Group g;
  g.family = Family::CyclicPrime;
  g.p = p;
  g.t = 1;
  if (!is_valid(g)) throw std::invalid_argument("cyclic simple group needs prime order");
  return g;
}

std::string family_token(Family f) {
  switch (f) {
    case Family::Alternating: return "A";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::OmegaOdd: return "O";
    case Family::POmegaPlus: return "O+";
    case Family::POmegaMinus: return "O-";
    case Family::Suzuki: return "2B2";
    case Family::Ree2G2: return "2G2";
    case Family::Ree2F4: return "2F4";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::TwistedE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::ThreeD4: return "3D4";
    case Family::Tits: return "Tits";
    case Family::Sporadic: return "SPOR";
    case Family::CyclicPrime: return "C";
  }
  return "?";
}

std::string name(Group const& g) {
  auto qs = "(" + std::to_string(g.q()) + ")";
  auto n = std::to_string(g.rank);
  switch (g.family) {
    case Family::Alternating: return "A" + n;
    case Family::PSL: return "PSL" + n + qs;
    case Family::PSU: return "PSU" + n + qs;
    case Family::PSp: return "PSp" + std::to_string(2 * g.rank) + qs;
    case Family::OmegaOdd: return "O" + std::to_string(2 * g.rank + 1) + qs;
    case Family::POmegaPlus: return "O" + std::to_string(2 * g.rank) + "+" + qs;
    case Family::POmegaMinus: return "O" + std::to_string(2 * g.rank) + "-" + qs;
    case Family::Tits: return "2F4(2)'";
    case Family::Sporadic: return g.sporadic;
    case Family::CyclicPrime: return "C" + std::to_string(g.p);
    default: return family_token(g.family) + qs;
  }
}

std::vector<std::string> aliases(Group const& g) {
  std::vector<std::string> out{name(g)};
  auto add = [&](std::string s) { out.push_back(std::move(s)); };
  Group c = canonicalize(g);
  if (c.family == Family::Alternating && c.rank == 5) {
    add("PSL2(4)");
    add("PSL2(5)");
  } else if (c.family == Family::Alternating && c.rank == 6) {
    add("PSL2(9)");
  } else if (c.family == Family::Alternating && c.rank == 8) {
    add("PSL4(2)");
  } else if (c.family == Family::PSL && c.rank == 2 && c.q() == 7) {
    add("PSL3(2)");
  } else if (c.family == Family::PSL && c.rank == 2 && c.q() == 8) {
    add("2G2(3)'");
  } else if (c.family == Family::PSp && c.rank == 2 && c.q() == 3) {
    add("PSU4(2)");
  } else if (c.family == Family::PSU && c.rank == 3 && c.q() == 3) {
    // unitary group of degree 3 written over its field of definition F_9
    add("G2(2)'");
    add("PSU3(9) [field-of-definition notation]");
  } else if (c.family == Family::Tits) {
    add("Tits");
  }
  std::sort(out.begin() + 1, out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Group parse_group_name(std::string const& s) {
  std::smatch m;
  auto num = [&](int i) { return std::stoull(m[i].str()); };
  if (s == "G2(2)'") return lie(Family::PSU, 3, 3);
  if (s == "2G2(3)'" || s == "R(3)'") return lie(Family::PSL, 2, 8);
  if (s == "2F4(2)'" || s == "Tits" || s == "T") return tits();
  if (std::regex_match(s, m, std::regex(R"(A(\d+))"))) return alternating(num(1));
  if (std::regex_match(s, m, std::regex(R"(C(\d+))"))) return cyclic(num(1));
  if (std::regex_match(s, m, std::regex(R"((?:PSL|L)(\d+)\((\d+)\))"))) return lie(Family::PSL, num(1), num(2));
  if (std::regex_match(s, m, std::regex(R"((?:PSU|U)(\d+)\((\d+)\))"))) return lie(Family::PSU, num(1), num(2));
  if (std::regex_match(s, m, std::regex(R"((?:PSp|S)(\d+)\((\d+)\))"))) {
    if (num(1) % 2) throw std::invalid_argument("symplectic dimension must be even: " + s);
    return lie(Family::PSp, num(1) / 2, num(2));
  }
  if (std::regex_match(s, m, std::regex(R"(O(\d+)\((\d+)\))"))) {
    if (num(1) % 2 == 0) throw std::invalid_argument("write O<2n>+(q) or O<2n>-(q): " + s);
    return lie(Family::OmegaOdd, num(1) / 2, num(2));
  }
  if (std::regex_match(s, m, std::regex(R"(O(\d+)([+-])\((\d+)\))"))) {
    if (num(1) % 2) throw std::invalid_argument("orthogonal dimension must be even: " + s);
    return lie(m[2] == "+" ? Family::POmegaPlus : Family::POmegaMinus, num(1) / 2, num(3));
  }
  static std::vector<std::pair<std::string, Family>> const ex = {
      {"2B2", Family::Suzuki}, {"Sz", Family::Suzuki}, {"2G2", Family::Ree2G2}, {"R", Family::Ree2G2},
      {"2F4", Family::Ree2F4}, {"G2", Family::G2},     {"F4", Family::F4},      {"E6", Family::E6},
      {"2E6", Family::TwistedE6}, {"E7", Family::E7},  {"E8", Family::E8},      {"3D4", Family::ThreeD4}};
  for (auto const& [tok, f] : ex) {
    std::string rest = s.substr(std::min(s.size(), tok.size()));
    if (s.rfind(tok + "(", 0) == 0 && std::regex_match(rest, m, std::regex(R"(\((\d+)\))")))
      return lie(f, 0, num(1));
  }
  return sporadic(s);
}

Group parse_group(std::vector<std::string> const& tok) {
  if (tok.empty()) throw std::invalid_argument("missing group");
  if (tok.size() == 1) return parse_group_name(tok[0]);
  auto u = [&](size_t i) {
    size_t pos = 0;
    auto v = std::stoull(tok.at(i), &pos);
    if (pos != tok[i].size()) throw std::invalid_argument("expected a number: " + tok[i]);
    return v;
  };
  std::string const& f = tok[0];
  if (tok.size() == 2) {
    if (f == "A") return alternating(u(1));
    if (f == "SPOR") return sporadic(tok[1]);
    if (f == "C") return cyclic(u(1));
    throw std::invalid_argument("expected <FAMILY> <rank> <q>");
  }
  if (tok.size() != 3) throw std::invalid_argument("expected <FAMILY> <rank> <q>");
  static std::map<std::string, Family> const fam = {
      {"PSL", Family::PSL},        {"L", Family::PSL},         {"PSU", Family::PSU},
      {"U", Family::PSU},          {"PSp", Family::PSp},       {"S", Family::PSp},
      {"O", Family::OmegaOdd},     {"Omega", Family::OmegaOdd}, {"O+", Family::POmegaPlus},
      {"O-", Family::POmegaMinus}, {"2B2", Family::Suzuki},    {"Sz", Family::Suzuki},
      {"2G2", Family::Ree2G2},     {"R", Family::Ree2G2},      {"2F4", Family::Ree2F4},
      {"G2", Family::G2},          {"F4", Family::F4},         {"E6", Family::E6},
      {"2E6", Family::TwistedE6},  {"E7", Family::E7},         {"E8", Family::E8},
      {"3D4", Family::ThreeD4}};
  auto it = fam.find(f);
  if (it == fam.end()) throw std::invalid_argument("unknown family " + f);
  auto rank = static_cast<unsigned>(u(1));
  if (fixed_rank(it->second) && rank != fixed_rank(it->second))
    throw std::invalid_argument(f + " has rank " + std::to_string(fixed_rank(it->second)));
  return lie(it->second, rank, u(2));
}

Group canonicalize(Group const& g) {
  if (g.family == Family::PSL) {
    auto q = g.q();
    if (g.rank == 2 && (q == 4 || q == 5)) return alternating(5);
    if (g.rank == 2 && q == 9) return alternating(6);
    if (g.rank == 4 && q == 2) return alternating(8);
    if (g.rank == 3 && q == 2) return lie(Family::PSL, 2, 7);
  }
  if (g.family == Family::PSU && g.rank == 4 && g.q() == 2) return lie(Family::PSp, 2, 3);
  if (g.family == Family::OmegaOdd && (g.rank == 2 || g.p == 2)) {
    Group c = g;
    c.family = Family::PSp;
    return c;
  }
  return g;
}

bool is_canonical(Group const& g) { return canonicalize(g) == g; }

OrderFormula order_formula(Family f, unsigned n, std::uint64_t q) {
  OrderFormula r;
  r.q = q;
  auto minus = [&](unsigned i) { r.num.push_back({i, false}); };
  auto plus = [&](unsigned i) { r.num.push_back({i, true}); };
  switch (f) {
    case Family::PSL:
      r.k = n * (n - 1) / 2;
      for (unsigned i = 2; i <= n; ++i) minus(i);
      r.d = std::gcd<std::uint64_t>(n, q - 1);
      break;
    case Family::PSU:
      r.k = n * (n - 1) / 2;
      for (unsigned i = 2; i <= n; ++i) r.num.push_back({i, i % 2 == 1});
      r.d = std::gcd<std::uint64_t>(n, q + 1);
      break;
    case Family::PSp:
    case Family::OmegaOdd:
      r.k = n * n;
      for (unsigned i = 1; i <= n; ++i) minus(2 * i);
      r.d = std::gcd<std::uint64_t>(2, q - 1);
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      bool pl = f == Family::POmegaMinus;
      r.k = n * (n - 1);
      r.num.push_back({n, pl});
      for (unsigned i = 1; i < n; ++i) minus(2 * i);
      std::uint64_t qn = q_pow_mod(q, n, 4);
      r.d = std::gcd<std::uint64_t>(4, (pl ? qn + 1 : qn + 3) % 4);
      break;
    }
    case Family::Suzuki:
      r.k = 2;
      plus(2), minus(1);
      break;
    case Family::Ree2G2:
      r.k = 3;
      plus(3), minus(1);
      break;
    case Family::Ree2F4:
      r.k = 12;
      plus(6), minus(4), plus(3), minus(1);
      break;
    case Family::G2:
      r.k = 6;
      minus(6), minus(2);
      break;
    case Family::ThreeD4:
      // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
      r.k = 12;
      minus(12), minus(6), minus(2);
      r.den.push_back({4, false});
      break;
    case Family::F4:
      r.k = 24;
      for (unsigned i : {12, 8, 6, 2}) minus(i);
      break;
    case Family::E6:
      r.k = 36;
      for (unsigned i : {12, 9, 8, 6, 5, 2}) minus(i);
      r.d = std::gcd<std::uint64_t>(3, q - 1);
      break;
    case Family::TwistedE6:
      r.k = 36;
      minus(12), plus(9), minus(8), minus(6), plus(5), minus(2);
      r.d = std::gcd<std::uint64_t>(3, q + 1);
      break;
    case Family::E7:
      r.k = 63;
      for (unsigned i : {18, 14, 12, 10, 8, 6, 2}) minus(i);
      r.d = std::gcd<std::uint64_t>(2, q - 1);
      break;
    case Family::E8:
      r.k = 120;
      for (unsigned i : {30, 24, 20, 18, 14, 12, 8, 2}) minus(i);
      break;
    default: throw std::invalid_argument("order_formula: not a Lie-type family");
  }
  return r;
}

Nat evaluate(OrderFormula const& f) {
  Nat v = ipow(Nat(f.q), f.k), den = f.d;
  for (auto const& t : f.num) v *= term_value(f.q, t);
  for (auto const& t : f.den) den *= term_value(f.q, t);
  if (v % den != 0) throw std::logic_error("order formula not integral");
  return v / den;
}

std::map<unsigned, unsigned> q_cyclotomic_exponents(OrderFormula const& f) {
  std::map<unsigned, long> e;
  for (auto const& t : f.num)
    for (auto i : binomial_indices(t.i, t.plus)) ++e[i];
  for (auto const& t : f.den)
    for (auto i : binomial_indices(t.i, t.plus)) --e[i];
  std::map<unsigned, unsigned> out;
  for (auto [i, k] : e) {
    if (k < 0) throw std::logic_error("negative cyclotomic exponent");
    if (k > 0) out[i] = static_cast<unsigned>(k);
  }
  return out;
}

Nat order_value(Group const& g) {
  switch (g.family) {
    case Family::Alternating: return factorial(g.rank) / 2;
    case Family::Tits: return tits_order;
    case Family::Sporadic: return sporadic_datum(g.sporadic).order;
    case Family::CyclicPrime: return Nat(g.p);
    default: return evaluate(order_formula(g.family, g.rank, g.q()));
  }
}

Factored order(Group const& g) {
  if (!is_valid(g)) throw std::invalid_argument("order: invalid descriptor");
  if (!g.is_lie()) {
    if (g.family == Family::Alternating) {
      std::map<Nat, unsigned> f;
      for (auto p : primes_up_to(g.rank)) {
        unsigned e = 0;
        for (std::uint64_t pk = p; pk <= g.rank; pk *= p) e += g.rank / pk;
        f[Nat(p)] = e;
      }
      f[Nat(2)] -= 1;
      return Factored::from_map(f);
    }
    return Factored(order_value(g));
  }
  auto formula = order_formula(g.family, g.rank, g.q());
  Factored r = Factored::prime_power(Nat(g.p), static_cast<unsigned>(formula.k * g.t));
  for (auto [i, e] : q_cyclotomic_exponents(formula))
    for (auto j : cyclotomic_refinement(i, g.t)) r *= cyclotomic_factored(j, g.p).pow(e);
  r /= Factored(Nat(formula.d));
  if (r.value() != evaluate(formula)) throw std::logic_error("order: cyclotomic product mismatch");
  return r;
}

std::uint64_t characteristic(Group const& g) {
  if (g.family == Family::Tits) return 2;
  if (!g.is_lie()) throw std::invalid_argument(name(g) + " is not of Lie type");
  return g.p;
}

std::vector<SporadicDatum> parse_sporadic_table(std::string const& text) {
  std::vector<SporadicDatum> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) f.push_back(cell);
    auto fail = [&](std::string const& why) {
      throw std::runtime_error("sporadic table line " + std::to_string(lineno) + ": " + why);
    };
    if (f.size() != 5) fail("expected 5 tab-separated fields");
    if (f[3] != "0" && f[3] != "1") fail("defect-zero flag must be 0 or 1");
    SporadicDatum d{f[0], Nat(f[1]), std::stoull(f[2]), f[3] == "1", Nat(f[4])};
    std::uint64_t p = 2;
    while (d.order % p == 0) {
      do ++p;
      while (!is_prime(Nat(p)));
    }
    if (p != d.smallest_prime_not_dividing) fail("smallest prime not dividing is " + std::to_string(p));
    if (d.order % d.largest_degree != 0) fail("largest degree does not divide the order");
    if (d.largest_degree * d.largest_degree >= d.order) fail("largest degree too large");
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<SporadicDatum> const& sporadic_data() {
  static std::vector<SporadicDatum> const data = [] {
    std::string text = detail::sporadic_tsv;
    if (sha256_hex(text) != detail::sporadic_sha256)
      throw std::runtime_error("sporadic table checksum mismatch");
    auto d = parse_sporadic_table(text);
    if (d.size() != 26) throw std::runtime_error("sporadic table must list 26 groups");
    return d;
  }();
  return data;
}

SporadicDatum const& sporadic_datum(std::string const& nm) {
  auto const& key = sporadic_canonical_name(nm);
  for (auto const& d : sporadic_data())
    if (d.name == key) return d;
  throw std::invalid_argument("unknown sporadic group " + nm);
}

std::vector<CatalogEntry> enumerate_simple_groups(Nat const& max_order) {
  std::set<Group> seen;
  for (auto const& g : raw_lie_upto(max_order, true)) seen.insert(canonicalize(g));
  for (unsigned m = 5; factorial(m) / 2 <= max_order; ++m) seen.insert(alternating(m));
  for (auto const& d : sporadic_data())
    if (d.order <= max_order) seen.insert(sporadic(d.name));
  if (tits_order <= max_order) seen.insert(tits());
  std::vector<CatalogEntry> out;
  for (auto const& g : seen) out.push_back({g, order(g)});
  std::sort(out.begin(), out.end(), [](CatalogEntry const& a, CatalogEntry const& b) {
    if (a.order.value() != b.order.value()) return a.order.value() < b.order.value();
    return a.group < b.group;
  });
  return out;
}

std::vector<Group> lie_descriptors_upto(Nat const& max_order) {
  auto v = raw_lie_upto(max_order, true);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Group> lie_sweep(std::uint64_t max_q, unsigned max_rank, std::optional<Nat> const& max_order) {
  std::vector<Group> out;
  auto qs = prime_powers_up_to(max_q);
  for (Family f : lie_families) {
    unsigned hi = fixed_rank(f) ? fixed_rank(f) : max_rank;
    if (hi > max_rank) continue;
    for (unsigned n = min_rank(f); n <= hi; ++n) {
      for (auto q : qs) {
        Group g;
        g.family = f;
        g.rank = n;
        std::tie(g.p, g.t) = prime_power(q);
        if (!is_valid(g)) continue;
        if (f == Family::OmegaOdd && (n == 2 || g.p == 2)) continue;
        if (max_order && order_value(g) > *max_order) continue;
        out.push_back(g);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace codeg
