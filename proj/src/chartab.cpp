#include "codeg/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace codeg {

ParseError::ParseError(int l, std::string const& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}

Nat CharacterTable::codegree(CharacterRecord const& r) const {
  return groupOrder.value() / r.kernelOrder / r.degree;
}

namespace {

  Nat decimal(std::string const& s, int line) {
    static std::regex const re("[1-9][0-9]*");
    if (!std::regex_match(s, re)) throw ParseError(line, "expected a positive decimal, got '" + s + "'");
    return Nat(s);
  }

  std::vector<std::string> fields(std::string const& line, int lineno) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
      size_t sp = line.find(' ', start);
      std::string f = line.substr(start, sp == std::string::npos ? std::string::npos : sp - start);
      if (f.empty()) throw ParseError(lineno, "fields must be separated by single spaces");
      out.push_back(f);
      if (sp == std::string::npos) break;
      start = sp + 1;
    }
    return out;
  }

  bool is_prime_power_divisor(Nat const& c, Factored const& n) {
    unsigned k = 0;
    for (auto const& p : n.primes())
      if (c % p == 0) ++k;
    return k == 1;
  }

}  // namespace

void validate(CharacterTable const& t) {
  Nat const& n = t.groupOrder.value();
  if (t.records.empty()) throw TableInvariantError("no characters");
  size_t trivial = 0;
  Nat squares = 0;
  for (auto const& r : t.records) {
    if (n % r.kernelOrder != 0) throw TableInvariantError("kernel order does not divide group order");
    Nat idx = n / r.kernelOrder;
    if (idx % r.degree != 0) throw TableInvariantError("non-integral codegree");
    if (r.degree == 1 && r.kernelOrder == n) ++trivial;
    squares += r.degree * r.degree;
  }
  if (trivial != 1) throw TableInvariantError("expected exactly one trivial character");
  if (squares != n) throw TableInvariantError("sum-of-squares mismatch");
}

CharacterTable parse_table(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_table_string(text);
}

CharacterTable parse_table_string(std::string const& text) {
  if (text.empty()) throw ParseError(1, "empty input");
  if (text.back() != '\n') {
    int n = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    throw ParseError(n, "missing trailing newline");
  }
  CharacterTable t;
  bool have_group = false, have_order = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) throw ParseError(lineno, "empty line");
    if (line.back() == '\r') throw ParseError(lineno, "carriage return");
    auto f = fields(line, lineno);
    if (f[0] == "group") {
      if (have_group) throw ParseError(lineno, "second group line");
      if (f.size() != 2) throw ParseError(lineno, "expected: group <name>");
      t.name = f[1];
      have_group = true;
    } else if (f[0] == "order") {
      if (!have_group) throw ParseError(lineno, "order before group");
      if (have_order) throw ParseError(lineno, "second order line");
      if (f.size() != 2) throw ParseError(lineno, "expected: order <n>");
      t.groupOrder = Factored(decimal(f[1], lineno));
      have_order = true;
    } else if (f[0] == "char") {
      if (!have_order) throw ParseError(lineno, "char before order");
      if (f.size() != 3) throw ParseError(lineno, "expected: char <degree> <kernelOrder>");
      t.records.push_back({decimal(f[1], lineno), decimal(f[2], lineno)});
    } else {
      throw ParseError(lineno, "unknown keyword '" + f[0] + "'");
    }
  }
  if (!have_group || !have_order) throw ParseError(lineno, "missing group or order line");
  if (t.records.empty()) throw ParseError(lineno, "no char lines");
  validate(t);
  return t;
}

CharacterTable load_table(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_table(in);
}

std::string format_table(CharacterTable const& t) {
  std::ostringstream os;
  os << "group " << t.name << "\norder " << t.groupOrder.value().get_str() << "\n";
  for (auto const& r : t.records) os << "char " << r.degree.get_str() << " " << r.kernelOrder.get_str() << "\n";
  return os.str();
}

unsigned long CodegreeProfile::multiplicity(Nat const& c) const {
  for (auto const& [v, m] : entries)
    if (v == c) return m;
  return 0;
}

std::string CodegreeProfile::str() const {
  std::string s = "{";
  for (size_t i = 0; i < entries.size(); ++i)
    s += (i ? "," : "") + std::string("(") + entries[i].first.get_str() + "," +
         std::to_string(entries[i].second) + ")";
  return s + "}";
}

CodegreeProfile codegree_profile(CharacterTable const& t) {
  std::map<Nat, unsigned long> m;
  for (auto const& r : t.records) ++m[t.codegree(r)];
  CodegreeProfile p;
  p.entries.assign(m.begin(), m.end());
  return p;
}

bool has_prime_codegree(CharacterTable const& t) {
  for (auto const& r : t.records)
    if (is_prime(t.codegree(r))) return true;
  return false;
}

bool is_perfect_by_codegrees(CharacterTable const& t) { return !has_prime_codegree(t); }

bool has_prime_power_codegree(CharacterTable const& t) {
  for (auto const& r : t.records) {
    Nat c = t.codegree(r);
    if (c > 1 && is_prime_power_divisor(c, t.groupOrder)) return true;
  }
  return false;
}

Nat first_missing_codegree(CodegreeProfile const& s, CodegreeProfile const& h, bool countMultiplicity) {
  for (auto const& [c, m] : s.entries) {
    auto mh = h.multiplicity(c);
    if (mh == 0 || (countMultiplicity && mh < m)) return c;
  }
  return 0;
}

bool cod_subset(CodegreeProfile const& s, CodegreeProfile const& h, bool countMultiplicity) {
  return first_missing_codegree(s, h, countMultiplicity) == 0;
}

bool kernels_trivial(CharacterTable const& t) {
  for (auto const& r : t.records)
    if (r.kernelOrder != 1 && !(r.degree == 1 && r.kernelOrder == t.groupOrder.value())) return false;
  return true;
}

DivisibilityCertificate divisibility_certificate(CharacterTable const& s, CharacterTable const& g) {
  if (!kernels_trivial(s)) throw std::invalid_argument(s.name + " is not a simple-group table");
  DivisibilityCertificate c;
  auto ps = codegree_profile(s), pg = codegree_profile(g);
  c.missing = first_missing_codegree(ps, pg, false);
  c.hypothesis = c.missing == 0;
  Nat const& n = s.groupOrder.value();
  c.identity_lhs = 0;
  for (auto const& [cd, m] : ps.entries) {
    if (cd == 1) continue;
    Nat d = n / cd;
    c.identity_lhs += Rat(Nat(m) * d * d, n * n);
  }
  c.identity_lhs.canonicalize();
  c.identity_rhs = Rat(n - 1, n * n);
  c.identity_rhs.canonicalize();
  if (c.hypothesis) {
    for (auto const& [cd, m] : ps.entries) {
      (void) m;
      auto& w = c.witnesses[cd];
      for (size_t i = 0; i < g.records.size(); ++i)
        if (g.codegree(g.records[i]) == cd) w.push_back(i);
    }
  }
  c.divides = s.groupOrder.divides(g.groupOrder);
  return c;
}

Nat smallest_nontrivial_codegree(CharacterTable const& t) {
  Nat best = 0;
  for (auto const& r : t.records) {
    Nat c = t.codegree(r);
    if (c > 1 && (best == 0 || c < best)) best = c;
  }
  if (best == 0) throw std::invalid_argument("table has no nontrivial character");
  return best;
}

Nat max_degree(CharacterTable const& t) {
  Nat b = 0;
  for (auto const& r : t.records) b = std::max(b, r.degree);
  return b;
}

CharacterTable direct_product(CharacterTable const& a, CharacterTable const& b) {
  auto simple = [](CharacterTable const& t) { return kernels_trivial(t) && max_degree(t) > 1; };
  if (!simple(a) && !simple(b)) throw std::invalid_argument("direct_product needs a nonabelian simple factor");
  CharacterTable t;
  t.name = a.name + "x" + b.name;
  t.groupOrder = a.groupOrder * b.groupOrder;
  for (auto const& x : a.records)
    for (auto const& y : b.records) t.records.push_back({x.degree * y.degree, x.kernelOrder * y.kernelOrder});
  validate(t);
  return t;
}

}  // namespace codeg
