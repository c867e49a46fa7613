#pragma once

#include "codeg/factored.hpp"

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace codeg {

struct CharacterRecord {
  Nat degree;
  Nat kernelOrder;
};

struct CharacterTable {
  std::string name;
  Factored groupOrder;
  std::vector<CharacterRecord> records;

  Nat codegree(CharacterRecord const& r) const;
};

struct ParseError : std::runtime_error {
  ParseError(int line, std::string const& what);
  int line;
};

// raised for a well-formed file whose data violates a table invariant
struct TableInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CharacterTable parse_table(std::istream& in);
CharacterTable parse_table_string(std::string const& text);
CharacterTable load_table(std::string const& path);
std::string format_table(CharacterTable const& t);

// checks the three table invariants; throws TableInvariantError
void validate(CharacterTable const& t);

struct CodegreeProfile {
  std::vector<std::pair<Nat, unsigned long>> entries;  // increasing codegrees
  unsigned long multiplicity(Nat const& c) const;
  std::string str() const;
  friend bool operator==(CodegreeProfile const&, CodegreeProfile const&) = default;
};

CodegreeProfile codegree_profile(CharacterTable const& t);

bool is_perfect_by_codegrees(CharacterTable const& t);
bool has_prime_codegree(CharacterTable const& t);
bool has_prime_power_codegree(CharacterTable const& t);

bool cod_subset(CodegreeProfile const& s, CodegreeProfile const& h, bool countMultiplicity);
// first codegree of s missing from h (or short in multiplicity); 0 if none
Nat first_missing_codegree(CodegreeProfile const& s, CodegreeProfile const& h, bool countMultiplicity);

struct DivisibilityCertificate {
  bool hypothesis = false;  // cod(S) contained in cod(G)
  Nat missing = 0;          // first missing codegree when the hypothesis fails
  Rat identity_lhs;         // sum m_i d_i^2 / |S|^2 over nontrivial codegrees
  Rat identity_rhs;         // (|S| - 1)/|S|^2
  // codegree c = |S|/d of S -> indices of the characters of G with codegree c
  std::map<Nat, std::vector<size_t>> witnesses;
  bool divides = false;     // |S| divides |G|
  bool ok() const { return hypothesis && identity_lhs == identity_rhs && divides; }
};

// s must be the table of a simple group (trivial kernels off the principal character)
DivisibilityCertificate divisibility_certificate(CharacterTable const& s, CharacterTable const& g);

Nat smallest_nontrivial_codegree(CharacterTable const& t);
Nat max_degree(CharacterTable const& t);

// true when every nonprincipal character has trivial kernel
bool kernels_trivial(CharacterTable const& t);

// table of a direct product. Degrees multiply; kernel orders multiply
// too when one factor is a nonabelian simple table, which is required.
CharacterTable direct_product(CharacterTable const& a, CharacterTable const& b);

}  // namespace codeg
