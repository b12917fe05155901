#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cgt {

// Finite abelian group presented as a direct product of cyclic groups
// Z_{m0} x Z_{m1} x ... ; parity (the index-2 "even" subgroup) is defined
// by the last coordinate and requires the last modulus to be even.
struct GroupSpec {
  std::vector<int> moduli;

  GroupSpec() = default;
  explicit GroupSpec(std::vector<int> m);

  std::size_t rank() const { return moduli.size(); }
  int order() const;
  bool parity_defined() const { return !moduli.empty() && moduli.back() % 2 == 0; }

  std::string name() const;  // "Z3xZ12"

  // Accepts "Z3xZ12" (case-insensitive) or a whitespace-separated modulus
  // list such as "3 12".
  static GroupSpec parse(std::string_view text);

  bool operator==(const GroupSpec&) const = default;
};

// Element stored componentwise reduced; value equality is structural.
struct GroupElement {
  std::vector<int> r;

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement zero(const GroupSpec& g);
GroupElement make_element(const GroupSpec& g, std::vector<int> raw);

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& g, const GroupElement& a);
GroupElement scalar_mul(const GroupSpec& g, int k, const GroupElement& a);

// Least k >= 1 with k*a = 0.
int element_order(const GroupSpec& g, const GroupElement& a);

// True iff a lies in the index-2 subgroup (last residue even).
// Throws std::domain_error when the last modulus is odd.
bool is_even(const GroupSpec& g, const GroupElement& a);

bool is_zero(const GroupElement& a);

// Mixed-radix index r0 + m0*r1 + m0*m1*r2 + ..., a bijection onto [0, order).
int element_index(const GroupSpec& g, const GroupElement& a);
GroupElement element_from_index(const GroupSpec& g, int index);

std::string to_string(const GroupElement& a);                       // "(a,b)"
GroupElement parse_element(const GroupSpec& g, std::string_view s); // "(a,b)"

}  // namespace cgt
