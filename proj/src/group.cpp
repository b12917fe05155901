#include "cgt/group.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cgt {

GroupSpec::GroupSpec(std::vector<int> m) : moduli(std::move(m)) {
  if (moduli.empty()) throw std::invalid_argument("group: empty modulus list");
  for (int mod : moduli)
    if (mod < 2) throw std::invalid_argument("group: modulus must be >= 2");
}

int GroupSpec::order() const {
  int n = 1;
  for (int mod : moduli) n *= mod;
  return n;
}

std::string GroupSpec::name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += 'x';
    s += 'Z';
    s += std::to_string(moduli[i]);
  }
  return s;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string t(text);
  std::vector<int> m;
  if (t.find_first_of("zZ") != std::string::npos) {
    std::string num;
    for (char c : t) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (c == 'z' || c == 'Z' || c == 'x' || c == 'X') {
        if (!num.empty()) { m.push_back(std::stoi(num)); num.clear(); }
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("group: bad character in '" + t + "'");
      }
    }
    if (!num.empty()) m.push_back(std::stoi(num));
  } else {
    std::istringstream in(t);
    int v;
    while (in >> v) m.push_back(v);
    if (!in.eof()) throw std::invalid_argument("group: bad modulus list '" + t + "'");
  }
  return GroupSpec(std::move(m));
}

static void check_arity(const GroupSpec& g, const GroupElement& a) {
  if (a.r.size() != g.rank())
    throw std::invalid_argument("group element does not match group spec");
}

GroupElement zero(const GroupSpec& g) {
  return GroupElement{std::vector<int>(g.rank(), 0)};
}

GroupElement make_element(const GroupSpec& g, std::vector<int> raw) {
  if (raw.size() != g.rank())
    throw std::invalid_argument("group element does not match group spec");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] %= g.moduli[i];
    if (raw[i] < 0) raw[i] += g.moduli[i];
  }
  return GroupElement{std::move(raw)};
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  check_arity(g, a);
  check_arity(g, b);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.r.size(); ++i) {
    out.r[i] += b.r[i];
    if (out.r[i] >= g.moduli[i]) out.r[i] -= g.moduli[i];
  }
  return out;
}

GroupElement negate(const GroupSpec& g, const GroupElement& a) {
  check_arity(g, a);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.r.size(); ++i)
    if (out.r[i] != 0) out.r[i] = g.moduli[i] - out.r[i];
  return out;
}

GroupElement scalar_mul(const GroupSpec& g, int k, const GroupElement& a) {
  check_arity(g, a);
  GroupElement out = zero(g);
  for (std::size_t i = 0; i < out.r.size(); ++i) {
    long long v = static_cast<long long>(k) * a.r[i] % g.moduli[i];
    if (v < 0) v += g.moduli[i];
    out.r[i] = static_cast<int>(v);
  }
  return out;
}

int element_order(const GroupSpec& g, const GroupElement& a) {
  check_arity(g, a);
  // lcm of the per-component orders m_i / gcd(r_i, m_i)
  long long ord = 1;
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    int ci = g.moduli[i] / std::gcd(a.r[i], g.moduli[i]);
    ord = std::lcm(ord, static_cast<long long>(ci));
  }
  return static_cast<int>(ord);
}

bool is_even(const GroupSpec& g, const GroupElement& a) {
  check_arity(g, a);
  if (!g.parity_defined())
    throw std::domain_error("parity undefined: last modulus is odd");
  return a.r.back() % 2 == 0;
}

bool is_zero(const GroupElement& a) {
  for (int v : a.r)
    if (v != 0) return false;
  return true;
}

int element_index(const GroupSpec& g, const GroupElement& a) {
  check_arity(g, a);
  int idx = 0, base = 1;
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    idx += a.r[i] * base;
    base *= g.moduli[i];
  }
  return idx;
}

GroupElement element_from_index(const GroupSpec& g, int index) {
  if (index < 0 || index >= g.order())
    throw std::invalid_argument("element index out of range");
  GroupElement out = zero(g);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out.r[i] = index % g.moduli[i];
    index /= g.moduli[i];
  }
  return out;
}

std::string to_string(const GroupElement& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.r[i]);
  }
  s += ')';
  return s;
}

GroupElement parse_element(const GroupSpec& g, std::string_view s) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size() || s[i] != '(')
    throw std::invalid_argument("element: expected '(' in '" + std::string(s) + "'");
  ++i;
  std::vector<int> vals;
  while (true) {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("element: expected integer in '" + std::string(s) + "'");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    vals.push_back(neg ? -v : v);
    skip_ws();
    if (i < s.size() && s[i] == ',') { ++i; continue; }
    if (i < s.size() && s[i] == ')') { ++i; break; }
    throw std::invalid_argument("element: expected ',' or ')' in '" + std::string(s) + "'");
  }
  skip_ws();
  if (i != s.size())
    throw std::invalid_argument("element: trailing characters in '" + std::string(s) + "'");
  if (vals.size() != g.rank())
    throw std::invalid_argument("element: wrong number of components for " + g.name());
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (vals[k] < 0 || vals[k] >= g.moduli[k])
      throw std::invalid_argument("element: residue out of range in '" + std::string(s) + "'");
  return GroupElement{std::move(vals)};
}

}  // namespace cgt
