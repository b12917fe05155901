#include <doctest.h>


#include <stdexcept>
#include "cgt/group.hpp"

using namespace cgt;

namespace {
GroupElement el(const GroupSpec& g, std::vector<int> v) { return make_element(g, std::move(v)); }
}

TEST_CASE("group arithmetic on Z3 x Z12") {
  GroupSpec g({3, 12});
  CHECK(g.order() == 36);
  CHECK(g.name() == "Z3xZ12");

  CHECK(add(g, el(g, {1, 5}), el(g, {2, 7})) == el(g, {0, 0}));
  CHECK(add(g, el(g, {0, 0}), el(g, {2, 9})) == el(g, {2, 9}));
  CHECK(add(g, el(g, {0, 6}), el(g, {0, 6})) == el(g, {0, 0}));

  CHECK(negate(g, el(g, {1, 5})) == el(g, {2, 7}));
  CHECK(negate(g, el(g, {0, 6})) == el(g, {0, 6}));
  CHECK(negate(g, el(g, {0, 0})) == el(g, {0, 0}));

  CHECK(element_order(g, el(g, {0, 6})) == 2);
  CHECK(element_order(g, el(g, {0, 4})) == 3);
  CHECK(element_order(g, el(g, {0, 0})) == 1);

  CHECK(is_even(g, el(g, {2, 6})));
  CHECK(!is_even(g, el(g, {1, 3})));
  CHECK(is_even(g, el(g, {0, 0})));
}

TEST_CASE("order by repeated addition agrees with the closed form") {
  for (auto moduli : {std::vector<int>{3, 12}, {3, 36}, {2, 4}, {6}}) {
    GroupSpec g(moduli);
    for (int i = 0; i < g.order(); ++i) {
      GroupElement a = element_from_index(g, i);
      GroupElement acc = a;
      int k = 1;
      while (!is_zero(acc)) {
        acc = add(g, acc, a);
        ++k;
      }
      CHECK(element_order(g, a) == k);
      CHECK(g.order() % k == 0);
    }
  }
}

TEST_CASE("Z3 x Z12 has eight elements of order 3") {
  GroupSpec g({3, 12});
  int count = 0;
  for (int i = 0; i < g.order(); ++i)
    if (element_order(g, element_from_index(g, i)) == 3) ++count;
  CHECK(count == 8);
}

TEST_CASE("parity is a homomorphism and splits the group in half") {
  GroupSpec g({3, 12});
  int odd = 0;
  for (int i = 0; i < g.order(); ++i) {
    GroupElement a = element_from_index(g, i);
    odd += !is_even(g, a);
    for (int j = 0; j < g.order(); ++j) {
      GroupElement b = element_from_index(g, j);
      CHECK(is_even(g, add(g, a, b)) == (is_even(g, a) == is_even(g, b)));
    }
  }
  CHECK(odd == g.order() / 2);
}

TEST_CASE("parity undefined when the last modulus is odd") {
  GroupSpec g({3, 9});
  CHECK(!g.parity_defined());
  CHECK_THROWS_AS(is_even(g, zero(g)), std::domain_error);
}

TEST_CASE("inverses cancel for every element") {
  GroupSpec g({3, 12});
  for (int i = 0; i < g.order(); ++i) {
    GroupElement a = element_from_index(g, i);
    CHECK(is_zero(add(g, a, negate(g, a))));
    CHECK(element_index(g, a) == i);
  }
}

TEST_CASE("group and element text forms") {
  CHECK(GroupSpec::parse("Z3xZ36") == GroupSpec({3, 36}));
  CHECK(GroupSpec::parse("3 36") == GroupSpec({3, 36}));
  CHECK_THROWS(GroupSpec::parse("Z3xZ1"));

  GroupSpec g({3, 36});
  CHECK(parse_element(g, "(2,35)") == el(g, {2, 35}));
  CHECK(to_string(el(g, {2, 35})) == "(2,35)");
  CHECK_THROWS(parse_element(g, "(3,0)"));   // residue out of range
  CHECK_THROWS(parse_element(g, "(1)"));     // wrong arity
  CHECK_THROWS(parse_element(g, "1,2"));     // missing parens
}

TEST_CASE("mismatched element and spec is rejected") {
  GroupSpec g({3, 12});
  GroupSpec h({3});
  GroupElement a = zero(h);
  CHECK_THROWS_AS(add(g, a, a), std::invalid_argument);
}
