#include "doctest.h"

#include <numeric>

#include "solqsol/config.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/group.hpp"
#include "solqsol/numbers.hpp"
#include "solqsol/subgroup.hpp"

#include "support/oracles.hpp"

using namespace solqsol;

TEST_CASE("cyclic groups") {
  CHECK(make_cyclic(1).order() == 1);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);

  Group c6 = make_cyclic(6);
  validate_group(c6);
  CHECK(c6.abelian());
  CHECK(exponent(c6) == 6);
  OrderHistogram expected{{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  CHECK(order_histogram(c6) == expected);

  // one subgroup per divisor
  Group c4 = make_cyclic(4);
  int order2 = 0;
  for (const auto& b : all_subgroup_bits(c4))
    if (b.count() == 2) ++order2;
  CHECK(order2 == 1);
  CHECK(exponent(c4) == 4);
}

TEST_CASE("dihedral groups") {
  CHECK_THROWS_AS(make_dihedral(4), std::invalid_argument);
  CHECK_THROWS_AS(make_dihedral(7), std::invalid_argument);

  Group d6 = make_dihedral(6);
  validate_group(d6);
  CHECK_FALSE(d6.abelian());
  OrderHistogram expected{{1, 1}, {2, 3}, {3, 2}};
  CHECK(order_histogram(d6) == expected);

  Group d8 = make_dihedral(8);
  validate_group(d8);
  CHECK(oracle::all_subgroups_by_subsets(d8).size() == 10);
  CHECK(d8.element_order(1) == 4);   // x
  CHECK(d8.element_order(4) == 2);   // y
}

TEST_CASE("quaternion group") {
  Group q8 = make_quaternion();
  validate_group(q8);
  OrderHistogram expected{{1, 1}, {2, 1}, {4, 6}};
  CHECK(order_histogram(q8) == expected);

  // every subgroup normal
  auto subs = oracle::all_subgroups_by_subsets(q8);
  CHECK(subs.size() == 6);
  CHECK(oracle::normal_subgroups_by_class_unions(q8).size() == 6);
}

TEST_CASE("semidihedral groups") {
  CHECK_THROWS_AS(make_semidihedral(8), std::invalid_argument);
  CHECK_THROWS_AS(make_semidihedral(24), std::invalid_argument);

  Group sd16 = make_semidihedral(16);
  validate_group(sd16);
  CHECK_FALSE(sd16.abelian());
  CHECK(sd16.order() == 16);

  // index-2 subgroups via the subset oracle
  auto subs = oracle::all_subgroups_by_subsets(sd16);
  int maximal = 0;
  for (const auto& s : subs)
    if (s.size() == 8) ++maximal;
  CHECK(maximal == 3);
}

TEST_CASE("abelian constructor") {
  Group z2z4 = make_abelian({{2, 1}, {2, 2}});
  validate_group(z2z4);
  CHECK(z2z4.order() == 8);
  CHECK(exponent(z2z4) == 4);
  CHECK(z2z4.label() == "Ab(2:[1,2])");

  CHECK(make_abelian({{3, 1}}).order() == 3);
  CHECK(make_abelian({{2, 2}, {2, 2}}).order() == 16);
  CHECK_THROWS_AS(make_abelian({{4, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_abelian({{2, 20}}), CapExceeded);

  Group z2cubed = make_abelian({{2, 1}, {2, 1}, {2, 1}});
  OrderHistogram expected{{1, 1}, {2, 7}};
  CHECK(order_histogram(z2cubed) == expected);
  CHECK(exponent(z2cubed) == 2);
}

TEST_CASE("symmetric groups") {
  CHECK(make_symmetric(1).order() == 1);
  CHECK_THROWS_AS(make_symmetric(6), std::invalid_argument);

  Group s4 = make_symmetric(4);
  validate_group(s4);
  CHECK(s4.order() == 24);
  CHECK(oracle::normal_subgroups_by_class_unions(s4).size() == 4);
}

TEST_CASE("direct products") {
  Group c2 = make_cyclic(2), c3 = make_cyclic(3);
  Group prod = direct_product(c2, c3);
  validate_group(prod);
  CHECK(prod.order() == 6);
  CHECK(order_histogram(prod) == order_histogram(make_cyclic(6)));

  Group d6d10 = direct_product(make_dihedral(6), make_dihedral(10));
  CHECK(d6d10.order() == 60);
  CHECK(d6d10.label() == "D6xD10");
  validate_group(d6d10);

  Group with_trivial = direct_product(make_dihedral(8), make_cyclic(1));
  CHECK(order_histogram(with_trivial) == order_histogram(make_dihedral(8)));

  ScopedMaxOrder cap(100);
  CHECK_THROWS_AS(direct_product(make_dihedral(24), make_dihedral(24)), CapExceeded);
}

TEST_CASE("product histogram convolution") {
  Group g = make_dihedral(8), h = make_cyclic(6);
  auto hg = order_histogram(g), hh = order_histogram(h);
  auto hp = order_histogram(direct_product(g, h));
  OrderHistogram expected;
  for (auto [a, ca] : hg)
    for (auto [b, cb] : hh) expected[std::lcm(a, b)] += ca * cb;
  CHECK(hp == expected);
}

TEST_CASE("element orders divide the group order") {
  for (const Group& g : {make_dihedral(12), make_quaternion(), make_symmetric(4),
                         make_semidihedral(16), make_abelian({{2, 1}, {3, 1}, {5, 1}})}) {
    CHECK(g.element_order(g.identity()) == 1);
    for (int x = 0; x < g.order(); ++x) CHECK(g.order() % g.element_order(x) == 0);
  }
}

TEST_CASE("table validation catches corruption") {
  Group c4 = make_cyclic(4);
  auto table = c4.table();
  table[1 * 4 + 1] = 3;  // 1+1 = 3 breaks associativity
  CHECK_THROWS_AS(Group::from_table(4, table, "broken"), std::logic_error);
}
