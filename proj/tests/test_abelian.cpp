#include <doctest.h>

#include "helpers.hpp"
#include "loopforge/abelian.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/folder.hpp"
#include "loopforge/lattice.hpp"
#include "loopforge/numeric.hpp"
#include "loopforge/search.hpp"
#include "oracles.hpp"

using namespace loopforge;

namespace {

std::vector<Elem> all_elements(const GroupTable& g) {
  std::vector<Elem> v(g.order());
  for (Elem x = 0; x < g.order(); ++x) v[x] = x;
  return v;
}

void check_generating(const ElementSet& h, const std::vector<Elem>& t) {
  const auto& g = h.group();
  CHECK(t.front() == 0);
  CHECK(oracle::is_transversal(g, h.members(), t));
  CHECK(oracle::closure(g, t).size() == g.order());
}

}  // namespace

TEST_CASE("invariant factors") {
  AbelianDecomposition d = invariant_factor_decomposition(abelian({12, 2}));
  CHECK(d.orders == std::vector<std::size_t>{12, 2});
  for (const auto& e : small_group_catalog(64)) {
    if (!e.group->is_abelian()) continue;
    AbelianDecomposition dec = invariant_factor_decomposition(e.group);
    std::size_t product = 1;
    for (std::size_t i = 0; i < dec.orders.size(); ++i) {
      product *= dec.orders[i];
      CHECK(e.group->element_order(dec.factorGenerators[i]) == dec.orders[i]);
      if (i > 0) CHECK(dec.orders[i - 1] % dec.orders[i] == 0);
    }
    CHECK(product == e.group->order());
    CHECK(oracle::closure(*e.group, dec.factorGenerators).size() == e.group->order());
    CHECK_MESSAGE(are_isomorphic(abelian(dec.orders), e.group), e.name);
    CHECK(abelian_rank(e.group) == brute_force_rank(e.group));
  }
  CHECK(abelian_rank(abelian({2, 2, 3})) == 2);
  CHECK(abelian_rank(abelian({4, 2})) == 2);
  CHECK_THROWS_AS(invariant_factor_decomposition(dihedral(8)), Error);
}

TEST_CASE("primary decomposition") {
  GroupPtr g = abelian({8, 4, 2});
  AbelianDecomposition d = primary_decomposition(ElementSet::whole(g));
  CHECK(d.orders == std::vector<std::size_t>{8, 4, 2});
  CHECK(oracle::abelian_p_rank(*g, all_elements(*g), 2) == 3);
}

TEST_CASE("cyclic groups") {
  GroupPtr c6 = cyclic(6);
  ElementSet h = ElementSet::subgroup(c6, {0, 3});
  auto t = generating_transversal_cyclic(ElementSet::whole(c6), h);
  REQUIRE(t.size() == 3);
  Elem g = t[1];
  CHECK(c6->element_order(g) == 6);
  CHECK(testing::sorted({0, g, c6->mul(g, g)}) == t);
  check_generating(h, t);

  GroupPtr c9 = cyclic(9);
  ElementSet h9 = generated_subgroup(c9, std::vector<Elem>{3});
  auto t9 = generating_transversal_cyclic(ElementSet::whole(c9), h9);
  CHECK(t9.size() == 3);
  check_generating(h9, t9);
  CHECK_THROWS_AS(generating_transversal_cyclic(ElementSet::whole(c9), ElementSet::whole(c9)), Error);
}

TEST_CASE("p-groups") {
  GroupPtr g = abelian({4, 2});
  ElementSet h = ElementSet::subgroup(g, {0, 4});  // <(2,0)>
  auto t = generating_transversal_p_group(ElementSet::whole(g), h);
  CHECK(t.size() == 4);
  check_generating(h, t);

  GroupPtr e = abelian({2, 2, 2});
  ElementSet k = ElementSet::subgroup(e, {0, 1, 2, 3});
  auto m = minimal_transversal_p_group(ElementSet::whole(e), k);
  CHECK(m.size() == 2);
  CHECK(oracle::abelian_p_rank(*e, oracle::closure(*e, {m[1]}), 2) == 1);
  CHECK_THROWS_AS(generating_transversal_p_group(ElementSet::whole(e), k), Error);
  CHECK_THROWS_AS(minimal_transversal_p_group(ElementSet::whole(e), ElementSet::trivial(e)), Error);
  CHECK_THROWS_AS(generating_transversal_p_group(ElementSet::whole(cyclic(6)), ElementSet::trivial(cyclic(6))),
                  Error);

  // every subgroup of every abelian 2-group of order at most 32
  for (const auto& c : small_group_catalog(32)) {
    if (!c.group->is_abelian() || prime_of_power(c.group->order()) == 0) continue;
    const std::size_t p = prime_of_power(c.group->order());
    const std::size_t rk = abelian_rank(c.group);
    ElementSet whole = ElementSet::whole(c.group);
    for (const auto& s : all_subgroups(c.group)) {
      if (index_of(s) > rk) {
        check_generating(s, generating_transversal_p_group(whole, s));
      } else {
        auto t = minimal_transversal_p_group(whole, s);
        std::vector<Elem> rest(t.begin() + 1, t.end());
        CHECK(oracle::is_transversal(*c.group, s.members(), t));
        CHECK(oracle::abelian_p_rank(*c.group, oracle::closure(*c.group, rest), p) == t.size() - 1);
      }
    }
  }
}

TEST_CASE("mixed abelian groups") {
  GroupPtr c12 = cyclic(12);
  ElementSet whole = ElementSet::whole(c12);
  ElementSet h = ElementSet::subgroup(c12, {0, 6});
  CHECK(sylow_index_condition(whole, h));
  auto t = generating_transversal_abelian(whole, h);
  CHECK(t.size() == 6);
  check_generating(h, t);

  GroupPtr v = abelian({2, 2, 3});
  ElementSet k = ElementSet::subgroup(v, {0, 3});
  if (!sylow_index_condition(ElementSet::whole(v), k))
    CHECK_THROWS_AS(generating_transversal_abelian(ElementSet::whole(v), k), Error);

  for (const auto& c : small_group_catalog(40)) {
    if (!c.group->is_abelian()) continue;
    ElementSet all = ElementSet::whole(c.group);
    for (const auto& s : all_subgroups(c.group))
      if (sylow_index_condition(all, s)) check_generating(s, generating_transversal_abelian(all, s));
  }
}

TEST_CASE("lifting from an abelian quotient") {
  AffineGroup aff = affine_group(5);
  ElementSet h = intersection(affine_subgroup(aff, 2), aff.linear);
  QuotientLift lift = lift_generating_transversal_from_derived(h);
  CHECK(lift.folder.order() == 10);
  CHECK(lift.folder.is_generating());
  CHECK(lift.folder.is_rcc());
  CHECK(is_invariant_under(ElementSet::whole(aff.group), lift.folder.transversal()));
  CHECK(lift.centralizerTrivial);
  CHECK(lift.roundtrip);
  QuotientLift same = lift_generating_transversal_from_quotient(h, aff.translations);
  CHECK(same.folder.transversal() == lift.folder.transversal());

  CHECK_THROWS_AS(lift_generating_transversal_from_quotient(aff.linear, aff.translations), Error);
}
