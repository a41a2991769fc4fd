#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/group_io.hpp"
#include "loopforge/lattice.hpp"
#include "oracles.hpp"

using namespace loopforge;
using testing::sorted;

TEST_CASE("tables that are not groups are rejected") {
  std::vector<std::vector<Elem>> rows{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  auto l = LoopTable::from_rows(rows);
  REQUIRE_FALSE(oracle::loop_is_associative(l));
  try {
    build_from_table(rows);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAssociative);
  }
  std::vector<std::vector<Elem>> notLatin{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(build_from_table(notLatin), Error);
}

TEST_CASE("closure and table round trip") {
  testing::S3 s3;
  CHECK(s3.g->order() == 6);
  GroupPtr again = build_from_table(s3.g->rows());
  CHECK(again->rows() == s3.g->rows());

  // s = (1 3), t = (0 1)(2 3): reflections of a square, (st)^4 = 1
  GroupPtr d8 = build_from_generators(4, {parse_cycles(4, "(1 3)"), parse_cycles(4, "(0 1)(2 3)")});
  CHECK(d8->order() == 8);
  CHECK(are_isomorphic(d8, dihedral(8)));
}

TEST_CASE("generated subgroups") {
  GroupPtr d8 = dihedral(8);
  CHECK(generated_subgroup(d8, std::vector<Elem>{4}).size() == 2);
  GroupPtr d12 = dihedral(12);
  const Elem s = 1, t = 6;
  ElementSet h = generated_subgroup(d12, std::vector<Elem>{d12->mul(s, s), t});
  CHECK(h.size() == 6);
  CHECK(h.members() == oracle::closure(*d12, {d12->mul(s, s), t}));
}

TEST_CASE("cosets, classes, centralizers") {
  testing::S3 s3;
  ElementSet h = ElementSet::subgroup(s3.g, {0, s3["(0 1)"]});
  auto cosets = right_cosets(h);
  CHECK(cosets.size() == 3);
  for (const auto& c : cosets) CHECK(c.size() == 2);
  CHECK(cosets == oracle::right_cosets(*s3.g, h.members()));

  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(s3.g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(normalizer(h).size() == 2);

  GroupPtr d12 = dihedral(12);
  const Elem s3c = d12->power(1, 3);
  auto classOf = conjugacy_class_index(d12);
  CHECK(conjugacy_classes(d12)[classOf[s3c]].size() == 1);
  ElementSet z = center(d12);
  CHECK(z.members() == sorted({0, s3c}));
  CHECK(centralizer(ElementSet::whole(d12)) == z);
  CHECK(z.members() == oracle::center(*d12));
}

TEST_CASE("cores and derived subgroups") {
  GroupPtr d8 = dihedral(8);
  CHECK(core(ElementSet::subgroup(d8, {0, 4})).is_trivial());
  GroupPtr q8 = dicyclic(8);
  ElementSet z = center(q8);
  CHECK(core(z) == z);
  CHECK(derived_subgroup(q8) == z);
  CHECK(z.size() == 2);

  GroupPtr d12 = dihedral(12);
  ElementSet d = derived_subgroup(d12);
  CHECK(d.size() == 3);
  CHECK(d == generated_subgroup(d12, std::vector<Elem>{d12->mul(1, 1)}));
  CHECK(d.members() == oracle::derived_subgroup(*d12));
  CHECK(quotient(d).group->order() == 4);
}

TEST_CASE("products and quotients") {
  CHECK(are_isomorphic(direct_product(cyclic(2), cyclic(3)).group, cyclic(6)));
  CHECK(direct_product(cyclic(2), dihedral(8)).group->order() == 16);

  GroupPtr c2 = cyclic(2), c3 = cyclic(3);
  std::vector<Elem> gens{1};
  std::vector<Perm> inversion{{0, 2, 1}};
  Action a = action_from_generators(*c2, *c3, gens, inversion);
  testing::S3 s3;
  CHECK(are_isomorphic(semidirect_product(c2, c3, a).group, s3.g));

  GroupPtr c4 = cyclic(4), c5 = cyclic(5);
  std::vector<Perm> doubling{{0, 2, 4, 1, 3}};
  Action b = action_from_generators(*c4, *c5, gens, doubling);
  ProductGroup sd = semidirect_product(c4, c5, b);
  CHECK(sd.group->order() == 20);
  CHECK(find_isomorphism(sd.group, affine_group(5).group).has_value());

  std::vector<Perm> bad{{0, 2, 1, 3, 4}};
  CHECK_THROWS_AS(action_from_generators(*c4, *c5, gens, bad), Error);

  QuotientGroup q = quotient(generated_subgroup(s3.g, std::vector<Elem>{s3["(0 1 2)"]}));
  CHECK(are_isomorphic(q.group, c2));
}

TEST_CASE("rank, Sylow subgroups and p-parts") {
  CHECK(rank(abelian({2, 2})) == 2);
  CHECK(brute_force_rank(abelian({2, 2})) == 2);
  CHECK(rank(direct_product(cyclic(2), cyclic(3)).group) == 1);
  CHECK(rank(abelian({4, 2})) == 2);
  for (const auto& e : small_group_catalog(16)) CHECK(rank(e.group) == brute_force_rank(e.group));

  GroupPtr c12 = cyclic(12);
  ElementSet whole = ElementSet::whole(c12);
  CHECK(is_cyclic(p_part(whole, 2)));
  CHECK(p_part(whole, 2).size() == 4);
  CHECK(p_part(whole, 3).size() == 3);

  testing::S3 s3;
  CHECK(sylow_subgroup(s3.g, 3) == generated_subgroup(s3.g, std::vector<Elem>{s3["(0 1 2)"]}));
}

TEST_CASE("subgroup lattice matches brute force") {
  for (const auto& e : small_group_catalog(24)) {
    std::vector<std::vector<Elem>> lib;
    for (const auto& h : all_subgroups(e.group)) lib.push_back(h.members());
    std::sort(lib.begin(), lib.end());
    CHECK_MESSAGE(lib == oracle::subgroups(*e.group), e.name);
  }
}

TEST_CASE("group text format") {
  GroupPtr g = parse_group_text("format perm 3\n(0 1 2)\n(0 1)\n");
  CHECK(g->order() == 6);
  GroupPtr again = parse_group_text(format_group_table(*g));
  CHECK(again->rows() == g->rows());
  CHECK_THROWS_AS(parse_group_text("format table 2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_group_text("nonsense"), Error);
}

TEST_CASE("subgroups up to conjugacy cover the lattice") {
  for (const auto& e : small_group_catalog(24)) {
    std::set<std::vector<Elem>> covered;
    for (const auto& h : subgroups_up_to_conjugacy(e.group))
      for (Elem g = 0; g < e.group->order(); ++g) covered.insert(conjugate(h, g).members());
    auto all = oracle::subgroups(*e.group);
    CHECK_MESSAGE(covered == std::set<std::vector<Elem>>(all.begin(), all.end()), e.name);
  }
}
