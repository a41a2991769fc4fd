#include <doctest.h>

#include "helpers.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/lattice.hpp"
#include "loopforge/search.hpp"
#include "oracles.hpp"

using namespace loopforge;
using testing::sorted;
using testing::word;

TEST_CASE("dihedral and quaternion examples") {
  GroupPtr d8 = dihedral(8);
  const Elem s = 4, t = 5;
  ElementSet h = ElementSet::subgroup(d8, {0, s});
  auto found = enumerate_invariant_transversals(h);
  std::vector<std::vector<Elem>> expected{
      sorted({0, t, word(*d8, {s, t, s}), word(*d8, {t, s, t, s})}),
      sorted({0, word(*d8, {s, t}), word(*d8, {t, s}), word(*d8, {t, s, t, s})})};
  std::sort(expected.begin(), expected.end());
  CHECK(found.transversals == expected);
  CHECK(found.complete);

  GroupPtr q8 = dicyclic(8);
  auto none = enumerate_invariant_transversals(center(q8));
  CHECK(none.transversals.empty());
  CHECK(none.complete);
}

TEST_CASE("dihedral group of order 12") {
  GroupPtr d12 = dihedral(12);
  const Elem s = 1, t = 6;
  ElementSet h = generated_subgroup(d12, std::vector<Elem>{d12->mul(s, s), t});
  auto found = enumerate_invariant_transversals(h);
  CHECK(found.count >= 1);
  std::vector<Elem> expected = sorted({0, d12->power(s, 3)});
  CHECK(std::find(found.transversals.begin(), found.transversals.end(), expected) !=
        found.transversals.end());
}

TEST_CASE("abelian groups: every transversal is invariant") {
  for (const auto& e : small_group_catalog(16)) {
    if (!e.group->is_abelian()) continue;
    for (const auto& h : all_subgroups(e.group)) {
      std::uint64_t expected = 1;
      for (std::size_t i = 1; i < index_of(h); ++i) expected *= h.size();
      CHECK(count_invariant_transversals(h).count == expected);
      CHECK(oracle::invariant_transversals(*e.group, h.members()).size() == expected);
    }
  }
}

TEST_CASE("affine group counts") {
  AffineGroup aff = affine_group(5);
  for (const auto& h : all_subgroups(aff.group)) {
    if (h.size() != 2 || !h.subset_of(aff.linear)) continue;
    CHECK(count_invariant_transversals(h).count == 2);
  }
}

TEST_CASE("limits and budgets") {
  ElementSet h = ElementSet::trivial(abelian({2, 2, 2}));
  CHECK(enumerate_invariant_transversals(h, {1}).transversals.size() == 1);
  ElementSet k = ElementSet::subgroup(abelian({2, 2, 2, 2}), {0, 1});
  auto cut = count_invariant_transversals(k, {0, 5});
  CHECK_FALSE(cut.complete);
  auto full = count_invariant_transversals(k);
  CHECK(full.complete);
  CHECK(full.count == 128);
}

TEST_CASE("acting subgroups") {
  for (const auto& e : small_group_catalog(12)) {
    auto subs = oracle::subgroups(*e.group);
    for (const auto& h : subgroups_up_to_conjugacy(e.group))
      for (const auto& um : subs) {
        if (!std::includes(h.begin(), h.end(), um.begin(), um.end())) continue;
        ElementSet u = ElementSet::subgroup(e.group, um);
        CHECK(enumerate_invariant_transversals(h, {}, u).transversals ==
              oracle::invariant_transversals(*e.group, h.members(), um));
      }
  }
}

TEST_CASE("double cosets and invariant-system criteria") {
  testing::S3 s3;
  ElementSet h = ElementSet::subgroup(s3.g, {0, s3["(0 1)"]});
  CHECK(double_coset_transversal(h, h).size() == 2);

  FelschReport r = felsch_criteria(h, h);
  CHECK(r.exists);
  CHECK(r.agree());
  REQUIRE(r.witness.has_value());
  CHECK(oracle::is_invariant(*s3.g, h.members(), *r.witness));
  CHECK(oracle::is_transversal(*s3.g, h.members(), *r.witness));
  CHECK(felsch_criteria(h, h).exists);

  GroupPtr q8 = dicyclic(8);
  ElementSet z = center(q8);
  FelschReport rq = felsch_criteria(z, z);
  CHECK(rq.exists);
  CHECK(rq.agree());

  CHECK(abelian_h_invariance_criterion(z));
  CHECK(abelian_h_invariance_criterion(h));
  CHECK_THROWS_AS(felsch_criteria(ElementSet::trivial(s3.g), h), Error);
}
