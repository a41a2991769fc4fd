#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/conjecture.hpp"
#include "loopforge/field.hpp"
#include "loopforge/frobenius.hpp"
#include "oracles.hpp"

using namespace loopforge;

TEST_CASE("finite fields") {
  FiniteField f(2, 3, {1, 1, 0, 1});
  CHECK(f.size() == 8);
  for (unsigned x = 0; x < 8; ++x) {
    unsigned pi = f.pow(x, 4);
    CHECK(f.pow(pi, 4) == f.mul(x, x));
  }
  for (unsigned q : {4u, 8u, 9u, 25u, 32u}) {
    FiniteField g = gf_of_order(q);
    for (unsigned x = 1; x < q; ++x) CHECK(g.mul(x, g.inv(x)) == 1);
    // the primitive element has order q - 1
    unsigned y = g.primitive_element(), k = 1;
    while (y != 1) {
      y = g.mul(y, g.primitive_element());
      ++k;
    }
    CHECK(k == q - 1);
  }
  CHECK(is_irreducible(2, {1, 1, 0, 1}));
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
}

TEST_CASE("families") {
  CHECK(dicyclic(8)->order() == 8);
  CHECK(derived_subgroup(dicyclic(8)) == center(dicyclic(8)));
  CHECK(symmetric(4)->order() == 24);
  CHECK(alternating(5)->order() == 60);
  CHECK(rank(abelian({4, 2})) == 2);
  CHECK(special_linear_2_3()->order() == 24);
  testing::S3 s3;
  CHECK(are_isomorphic(affine_group(3).group, s3.g));
}

TEST_CASE("affine groups") {
  AffineGroup aff = affine_group(5);
  CHECK(aff.group->order() == 20);
  CHECK(aff.translations.size() == 5);
  CHECK(aff.linear.size() == 4);
  CHECK(is_normal(aff.translations));
  CHECK(affine_subgroup(aff, 2).size() == 10);
  // conjugation formula, checked exhaustively
  const FiniteField& f = aff.field;
  for (Elem x = 0; x < 20; ++x)
    for (Elem y = 0; y < 20; ++y) {
      unsigned ai = f.inv(aff.alphaOf[y]), b = aff.betaOf[y];
      unsigned c = aff.alphaOf[x], d = aff.betaOf[x];
      unsigned beta = f.sub(f.add(f.mul(f.mul(ai, b), c), f.mul(ai, d)), f.mul(ai, b));
      CHECK(aff.group->conj(x, y) == aff.element(c, beta));
    }
}

TEST_CASE("Suzuki point stabilizer") {
  SuzukiStabilizer s = suzuki_point_stabilizer(1);
  CHECK(s.kernel.size() == 64);
  CHECK(s.complement.size() == 7);
  CHECK(s.group->order() == 448);
  auto fs = detect_frobenius(s.group);
  REQUIRE(fs.has_value());
  CHECK(fs->kernel == s.kernel);
  CHECK(fs->complement.size() == 7);
  CHECK(fs->complementAbelian);
}

TEST_CASE("small group catalog") {
  auto cat = small_group_catalog(40);
  std::map<std::size_t, std::size_t> perOrder;
  for (const auto& e : cat) ++perOrder[e.group->order()];
  CHECK(perOrder[8] == 5);
  for (std::size_t n = 1; n < 40; ++n) CHECK_MESSAGE(perOrder[n] == known_group_count(n), "order " << n);

  bool hasAff5 = false;
  GroupPtr aff5 = affine_group(5).group;
  for (const auto& e : cat)
    if (e.group->order() == 20 && are_isomorphic(e.group, aff5)) hasAff5 = true;
  CHECK(hasAff5);

  // pairwise non-isomorphic
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size() && cat[j].group->order() == cat[i].group->order(); ++j)
      CHECK_MESSAGE(!are_isomorphic(cat[i].group, cat[j].group), cat[i].name << " ~ " << cat[j].name);

  bool heisenberg = false;
  for (const auto& e : cat)
    if (e.group->order() == 27 && !e.group->is_abelian() && derived_subgroup(e.group) == center(e.group) &&
        center(e.group).size() == 3)
      heisenberg = true;
  CHECK(heisenberg);

  CHECK_THROWS_AS(small_group_catalog(65), Error);
  auto nonAbelian = small_group_catalog(CatalogOptions{12, true});
  for (const auto& e : nonAbelian) CHECK_FALSE(e.group->is_abelian());
  CHECK(nonAbelian.size() == 7);
}
