#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/folder.hpp"
#include "loopforge/group_io.hpp"
#include "loopforge/lattice.hpp"
#include "loopforge/loop.hpp"
#include "loopforge/search.hpp"
#include "oracles.hpp"

using namespace loopforge;
using testing::sorted;
using testing::word;

namespace {

struct D8 {
  GroupPtr g = dihedral(8);
  Elem s = 4, t = 5;
  ElementSet h = ElementSet::subgroup(g, {0, 4});
  std::vector<Elem> t1() const { return sorted({0, t, word(*g, {s, t, s}), word(*g, {t, s, t, s})}); }
  std::vector<Elem> t2() const {
    return sorted({0, word(*g, {s, t}), word(*g, {t, s}), word(*g, {t, s, t, s})});
  }
};

ElementSet transposition_subgroup(const testing::S3& s3) {
  return ElementSet::subgroup(s3.g, {0, s3["(0 1)"]});
}

}  // namespace

TEST_CASE("validation of the dihedral folders") {
  D8 d;
  LoopFolder f = validate_folder(d.h, d.t1());
  CHECK(f.is_rcc());
  CHECK(f.is_faithful());
  CHECK_FALSE(f.is_generating());
  CHECK(f.flags_consistent());
  CHECK(f.transversal().front() == 0);
  CHECK(validate_folder(d.h, d.t2(), false).is_rcc());
  CHECK(normalizer_factorization_check(f));
  CHECK(normalizer(d.h).size() == 4);
  CHECK(product_set(d.h, centralizer(d.h)).size() == 4);
  CHECK(loop_isomorphic(loop_from_folder(f), LoopTable::from_group(*abelian({2, 2}))));
}

TEST_CASE("non-transversals are rejected") {
  testing::S3 s3;
  ElementSet h = transposition_subgroup(s3);
  try {
    validate_folder(h, {0, s3["(0 1)"], s3["(0 2)"]});
    FAIL("expected NotTransversal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTransversal);
  }
  CHECK_FALSE(is_right_transversal(h, std::vector<Elem>{0, s3["(0 1)"], s3["(0 2)"]}));
  CHECK(is_right_transversal(h, std::vector<Elem>{0, s3["(0 1 2)"], s3["(0 2 1)"]}));
}

TEST_CASE("faithfulness") {
  GroupPtr q8 = dicyclic(8);
  ElementSet z = center(q8);
  std::vector<Elem> t;
  for (const auto& c : right_cosets(z)) t.push_back(c.front());
  CHECK_FALSE(validate_folder(z, t, false).is_faithful());
}

TEST_CASE("derived construction") {
  testing::S3 s3;
  ElementSet h = transposition_subgroup(s3);
  LoopFolder f = derived_construction(h);
  CHECK(f.transversal() == sorted({0, s3["(0 1 2)"], s3["(0 2 1)"]}));
  CHECK(f.is_rcc());
  CHECK(is_derived_form(f));
  CHECK(loop_isomorphic(loop_from_folder(f), LoopTable::from_group(*cyclic(3))));
  try {
    derived_construction(center(dicyclic(8)));
    FAIL("expected DerivedIntersectsH");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DerivedIntersectsH);
  }
}

TEST_CASE("extensions and products") {
  testing::S3 s3;
  LoopFolder base = derived_construction(transposition_subgroup(s3));
  ExtendedFolder e = extend_direct(base, cyclic(2));
  CHECK(e.folder.group()->order() == 12);
  CHECK(e.folder.order() == 6);
  CHECK(e.folder.is_rcc());
  CHECK(e.folder.is_faithful() == base.is_faithful());

  ExtendedFolder p = product_folder(base, base);
  CHECK(p.folder.group()->order() == 36);
  CHECK(p.folder.order() == 9);
  CHECK(p.folder.is_rcc());
  CHECK(p.folder.is_faithful() == base.is_faithful());

  // C4 acting on C5 by x -> 2x, H = <g^2>, T = {1, g}
  GroupPtr c4 = cyclic(4), c5 = cyclic(5);
  std::vector<Elem> gens{1};
  std::vector<Perm> doubling{{0, 2, 4, 1, 3}};
  Action a = action_from_generators(*c4, *c5, gens, doubling);
  LoopFolder small = validate_folder(ElementSet::subgroup(c4, {0, 2}), {0, 1});
  ExtendedFolder sd = extend_semidirect(small, c5, a);
  CHECK(sd.folder.group()->order() == 20);
  CHECK(sd.folder.is_rcc());
  CHECK(sd.folder.order() == 10);

  SemidirectCore sc = semidirect_core(ElementSet::subgroup(c4, {0, 2}), c5, a);
  CHECK(sc.core.is_trivial());
}

TEST_CASE("faithfulness of products matches the factors") {
  std::vector<LoopFolder> folders;
  for (const auto& e : small_group_catalog(8))
    for (const auto& h : subgroups_up_to_conjugacy(e.group))
      for (const auto& t : enumerate_invariant_transversals(h, {2}).transversals)
        folders.push_back(validate_folder(h, t));
  for (std::size_t i = 0; i < folders.size(); i += 3)
    for (std::size_t j = 0; j < folders.size(); j += 5) {
      ExtendedFolder p = product_folder(folders[i], folders[j]);
      CHECK(p.folder.is_rcc());
      CHECK(p.folder.is_faithful() == (folders[i].is_faithful() && folders[j].is_faithful()));
    }
}

TEST_CASE("merging the dihedral transversals") {
  D8 d;
  ExtendedFolder m = merge_transversals(d.h, {d.t2(), d.t1()}, cyclic(2));
  CHECK(m.folder.group()->order() == 16);
  CHECK(m.folder.order() == 8);
  CHECK(m.folder.is_rcc());
  CHECK(m.folder.is_generating());
  CHECK(m.folder.is_faithful());
  CHECK(envelope_roundtrip_check(m.folder));

  // the same set written out by hand: (T2, 1) ∪ (T1, a)
  const ProductGroup& pg = m.product;
  auto pair = [&](Elem x, Elem a) { return pg.group->mul(pg.first(x), pg.second(a)); };
  std::vector<Elem> s;
  for (Elem x : d.t2()) s.push_back(pair(x, 0));
  for (Elem x : d.t1()) s.push_back(pair(x, 1));
  ElementSet h = ElementSet::subgroup(pg.group, {0, pair(d.s, 0)});
  LoopFolder byHand = validate_folder(h, s);
  CHECK(byHand.transversal() == m.folder.transversal());
  CHECK(byHand.is_generating());
  CHECK(envelope_roundtrip(byHand).ok);
  // (a,1)(1,st)(a,t) = (1,s)
  CHECK(word(*pg.group, {pair(0, 1), pair(word(*d.g, {d.s, d.t}), 0), pair(d.t, 1)}) == pair(d.s, 0));

  // T1 x C2 and T2 x C2 do not generate
  for (const auto& tr : {d.t1(), d.t2()}) {
    std::vector<Elem> plain;
    for (Elem x : tr) plain.push_back(pair(x, 0)), plain.push_back(pair(x, 1));
    CHECK_FALSE(validate_folder(h, plain).is_generating());
  }
}

TEST_CASE("normalizer factorization over RCC folders up to order 24") {
  std::size_t checked = 0;
  for (const auto& e : small_group_catalog(24))
    for (const auto& h : subgroups_up_to_conjugacy(e.group))
      for (const auto& t : enumerate_invariant_transversals(h, {4}).transversals) {
        LoopFolder f = validate_folder(h, t);
        CHECK(f.is_rcc());
        CHECK(normalizer_factorization_check(f));
        CHECK(oracle::loop_is_rcc(loop_from_folder(f)));
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("folder files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "loopforge_folder_test";
  fs::create_directories(dir);
  D8 d;
  LoopFolder f = validate_folder(d.h, d.t1());
  std::ofstream(dir / "g.grp") << format_group_table(*d.g);
  std::ofstream(dir / "f.folder") << format_folder(f, "g.grp");
  LoopFolder back = read_folder_file(dir / "f.folder");
  CHECK(back.transversal() == f.transversal());
  CHECK(back.subgroup().members() == f.subgroup().members());
  CHECK_THROWS_AS(parse_folder_text("subgroup 0\n"), Error);
  fs::remove_all(dir);
}
