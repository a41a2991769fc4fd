#pragma once

#include <array>
#include <string>
#include <vector>

#include "loopforge/field.hpp"
#include "loopforge/group.hpp"

namespace loopforge {

GroupPtr cyclic(std::size_t n);
// Order 2n: elements f^j r^i with r of order n, f an involution, r^f = r^-1.
// Element f^j r^i has index j*n + i.
GroupPtr dihedral(std::size_t order);
// Order 4n: elements a^i x^j with a of order 2n, x^2 = a^n, a^x = a^-1.
// dicyclic(8) is Q8.
GroupPtr dicyclic(std::size_t order);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
// Direct product of cyclic groups of the given orders (lexicographic indices).
GroupPtr abelian(const std::vector<std::size_t>& orders);

// Aff(1,q): t_{a,b}: x -> a x + b with product t_{a,b} t_{c,d} = t_{ac, ad+b}
// (composition, rightmost applied first). Indexing: a runs over the
// multiplicative group starting at 1 then in increasing field code, b over
// field codes; index = position(a) * q + b.
struct AffineGroup {
  GroupPtr group;
  FiniteField field;
  std::vector<unsigned> alphaOf;  // per element
  std::vector<unsigned> betaOf;
  ElementSet translations;        // P = {t_{1,b}}
  ElementSet linear;              // L = {t_{a,0}}
  Elem element(unsigned alpha, unsigned beta) const;
};
AffineGroup affine_group(std::size_t q);

// The subgroup {t_{a,b} : a in L'} of Aff(1,q) where L' is the subgroup of
// order d of the multiplicative group.
ElementSet affine_subgroup(const AffineGroup& aff, std::size_t d);

using Matrix4 = std::array<unsigned, 16>;  // row-major over a FiniteField

struct SuzukiStabilizer {
  GroupPtr group;
  ElementSet kernel;      // {S(a,b)}
  ElementSet complement;  // {M(lambda)}
  std::vector<Matrix4> matrices;
  FiniteField field;
};
Matrix4 suzuki_s(const FiniteField& f, unsigned m, unsigned a, unsigned b);
Matrix4 suzuki_m(const FiniteField& f, unsigned m, unsigned lambda);
SuzukiStabilizer suzuki_point_stabilizer(unsigned m);

// SL(2,3) as 2x2 matrices over GF(3).
GroupPtr special_linear_2_3();

struct CatalogEntry {
  std::string name;
  GroupPtr group;
  std::string constructor;
  std::vector<long long> parameters;
};

struct CatalogOptions {
  std::size_t maxOrder = 40;
  bool nonAbelianOnly = false;
};

// Curated small-group list, deduplicated up to isomorphism and ordered by
// (order, name).
std::vector<CatalogEntry> small_group_catalog(const CatalogOptions& options);
std::vector<CatalogEntry> small_group_catalog(std::size_t maxOrder);

// Number of isomorphism types of groups of order n, for n <= 64.
std::size_t known_group_count(std::size_t n);

}  // namespace loopforge
