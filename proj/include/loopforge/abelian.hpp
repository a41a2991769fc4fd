#pragma once

#include <vector>

#include "loopforge/folder.hpp"
#include "loopforge/group.hpp"

namespace loopforge {

// G = <a_1> x ... x <a_r> with |a_j| dividing |a_{j-1}|.
struct AbelianDecomposition {
  std::vector<Elem> factorGenerators;
  std::vector<std::size_t> orders;
};

// Decomposition of an abelian subgroup. Each Sylow part is split by taking an
// element of maximal order (smallest index) and lifting a basis of the
// quotient; the Sylow bases are then multiplied into invariant factors.
// Throws NotAbelian.
AbelianDecomposition invariant_factor_decomposition(const ElementSet& g);
AbelianDecomposition invariant_factor_decomposition(const GroupPtr& g);

// Sylow basis of an abelian p-group, orders non-increasing.
AbelianDecomposition primary_decomposition(const ElementSet& p);

std::size_t abelian_rank(const ElementSet& g);
std::size_t abelian_rank(const GroupPtr& g);

// Transversals below are sorted ascending, so 1 comes first.

// {1, g, ..., g^{n/d - 1}}. Throws NotProper, NotAbelian (non-cyclic G).
std::vector<Elem> generating_transversal_cyclic(const ElementSet& g, const ElementSet& h);

// <T> = G for an abelian p-group with |G:H| > rk(G).
// Throws NotPGroup, IndexTooSmall.
std::vector<Elem> generating_transversal_p_group(const ElementSet& g, const ElementSet& h);

// rk(<T - {1}>) = |T| - 1 for an abelian p-group with |G:H| <= rk(G).
// Throws NotPGroup, IndexTooLarge.
std::vector<Elem> minimal_transversal_p_group(const ElementSet& g, const ElementSet& h);

// max_p |O_p(G) : O_p(H)| > rk(G).
bool sylow_index_condition(const ElementSet& g, const ElementSet& h);
// Throws NotAbelian, ConditionFails.
std::vector<Elem> generating_transversal_abelian(const ElementSet& g, const ElementSet& h);

struct QuotientLift {
  LoopFolder folder;
  bool centralizerTrivial = false;  // C_H(Q) = 1, hence faithful
  bool roundtrip = false;           // envelope check, only run when faithful
};
// T = Q T^ for a generating transversal of HQ/Q in the abelian G/Q.
// Throws PreconditionFailed naming the failed hypothesis.
QuotientLift lift_generating_transversal_from_quotient(const ElementSet& h, const ElementSet& q);
// Same with Q = G'.
QuotientLift lift_generating_transversal_from_derived(const ElementSet& h);

}  // namespace loopforge
