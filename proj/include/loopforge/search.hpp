#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopforge/group.hpp"

namespace loopforge {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

struct SearchOptions {
  std::size_t limit = 0;  // 0: unlimited
  std::uint64_t nodeBudget = kDefaultNodeBudget;
};

struct TransversalSearch {
  std::vector<std::vector<Elem>> transversals;  // sorted, each sorted ascending
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool complete = true;  // false when the node budget ran out
};

// Transversals T of H\G with 1 in T and T^u = T for every u in `acting`
// (G itself when absent), by exact cover over the conjugation orbits of
// `acting`. Stops after `limit` solutions.
TransversalSearch enumerate_invariant_transversals(const ElementSet& h,
                                                   const SearchOptions& options = {},
                                                   const std::optional<ElementSet>& acting = {});
// Same search without materializing the solutions.
TransversalSearch count_invariant_transversals(const ElementSet& h,
                                               const SearchOptions& options = {},
                                               const std::optional<ElementSet>& acting = {});

// Smallest element of every double coset HgU, in increasing order.
std::vector<Elem> double_coset_transversal(const ElementSet& h, const ElementSet& u);

struct FelschReport {
  bool exists = false;  // (a), by exhaustive search
  bool condB = false;
  bool condC = false;
  bool condD = false;
  bool condE = false;
  bool searchComplete = true;
  std::optional<std::vector<Elem>> witness;  // a (U,H,G)-system when one exists
  bool agree() const {
    return exists == condB && condB == condC && condC == condD && condD == condE;
  }
};
// Throws ChainViolated unless U <= H.
FelschReport felsch_criteria(const ElementSet& h, const ElementSet& u,
                             const SearchOptions& options = {});

// g ∈ C_G(H ∩ H^g) for all g. Throws NotAbelian.
bool abelian_h_invariance_criterion(const ElementSet& h);

}  // namespace loopforge
