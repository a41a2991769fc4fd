#pragma once

#include <vector>

#include "loopforge/group.hpp"

namespace loopforge {

// All subgroups generated by a single element, sorted by (order, members).
std::vector<ElementSet> cyclic_subgroups(const GroupPtr& g);

// The full subgroup lattice, obtained by join-closure of the cyclic
// subgroups. Sorted by (order, members). Intended for small groups.
std::vector<ElementSet> all_subgroups(const GroupPtr& g);

// Subgroups grouped into conjugacy classes; each class is sorted and the
// classes are ordered by their first member.
std::vector<std::vector<ElementSet>> subgroup_conjugacy_classes(const GroupPtr& g);

// One representative (the smallest) of every conjugacy class of subgroups.
std::vector<ElementSet> subgroups_up_to_conjugacy(const GroupPtr& g);
std::vector<ElementSet> abelian_subgroups_up_to_conjugacy(const GroupPtr& g);

// Normal subgroups as joins of normal closures of single elements.
std::vector<ElementSet> normal_subgroups(const GroupPtr& g);

// Subgroups of order m, from the full lattice.
std::vector<ElementSet> subgroups_of_order(const GroupPtr& g, std::size_t m);

}  // namespace loopforge
