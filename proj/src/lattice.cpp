#include "loopforge/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace loopforge {

namespace {

std::vector<ElementSet> sorted_unique(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Join-closure of a generating family of subgroups under taking the join with
// any member of the family.
std::vector<ElementSet> join_closure(const std::vector<ElementSet>& atoms) {
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out;
  for (const auto& a : atoms)
    if (seen.insert(a.members()).second) out.push_back(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& a : atoms) {
      if (a.subset_of(out[i])) continue;
      ElementSet j = join(out[i], a);
      if (seen.insert(j.members()).second) out.push_back(std::move(j));
    }
  }
  return sorted_unique(std::move(out));
}

}  // namespace

std::vector<ElementSet> cyclic_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out;
  for (Elem x = 0; x < g->order(); ++x) {
    Elem seed[] = {x};
    ElementSet c = generated_subgroup(g, seed);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  return sorted_unique(std::move(out));
}

std::vector<ElementSet> all_subgroups(const GroupPtr& g) {
  return join_closure(cyclic_subgroups(g));
}

std::vector<std::vector<ElementSet>> subgroup_conjugacy_classes(const GroupPtr& g) {
  auto subs = all_subgroups(g);
  std::map<std::vector<Elem>, std::size_t> pos;
  for (std::size_t i = 0; i < subs.size(); ++i) pos[subs[i].members()] = i;
  std::vector<char> done(subs.size(), 0);
  std::vector<std::vector<ElementSet>> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::vector<ElementSet> cls;
    for (Elem x = 0; x < g->order(); ++x) {
      ElementSet c = conjugate(subs[i], x);
      std::size_t j = pos.at(c.members());
      if (!done[j]) {
        done[j] = 1;
        cls.push_back(subs[j]);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<ElementSet> subgroups_up_to_conjugacy(const GroupPtr& g) {
  std::vector<ElementSet> reps;
  for (auto& cls : subgroup_conjugacy_classes(g)) reps.push_back(cls.front());
  return reps;
}

std::vector<ElementSet> abelian_subgroups_up_to_conjugacy(const GroupPtr& g) {
  std::vector<ElementSet> reps;
  for (auto& h : subgroups_up_to_conjugacy(g))
    if (is_abelian(h)) reps.push_back(h);
  return reps;
}

std::vector<ElementSet> normal_subgroups(const GroupPtr& g) {
  std::vector<ElementSet> atoms;
  std::set<std::vector<Elem>> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    ElementSet n = normal_closure(ElementSet(g, {cls.members().front()}));
    if (seen.insert(n.members()).second) atoms.push_back(std::move(n));
  }
  return join_closure(atoms);
}

std::vector<ElementSet> subgroups_of_order(const GroupPtr& g, std::size_t m) {
  std::vector<ElementSet> out;
  for (auto& h : all_subgroups(g))
    if (h.size() == m) out.push_back(std::move(h));
  return out;
}

}  // namespace loopforge
