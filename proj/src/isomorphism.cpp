#include <algorithm>
#include <deque>

#include "loopforge/group.hpp"

namespace loopforge {

GroupFingerprint fingerprint(const GroupPtr& g) {
  GroupFingerprint f;
  f.order = g->order();
  auto classes = conjugacy_classes(g);
  for (const auto& cls : classes)
    for (Elem x : cls) f.orderAndClassSize.emplace_back(g->element_order(x), cls.size());
  std::sort(f.orderAndClassSize.begin(), f.orderAndClassSize.end());
  f.centerOrder = center(g).size();
  f.derivedOrder = derived_subgroup(g).size();
  return f;
}

std::vector<Elem> greedy_generators(const ElementSet& h) {
  const auto& parent = h.parent();
  std::vector<Elem> gens;
  ElementSet current = ElementSet::trivial(parent);
  while (current.size() < h.size()) {
    Elem best = 0;
    std::size_t bestSize = 0;
    for (Elem x : h) {
      if (current.contains(x)) continue;
      std::vector<Elem> seed = gens;
      seed.push_back(x);
      std::size_t s = generated_subgroup(parent, seed).size();
      if (s > bestSize) {
        bestSize = s;
        best = x;
      }
      if (s == h.size()) break;
    }
    gens.push_back(best);
    current = generated_subgroup(parent, gens);
  }
  return gens;
}

namespace {

class HomSearch {
 public:
  HomSearch(const GroupTable& s, const GroupTable& t, std::vector<Elem> gens,
            std::vector<std::vector<Elem>> candidates)
      : s_(s), t_(t), gens_(std::move(gens)), cand_(std::move(candidates)),
        images_(gens_.size()) {}

  std::optional<std::vector<Elem>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  // Extends the map over the subgroup generated by the first k generators
  // along its Cayley graph; fails on inconsistency or non-injectivity.
  bool extend(std::size_t k) {
    map_.assign(s_.order(), kUnset);
    std::vector<char> used(t_.order(), 0);
    map_[0] = 0;
    used[0] = 1;
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < k; ++j) {
        Elem y = s_.mul(x, gens_[j]);
        Elem img = t_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used[img]) return false;
          used[img] = 1;
          map_[y] = img;
          queue.push_back(y);
        } else if (map_[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == gens_.size()) return extend(k);
    for (Elem c : cand_[k]) {
      images_[k] = c;
      if (extend(k + 1)) {
        if (k + 1 == gens_.size()) return true;
        if (search(k + 1)) return true;
      }
    }
    return false;
  }

  static constexpr Elem kUnset = static_cast<Elem>(-1);
  const GroupTable& s_;
  const GroupTable& t_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
};

}  // namespace

std::optional<GroupHomomorphism> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                                  std::size_t maxOrder) {
  if (g1->order() > maxOrder || g2->order() > maxOrder)
    fail(Errc::OrderBoundExceeded, "isomorphism search is limited to order " +
                                       std::to_string(maxOrder));
  if (g1->order() != g2->order()) return std::nullopt;
  if (g1->is_abelian() != g2->is_abelian()) return std::nullopt;
  if (!(fingerprint(g1) == fingerprint(g2))) return std::nullopt;
  auto gens = greedy_generators(ElementSet::whole(g1));
  auto cls1 = conjugacy_classes(g1);
  auto cls2 = conjugacy_classes(g2);
  std::vector<std::size_t> size1(g1->order()), size2(g2->order());
  for (const auto& c : cls1)
    for (Elem x : c) size1[x] = c.size();
  for (const auto& c : cls2)
    for (Elem x : c) size2[x] = c.size();
  std::vector<std::vector<Elem>> candidates;
  for (Elem a : gens) {
    std::vector<Elem> cand;
    for (Elem b = 0; b < g2->order(); ++b)
      if (g2->element_order(b) == g1->element_order(a) && size2[b] == size1[a]) cand.push_back(b);
    candidates.push_back(std::move(cand));
  }
  HomSearch search(*g1, *g2, gens, std::move(candidates));
  auto map = search.run();
  if (!map) return std::nullopt;
  return GroupHomomorphism{g1, g2, std::move(*map)};
}

std::optional<GroupHomomorphism> find_monomorphism(const GroupPtr& source, const GroupPtr& target,
                                                   std::size_t maxOrder) {
  if (source->order() > maxOrder || target->order() > maxOrder)
    fail(Errc::OrderBoundExceeded, "monomorphism search is limited to order " +
                                       std::to_string(maxOrder));
  if (target->order() % source->order() != 0) return std::nullopt;
  auto gens = greedy_generators(ElementSet::whole(source));
  std::vector<std::vector<Elem>> candidates;
  for (Elem a : gens) {
    std::vector<Elem> cand;
    for (Elem b = 0; b < target->order(); ++b)
      if (target->element_order(b) == source->element_order(a)) cand.push_back(b);
    candidates.push_back(std::move(cand));
  }
  HomSearch search(*source, *target, gens, std::move(candidates));
  auto map = search.run();
  if (!map) return std::nullopt;
  return GroupHomomorphism{source, target, std::move(*map)};
}

bool are_isomorphic(const GroupPtr& g1, const GroupPtr& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace loopforge
