#include <algorithm>
#include <set>

#include "loopforge/group.hpp"
#include "loopforge/lattice.hpp"
#include "loopforge/numeric.hpp"

namespace loopforge {

namespace {

// For abelian G: the p-rank of O_p(G) is log_p |{x : x^p = 1}|.
std::size_t abelian_rank_by_socle(const GroupTable& g) {
  std::size_t best = 0;
  for (std::size_t p : prime_divisors(g.order())) {
    std::size_t count = 0;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.power(x, static_cast<long long>(p)) == 0) ++count;
    std::size_t d = 0;
    while (count > 1) {
      count /= p;
      ++d;
    }
    best = std::max(best, d);
  }
  return best;
}

}  // namespace

std::size_t rank(const GroupPtr& g) {
  if (g->order() == 1) return 0;
  if (g->is_abelian()) return abelian_rank_by_socle(*g);
  return brute_force_rank(g);
}

// Searches subgroups generated by k elements level by level. At each level one
// representative per conjugacy class is kept, and extensions only try one
// element per right coset of the current subgroup, since ⟨S, x⟩ = ⟨S, sx⟩.
std::size_t brute_force_rank(const GroupPtr& g) {
  const std::size_t n = g->order();
  if (n == 1) return 0;
  auto canonical = [&](const ElementSet& s) {
    std::vector<Elem> best = s.members();
    for (Elem x = 1; x < n; ++x) {
      ElementSet c = conjugate(s, x);
      if (c.members() < best) best = c.members();
    }
    return best;
  };
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> level;
  for (auto& c : cyclic_subgroups(g)) {
    if (c.size() == n) return 1;
    if (seen.insert(canonical(c)).second) level.push_back(c);
  }
  for (std::size_t k = 2;; ++k) {
    std::vector<ElementSet> next;
    std::set<std::vector<Elem>> nextSeen;
    for (const auto& s : level) {
      for (const auto& block : right_cosets(s)) {
        if (block.front() == 0) continue;
        ElementSet j = join(s, ElementSet(g, {block.front()}));
        if (j.size() == n) return k;
        if (nextSeen.insert(canonical(j)).second) next.push_back(std::move(j));
      }
    }
    level = std::move(next);
  }
}

ElementSet p_part(const ElementSet& h, std::size_t p) {
  std::vector<Elem> out;
  for (Elem x : h)
    if (is_power_of(h.group().element_order(x), p)) out.push_back(x);
  ElementSet s(h.parent(), std::move(out));
  if (h.is_subgroup() && is_closed_subgroup(h.group(), s.members()))
    return ElementSet::assume_subgroup(h.parent(), s.members());
  return s;
}

ElementSet sylow_subgroup(const GroupPtr& g, std::size_t p) {
  const std::size_t target = p_part_of(g->order(), p);
  if (target == 1) return ElementSet::trivial(g);
  if (g->is_abelian()) return p_part(ElementSet::whole(g), p);
  ElementSet P = ElementSet::trivial(g);
  while (P.size() < target) {
    ElementSet N = normalizer(P);
    // x in N(P) - P whose image in N(P)/P has p-power order.
    bool grown = false;
    for (Elem x : N) {
      if (P.contains(x)) continue;
      std::size_t k = 1;
      Elem y = x;
      while (!P.contains(y)) {
        y = g->mul(y, x);
        ++k;
      }
      if (is_power_of(k, p)) {
        P = join(P, ElementSet(g, {x}));
        grown = true;
        break;
      }
    }
    if (!grown) fail(Errc::InternalTheoremViolation, "Sylow growth stalled");
  }
  return P;
}

}  // namespace loopforge
