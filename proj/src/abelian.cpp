#include "loopforge/abelian.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "loopforge/numeric.hpp"

namespace loopforge {

namespace {

// Basis of an abelian p-group: an element a of maximal order, then lifts of a
// basis of P/<a> to elements of the same order.
std::vector<std::pair<Elem, std::size_t>> p_basis(const GroupPtr& p) {
  if (p->order() == 1) return {};
  Elem a = 0;
  for (Elem x = 0; x < p->order(); ++x)
    if (p->element_order(x) > p->element_order(a)) a = x;
  const std::size_t na = p->element_order(a);
  Elem seed[] = {a};
  ElementSet cyc = generated_subgroup(p, seed);
  QuotientGroup quo = quotient(cyc);
  std::vector<std::pair<Elem, std::size_t>> out{{a, na}};
  for (auto [qb, e] : p_basis(quo.group)) {
    Elem b = quo.cosets[qb].front();
    Elem c = p->power(b, static_cast<long long>(e));
    std::size_t k = 0;
    while (p->power(a, static_cast<long long>(k)) != c) ++k;
    if (k % e != 0) fail(Errc::InternalTheoremViolation, "basis lift failed");
    Elem lifted = p->mul(b, p->power(a, -static_cast<long long>(k / e)));
    if (p->element_order(lifted) != e) fail(Errc::InternalTheoremViolation, "basis lift failed");
    out.push_back({lifted, e});
  }
  return out;
}

ElementSet as_subgroup(const ElementSet& s) {
  return s.is_subgroup() ? s : ElementSet::assume_subgroup(s.parent(), s.members());
}

void require_abelian_subgroup(const ElementSet& s) {
  if (!s.is_subgroup() && !is_closed_subgroup(s.group(), s.members()))
    fail(Errc::NotSubgroup, "not a subgroup");
  if (!is_abelian(s)) fail(Errc::NotAbelian, "group is not abelian");
}

void require_p_group(const ElementSet& s) {
  require_abelian_subgroup(s);
  if (s.size() > 1 && prime_of_power(s.size()) == 0)
    fail(Errc::NotPGroup, "order " + std::to_string(s.size()) + " is not a prime power");
}

void require_inside(const ElementSet& h, const ElementSet& g) {
  if (!h.subset_of(g) || (!h.is_subgroup() && !is_closed_subgroup(h.group(), h.members())))
    fail(Errc::NotSubgroup, "H is not a subgroup of G");
}

bool is_transversal_in(const ElementSet& g, const ElementSet& h, const std::vector<Elem>& t) {
  const auto& gr = g.group();
  if (t.size() * h.size() != g.size()) return false;
  std::vector<char> hit(gr.order(), 0);
  for (Elem x : t) {
    if (!g.contains(x) || hit[x]) return false;
    for (Elem y : h) hit[gr.mul(y, x)] = 1;
  }
  return true;
}

// Adds the smallest element of every coset of H in G not yet represented.
std::vector<Elem> complete_transversal(const ElementSet& g, const ElementSet& h,
                                       std::vector<Elem> t) {
  const auto& gr = g.group();
  std::vector<char> hit(gr.order(), 0);
  for (Elem x : t)
    for (Elem y : h) hit[gr.mul(y, x)] = 1;
  for (Elem x : g) {
    if (hit[x]) continue;
    t.push_back(x);
    for (Elem y : h) hit[gr.mul(y, x)] = 1;
  }
  std::sort(t.begin(), t.end());
  return t;
}

bool generates(const ElementSet& g, const std::vector<Elem>& t) {
  return generated_subgroup(g.parent(), t).size() == g.size();
}

std::size_t rank_of_generated(const GroupPtr& g, std::vector<Elem> s) {
  return abelian_rank(generated_subgroup(g, s));
}

struct Split {
  Elem u;
  ElementSet gt;  // complement of <u> in G
  ElementSet ht;  // gt ∩ H
};

// A cyclic direct factor of G inside H, obtained either directly from the
// basis or by replacing a_i with a_i a_j^-1 when H a_i = H a_j.
std::optional<Split> split_off_factor(const ElementSet& g, const ElementSet& h) {
  const auto& gr = g.group();
  auto basis = primary_decomposition(g);
  auto& gens = basis.factorGenerators;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < gens.size() && !found; ++i)
    if (h.contains(gens[i])) found = i;
  for (std::size_t i = 0; i < gens.size() && !found; ++i)
    for (std::size_t j = i + 1; j < gens.size() && !found; ++j) {
      if (!h.contains(gr.mul(gens[i], gr.inv(gens[j])))) continue;
      std::size_t big = basis.orders[i] >= basis.orders[j] ? i : j;
      std::size_t small = big == i ? j : i;
      gens[big] = gr.mul(gens[big], gr.inv(gens[small]));
      found = big;
    }
  if (!found) return std::nullopt;
  std::vector<Elem> rest;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (i != *found) rest.push_back(gens[i]);
  ElementSet gt = generated_subgroup(g.parent(), rest);
  ElementSet ht = intersection(gt, as_subgroup(h));
  return Split{gens[*found], gt, ht};
}

std::vector<Elem> gen_p(const ElementSet& g, const ElementSet& h) {
  const auto& gr = g.group();
  if (g.size() == h.size()) return {0};
  if (is_cyclic(g)) return generating_transversal_cyclic(g, h);
  if (auto split = split_off_factor(g, h)) {
    std::vector<Elem> tt = gen_p(split->gt, split->ht);
    // First t in T~ - {1} lying in <T~ - {1, t}>.
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < tt.size() && !pick; ++i) {
      if (tt[i] == 0) continue;
      std::vector<Elem> others;
      for (Elem x : tt)
        if (x != 0 && x != tt[i]) others.push_back(x);
      if (generated_subgroup(g.parent(), others).contains(tt[i])) pick = i;
    }
    if (!pick) fail(Errc::InternalTheoremViolation, "T~ - {1} is a minimal generating set");
    tt[*pick] = gr.mul(tt[*pick], split->u);
    std::sort(tt.begin(), tt.end());
    return tt;
  }
  // Every basis element lies in its own nontrivial coset of H.
  std::vector<Elem> t{0};
  for (Elem a : primary_decomposition(g).factorGenerators) t.push_back(a);
  return complete_transversal(g, h, std::move(t));
}

std::vector<Elem> min_p(const ElementSet& g, const ElementSet& h) {
  if (g.size() == h.size()) return {0};
  const std::size_t idx = g.size() / h.size();
  auto split = split_off_factor(g, h);
  if (!split) fail(Errc::InternalTheoremViolation, "basis elements in distinct cosets with |G:H| <= rk(G)");
  if (idx < abelian_rank(g)) return min_p(split->gt, split->ht);
  return gen_p(split->gt, split->ht);
}

}  // namespace

AbelianDecomposition primary_decomposition(const ElementSet& p) {
  require_p_group(p);
  SubgroupAsGroup local = as_group(as_subgroup(p));
  AbelianDecomposition d;
  for (auto [x, o] : p_basis(local.group)) {
    d.factorGenerators.push_back(local.toParent[x]);
    d.orders.push_back(o);
  }
  return d;
}

AbelianDecomposition invariant_factor_decomposition(const ElementSet& g) {
  require_abelian_subgroup(g);
  const auto& gr = g.group();
  std::vector<AbelianDecomposition> parts;
  std::size_t r = 0;
  for (std::size_t p : prime_divisors(g.size())) {
    parts.push_back(primary_decomposition(as_subgroup(p_part(as_subgroup(g), p))));
    r = std::max(r, parts.back().orders.size());
  }
  AbelianDecomposition d;
  for (std::size_t j = 0; j < r; ++j) {
    Elem x = 0;
    std::size_t m = 1;
    for (const auto& part : parts) {
      if (j >= part.orders.size()) continue;
      x = gr.mul(x, part.factorGenerators[j]);
      m *= part.orders[j];
    }
    d.factorGenerators.push_back(x);
    d.orders.push_back(m);
  }
  return d;
}

AbelianDecomposition invariant_factor_decomposition(const GroupPtr& g) {
  return invariant_factor_decomposition(ElementSet::whole(g));
}

std::size_t abelian_rank(const ElementSet& g) {
  require_abelian_subgroup(g);
  std::size_t r = 0;
  for (std::size_t p : prime_divisors(g.size()))
    r = std::max(r, primary_decomposition(as_subgroup(p_part(as_subgroup(g), p))).orders.size());
  return r;
}

std::size_t abelian_rank(const GroupPtr& g) { return abelian_rank(ElementSet::whole(g)); }

std::vector<Elem> generating_transversal_cyclic(const ElementSet& g, const ElementSet& h) {
  require_abelian_subgroup(g);
  require_inside(h, g);
  if (h.size() == g.size()) fail(Errc::NotProper, "H equals G");
  if (!is_cyclic(g)) fail(Errc::PreconditionFailed, "G is not cyclic");
  const auto& gr = g.group();
  Elem gen = 0;
  for (Elem x : g)
    if (gr.element_order(x) == g.size()) {
      gen = x;
      break;
    }
  std::vector<Elem> t;
  for (std::size_t k = 0; k < g.size() / h.size(); ++k)
    t.push_back(gr.power(gen, static_cast<long long>(k)));
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Elem> generating_transversal_p_group(const ElementSet& g, const ElementSet& h) {
  require_p_group(g);
  require_inside(h, g);
  const std::size_t idx = g.size() / h.size();
  const std::size_t rk = abelian_rank(g);
  if (idx <= rk)
    fail(Errc::IndexTooSmall,
         "|G:H| = " + std::to_string(idx) + " <= rk(G) = " + std::to_string(rk));
  std::vector<Elem> t = gen_p(as_subgroup(g), as_subgroup(h));
  if (!is_transversal_in(g, h, t) || !generates(g, t))
    fail(Errc::InternalTheoremViolation, "constructed set is not a generating transversal");
  return t;
}

std::vector<Elem> minimal_transversal_p_group(const ElementSet& g, const ElementSet& h) {
  require_p_group(g);
  require_inside(h, g);
  const std::size_t idx = g.size() / h.size();
  const std::size_t rk = abelian_rank(g);
  if (idx > rk)
    fail(Errc::IndexTooLarge,
         "|G:H| = " + std::to_string(idx) + " > rk(G) = " + std::to_string(rk));
  std::vector<Elem> t = min_p(as_subgroup(g), as_subgroup(h));
  std::vector<Elem> rest(t.begin() + 1, t.end());
  if (!is_transversal_in(g, h, t) || rank_of_generated(g.parent(), rest) != rest.size())
    fail(Errc::InternalTheoremViolation, "T - {1} is not a minimal generating set of <T>");
  return t;
}

bool sylow_index_condition(const ElementSet& g, const ElementSet& h) {
  std::size_t best = 0;
  for (std::size_t p : prime_divisors(g.size()))
    best = std::max(best, p_part_of(g.size(), p) / p_part_of(h.size(), p));
  return best > abelian_rank(g);
}

std::vector<Elem> generating_transversal_abelian(const ElementSet& gIn, const ElementSet& hIn) {
  require_abelian_subgroup(gIn);
  require_inside(hIn, gIn);
  ElementSet g = as_subgroup(gIn), h = as_subgroup(hIn);
  const auto& gr = g.group();
  const std::size_t rk = abelian_rank(g);
  auto primes = prime_divisors(g.size());
  std::size_t best = 0, p1 = 0;
  for (std::size_t p : primes) {
    std::size_t idx = p_part_of(g.size(), p) / p_part_of(h.size(), p);
    if (idx > best) best = idx, p1 = p;
  }
  if (best <= rk)
    fail(Errc::ConditionFails, "max |G_p:H_p| = " + std::to_string(best) +
                                   " <= rk(G) = " + std::to_string(rk));
  ElementSet g1 = as_subgroup(p_part(g, p1));
  ElementSet h1 = as_subgroup(p_part(h, p1));
  std::vector<Elem> t1 = gen_p(g1, h1);
  std::vector<Elem> others;
  for (std::size_t p : primes)
    if (p != p1)
      for (Elem x : p_part(g, p)) others.push_back(x);
  ElementSet gt = generated_subgroup(g.parent(), others);
  std::vector<Elem> s{0};
  for (Elem x : invariant_factor_decomposition(gt).factorGenerators) s.push_back(x);
  if (s.size() > t1.size()) fail(Errc::InternalTheoremViolation, "rk(G~) >= |G_1:H_1|");
  std::vector<Elem> r;
  for (std::size_t i = 0; i < t1.size(); ++i) r.push_back(gr.mul(t1[i], i < s.size() ? s[i] : 0));
  ElementSet k = join(h1, gt);
  std::vector<Elem> v = complete_transversal(k, h, {0});
  std::vector<Elem> t;
  for (Elem a : v)
    for (Elem b : r) t.push_back(gr.mul(a, b));
  std::sort(t.begin(), t.end());
  if (!is_transversal_in(g, h, t) || !generates(g, t))
    fail(Errc::InternalTheoremViolation, "VR is not a generating transversal");
  return t;
}

QuotientLift lift_generating_transversal_from_quotient(const ElementSet& h, const ElementSet& q) {
  const GroupPtr& gp = h.parent();
  const auto& g = *gp;
  if (!is_closed_subgroup(g, h.members())) fail(Errc::PreconditionFailed, "H is not a subgroup");
  if (!is_closed_subgroup(g, q.members())) fail(Errc::PreconditionFailed, "Q is not a subgroup");
  ElementSet hs = as_subgroup(h), qs = as_subgroup(q);
  if (!is_normal(qs)) fail(Errc::PreconditionFailed, "Q is not normal in G");
  QuotientGroup quo = quotient(qs);
  if (!quo.group->is_abelian()) fail(Errc::PreconditionFailed, "G/Q is not abelian");
  if (!intersection(hs, qs).is_trivial()) fail(Errc::PreconditionFailed, "H ∩ Q is not trivial");
  std::vector<Elem> hbar;
  for (Elem x : hs) hbar.push_back(quo.projection(x));
  ElementSet whole = ElementSet::whole(quo.group);
  ElementSet hq = ElementSet::assume_subgroup(quo.group, ElementSet(quo.group, hbar).members());
  if (!sylow_index_condition(whole, hq))
    fail(Errc::PreconditionFailed, "max |O_p(G/Q):O_p(HQ/Q)| <= rk(G/Q)");
  std::vector<Elem> tq = generating_transversal_abelian(whole, hq);
  std::vector<Elem> t;
  for (Elem c : tq) {
    Elem rep = quo.cosets[c].front();
    for (Elem x : qs) t.push_back(g.mul(x, rep));
  }
  QuotientLift out{validate_folder(hs, std::move(t))};
  if (!out.folder.is_rcc() || !out.folder.is_generating())
    fail(Errc::InternalTheoremViolation, "lifted transversal is not G-invariant and generating");
  out.centralizerTrivial = intersection(centralizer(qs), hs).is_trivial();
  if (out.centralizerTrivial) {
    if (!out.folder.is_faithful())
      fail(Errc::InternalTheoremViolation, "C_H(Q) = 1 but the folder is not faithful");
    out.roundtrip = envelope_roundtrip_check(out.folder);
  }
  return out;
}

QuotientLift lift_generating_transversal_from_derived(const ElementSet& h) {
  return lift_generating_transversal_from_quotient(h, derived_subgroup(h.parent()));
}

}  // namespace loopforge
