#include "loopforge/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loopforge/lattice.hpp"

namespace loopforge {

bool is_malnormal(const ElementSet& c) {
  const auto& g = c.group();
  for (const auto& block : right_cosets(c)) {
    const Elem x = block.front();
    if (c.contains(x)) continue;
    for (Elem y : c)
      if (y != 0 && c.contains(g.conj(y, x))) return false;
  }
  return true;
}

ElementSet frobenius_kernel(const ElementSet& c) {
  const auto& g = c.group();
  std::vector<char> covered(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : c)
      if (y != 0) covered[g.conj(y, x)] = 1;
  std::vector<Elem> n;
  for (Elem x = 0; x < g.order(); ++x)
    if (!covered[x]) n.push_back(x);
  return ElementSet(c.parent(), std::move(n));
}

FrobeniusStructure make_frobenius_structure(const ElementSet& kernel, const ElementSet& complement) {
  const GroupPtr& g = kernel.parent();
  if (!is_closed_subgroup(*g, kernel.members()) || !is_closed_subgroup(*g, complement.members()))
    fail(Errc::PreconditionFailed, "kernel and complement must be subgroups");
  ElementSet n = ElementSet::assume_subgroup(g, kernel.members());
  ElementSet c = ElementSet::assume_subgroup(g, complement.members());
  if (c.size() <= 1 || c.size() >= g->order())
    fail(Errc::PreconditionFailed, "complement must be proper and nontrivial");
  if (!is_normal(n)) fail(Errc::PreconditionFailed, "kernel is not normal");
  if (!intersection(n, c).is_trivial() || n.size() * c.size() != g->order())
    fail(Errc::PreconditionFailed, "G is not the semidirect product NC");
  if (!is_malnormal(c)) fail(Errc::PreconditionFailed, "complement is not malnormal");
  if (frobenius_kernel(c).members() != n.members())
    fail(Errc::PreconditionFailed, "kernel differs from G - ∪(C-1)^g");
  return FrobeniusStructure{g, std::move(n), std::move(c), is_abelian(c)};
}

namespace {

// Subgroups generated by at most two elements, restricted to order m.
std::vector<ElementSet> two_generated_of_order(const GroupPtr& g, std::size_t m) {
  std::vector<Elem> cands;
  for (Elem x = 0; x < g->order(); ++x)
    if (m % g->element_order(x) == 0) cands.push_back(x);
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> out;
  std::vector<char> in(g->order());
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i; j < cands.size(); ++j) {
      // Bounded closure that aborts once the subgroup exceeds order m.
      std::fill(in.begin(), in.end(), 0);
      std::vector<Elem> members{0};
      in[0] = 1;
      const Elem gens[] = {cands[i], cands[j]};
      bool tooBig = false;
      for (std::size_t k = 0; k < members.size() && !tooBig; ++k)
        for (Elem s : gens) {
          Elem y = g->mul(members[k], s);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
            if (members.size() > m) {
              tooBig = true;
              break;
            }
          }
        }
      if (tooBig || members.size() != m) continue;
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second) out.push_back(ElementSet::assume_subgroup(g, members));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<FrobeniusStructure> detect_frobenius(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<ElementSet> lattice;
  if (n <= 64) lattice = all_subgroups(g);
  for (std::size_t m = 2; m < n; ++m) {
    if (n % m != 0 || (n / m - 1) % m != 0) continue;
    std::vector<ElementSet> cands;
    if (n <= 64) {
      for (const auto& s : lattice)
        if (s.size() == m) cands.push_back(s);
    } else {
      cands = two_generated_of_order(g, m);
    }
    for (const auto& c : cands) {
      if (!is_malnormal(c)) continue;
      ElementSet k = frobenius_kernel(c);
      if (k.size() * c.size() != n || !is_closed_subgroup(*g, k.members())) continue;
      return make_frobenius_structure(k, c);
    }
  }
  return std::nullopt;
}

IsaacsConditions isaacs_criteria(const ElementSet& nIn, const ElementSet& cIn) {
  const GroupPtr& gp = nIn.parent();
  const auto& g = *gp;
  if (!is_closed_subgroup(g, nIn.members()) || !is_closed_subgroup(g, cIn.members()))
    fail(Errc::PreconditionFailed, "N and C must be subgroups");
  ElementSet n = ElementSet::assume_subgroup(gp, nIn.members());
  ElementSet c = ElementSet::assume_subgroup(gp, cIn.members());
  if (!is_normal(n)) fail(Errc::PreconditionFailed, "N is not normal");
  if (!intersection(n, c).is_trivial() || n.size() * c.size() != g.order())
    fail(Errc::PreconditionFailed, "G = NC with N ∩ C = 1 fails");
  if (c.size() <= 1 || c.size() >= g.order())
    fail(Errc::PreconditionFailed, "C must satisfy 1 < C < G");

  IsaacsConditions r;
  r.a = r.b = true;
  for (Elem x : n) {
    if (x == 0) continue;
    Elem one[] = {x};
    ElementSet cg = centralizer(gp, one);
    if (!cg.subset_of(n)) r.a = false;
    if (!intersection(cg, c).is_trivial()) r.b = false;
  }
  r.c = true;
  for (Elem x : c) {
    if (x == 0) continue;
    Elem one[] = {x};
    if (!centralizer(gp, one).subset_of(c)) r.c = false;
  }
  auto classOf = conjugacy_class_index(gp);
  std::vector<char> classMeetsC(g.order(), 0);
  for (Elem x : c) classMeetsC[classOf[x]] = 1;
  r.d = true;
  for (Elem x = 0; x < g.order(); ++x)
    if (!n.contains(x) && !classMeetsC[classOf[x]]) r.d = false;
  r.e = true;
  for (Elem x : c) {
    if (x == 0) continue;
    for (Elem y : n)
      if (classOf[g.mul(y, x)] != classOf[x]) r.e = false;
  }
  r.f = is_malnormal(c);
  return r;
}

KernelDerivedCheck kernel_derived_check(const FrobeniusStructure& fs) {
  KernelDerivedCheck r;
  r.complementAbelian = is_abelian(fs.complement);
  r.kernelIsDerived = derived_subgroup(fs.group).members() == fs.kernel.members();
  return r;
}

bool classes_outside_kernel_are_cosets(const FrobeniusStructure& fs) {
  const auto& g = *fs.group;
  std::set<std::vector<Elem>> classes, cosets;
  for (const auto& cls : conjugacy_classes(fs.group))
    if (!fs.kernel.contains(cls.members().front())) classes.insert(cls.members());
  for (Elem c : fs.complement) {
    if (c == 0) continue;
    std::vector<Elem> coset;
    for (Elem x : fs.kernel) coset.push_back(g.mul(x, c));
    std::sort(coset.begin(), coset.end());
    cosets.insert(coset);
  }
  return classes == cosets;
}

FrobeniusTransversalShape transversal_shape(const FrobeniusStructure& fs, const ElementSet& h,
                                            std::span<const Elem> t) {
  const auto& g = *fs.group;
  if (!h.subset_of(fs.complement)) fail(Errc::PreconditionFailed, "H is not inside C");
  if (!fs.complementAbelian) fail(Errc::PreconditionFailed, "complement is not abelian");
  ElementSet ts(fs.group, std::vector<Elem>(t.begin(), t.end()));
  if (!ts.contains(0)) fail(Errc::PreconditionFailed, "1 is not in T");
  // N ⊆ T follows from 1 ∈ T and T being a union of classes that meets the
  // coset H once; it is asserted here rather than assumed.
  if (!fs.kernel.subset_of(ts)) fail(Errc::ShapeViolation, "N is not contained in T");
  FrobeniusTransversalShape shape;
  std::vector<char> seen(g.order(), 0);
  for (Elem x : ts) {
    if (fs.kernel.contains(x) || seen[x]) continue;
    Elem rep = x;
    for (Elem y : fs.kernel) {
      Elem z = g.mul(y, x);
      if (!ts.contains(z)) fail(Errc::ShapeViolation, "T - N is not a union of N-cosets");
      seen[z] = 1;
      rep = std::min(rep, z);
    }
    shape.tauReps.push_back(rep);
  }
  std::sort(shape.tauReps.begin(), shape.tauReps.end());
  shape.n = fs.complement.size() / h.size() - 1;
  if (shape.tauReps.size() != shape.n)
    fail(Errc::ShapeViolation, "expected " + std::to_string(shape.n) + " N-cosets outside N, got " +
                                   std::to_string(shape.tauReps.size()));
  ElementSet hn = ElementSet::assume_subgroup(fs.group, product_set(h, fs.kernel).members());
  std::vector<Elem> reps{0};
  reps.insert(reps.end(), shape.tauReps.begin(), shape.tauReps.end());
  if (!is_right_transversal(hn, reps))
    fail(Errc::ShapeViolation, "{1, τ_i} is not a transversal of HN");
  return shape;
}

std::vector<LoopFolder> lift_frobenius_transversals(const FrobeniusStructure& fs,
                                                    const ElementSet& h) {
  if (!fs.complementAbelian) fail(Errc::PreconditionFailed, "complement is not abelian");
  if (!h.subset_of(fs.complement)) fail(Errc::PreconditionFailed, "H is not inside C");
  const auto& g = *fs.group;
  ElementSet hs = ElementSet::assume_subgroup(fs.group, h.members());
  ElementSet hn = ElementSet::assume_subgroup(fs.group, product_set(hs, fs.kernel).members());
  auto nIndex = right_coset_index(fs.kernel);
  // For each nontrivial HN-coset, the N-cosets it contains, by smallest element.
  std::vector<std::vector<Elem>> choices;
  for (const auto& block : right_cosets(hn)) {
    if (block.front() == 0) continue;
    std::map<std::size_t, Elem> byN;
    for (Elem x : block) {
      auto [it, inserted] = byN.emplace(nIndex[x], x);
      if (!inserted) it->second = std::min(it->second, x);
    }
    std::vector<Elem> reps;
    for (const auto& [k, x] : byN) reps.push_back(x);
    std::sort(reps.begin(), reps.end());
    choices.push_back(std::move(reps));
  }
  std::size_t total = 1;
  for (const auto& c : choices) {
    total *= c.size();
    if (total > 100000) fail(Errc::OrderBoundExceeded, "too many lifted transversals");
  }
  std::vector<LoopFolder> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Elem> t(fs.kernel.begin(), fs.kernel.end());
    for (std::size_t i = 0; i < choices.size(); ++i)
      for (Elem y : fs.kernel) t.push_back(g.mul(y, choices[i][pick[i]]));
    out.push_back(validate_folder(hs, std::move(t)));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const LoopFolder& a, const LoopFolder& b) {
    return a.transversal() < b.transversal();
  });
  return out;
}

std::vector<FrobeniusEnvelope> frobenius_rcc_envelopes(const FrobeniusStructure& fs,
                                                       const ElementSet& h) {
  std::vector<FrobeniusEnvelope> out;
  for (auto& f : lift_frobenius_transversals(fs, h)) {
    if (!f.is_generating()) continue;
    bool ok = f.is_faithful() && envelope_roundtrip_check(f);
    out.push_back(FrobeniusEnvelope{std::move(f), ok});
  }
  return out;
}

}  // namespace loopforge
