#include "loopforge/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "loopforge/lattice.hpp"
#include "loopforge/numeric.hpp"

namespace loopforge {

namespace {

// T G' = T
bool is_union_of_cosets(const ElementSet& n, const std::vector<Elem>& t) {
  const auto& g = n.group();
  for (Elem x : t)
    for (Elem y : n)
      if (!std::binary_search(t.begin(), t.end(), g.mul(x, y))) return false;
  return true;
}

}  // namespace

ConjectureReport verify_conjecture(const GroupPtr& g, const std::string& name,
                                   const ConjectureOptions& options) {
  ConjectureReport r;
  r.groupName = name;
  r.order = g->order();
  ElementSet derived = derived_subgroup(g);
  for (const auto& h : abelian_subgroups_up_to_conjugacy(g)) {
    ++r.abelianSubgroupsTested;
    SearchOptions so;
    so.nodeBudget = options.nodeBudget;
    so.limit = options.fullEnumeration ? 0 : 1;
    TransversalSearch s = enumerate_invariant_transversals(h, so);
    if (!s.complete) r.skippedIncomplete.push_back({h.members(), options.nodeBudget});
    if (s.count == 0) continue;
    r.foldersFound += options.fullEnumeration ? s.count : 1;
    for (const auto& t : s.transversals) {
      ++r.transversalsExamined;
      r.derivedFormTransversals += is_union_of_cosets(derived, t);
    }
    ElementSet meet = intersection(derived, h);
    if (meet.is_trivial()) continue;
    Counterexample c;
    c.h = h.members();
    c.t = s.transversals.front();
    c.witness = meet.members()[1];
    r.counterexamples.push_back(std::move(c));
  }
  return r;
}

std::size_t ConjectureSweep::counterexampleCount() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.counterexamples.size();
  return n;
}

std::size_t abelian_group_count(std::size_t n) {
  // Partition numbers up to exponent 10.
  static const std::size_t partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  std::size_t count = 1;
  for (std::size_t p : prime_divisors(n)) {
    std::size_t e = 0;
    for (std::size_t m = n; m % p == 0; m /= p) ++e;
    if (e > 10) fail(Errc::InvalidArgument, "exponent too large");
    count *= partitions[e];
  }
  return count;
}

ConjectureSweep conjecture_sweep(std::size_t maxOrderExclusive, const ConjectureOptions& options) {
  if (maxOrderExclusive < 2) fail(Errc::InvalidArgument, "catalog bound must be at least 2");
  CatalogOptions co;
  co.maxOrder = maxOrderExclusive - 1;
  co.nonAbelianOnly = true;
  auto entries = small_group_catalog(co);
  ConjectureSweep sweep;
  sweep.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      sweep.reports[i] = verify_conjecture(entries[i].group, entries[i].name, options);
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t n = 1; n < maxOrderExclusive; ++n) {
    OrderCoverage c;
    c.order = n;
    c.known = known_group_count(n) - abelian_group_count(n);
    for (const auto& e : entries)
      if (e.group->order() == n) ++c.catalogued;
    if (c.known > 0 || c.catalogued > 0) sweep.coverage.push_back(c);
  }
  return sweep;
}

TransferContext::TransferContext(const ElementSet& h, std::vector<Elem> t) : t_(std::move(t)) {
  const auto& g = h.group();
  if (!h.is_subgroup() && !is_closed_subgroup(g, h.members()))
    fail(Errc::NotSubgroup, "H is not a subgroup");
  h_ = ElementSet::assume_subgroup(h.parent(), h.members());
  if (!is_abelian(h_)) fail(Errc::NotAbelian, "transfer needs an abelian H");
  if (!is_right_transversal(h_, t_)) fail(Errc::NotTransversal, "T is not a transversal of H\\G");
  auto cosetOf = right_coset_index(h_);
  std::vector<Elem> repOfCoset(index_of(h_));
  for (Elem x : t_) repOfCoset[cosetOf[x]] = x;
  repOf_.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) repOf_[x] = repOfCoset[cosetOf[x]];
}

Elem TransferContext::lambda(std::size_t i, Elem x) const {
  const auto& g = h_.group();
  Elem y = g.mul(t_[i], x);
  return g.mul(y, g.inv(repOf_[y]));
}

Elem TransferContext::evaluate(Elem x) const {
  const auto& g = h_.group();
  Elem acc = 0;
  for (std::size_t i = 0; i < t_.size(); ++i) acc = g.mul(acc, lambda(i, x));
  return acc;
}

bool TransferContext::is_homomorphism() const {
  const auto& g = h_.group();
  std::vector<Elem> tau(g.order());
  for (Elem x = 0; x < g.order(); ++x) tau[x] = evaluate(x);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (tau[g.mul(x, y)] != g.mul(tau[x], tau[y])) return false;
  return true;
}

HallTransferResult hall_transfer_check(const ElementSet& h, const SearchOptions& options) {
  const auto& g = h.group();
  if (!h.is_subgroup() && !is_closed_subgroup(g, h.members()))
    fail(Errc::NotSubgroup, "H is not a subgroup");
  ElementSet hs = ElementSet::assume_subgroup(h.parent(), h.members());
  if (!is_abelian(hs)) fail(Errc::NotAbelian, "H is not abelian");
  const std::size_t idx = index_of(hs);
  if (std::gcd(hs.size(), idx) != 1)
    fail(Errc::NotHall, "gcd(|H|, |G:H|) = " + std::to_string(std::gcd(hs.size(), idx)));
  FelschReport fr = felsch_criteria(hs, hs, options);
  if (!fr.witness) fail(Errc::NoInvariantSystem, "no H-invariant transversal of H\\G");
  HallTransferResult r;
  r.transversal = *fr.witness;
  TransferContext ctx(hs, r.transversal);
  std::vector<char> hit(g.order(), 0);
  r.restrictionIsPower = true;
  std::size_t distinct = 0;
  for (Elem x : hs) {
    Elem v = ctx.evaluate(x);
    if (v != g.power(x, static_cast<long long>(idx))) r.restrictionIsPower = false;
    if (hs.contains(v) && !hit[v]) {
      hit[v] = 1;
      ++distinct;
    }
  }
  r.restrictionBijective = distinct == hs.size();
  r.derivedMeetsTrivially = intersection(derived_subgroup(h.parent()), hs).is_trivial();
  return r;
}

ElementSet burnside_complement_check(const ElementSet& h) {
  const GroupPtr& gp = h.parent();
  const auto& g = *gp;
  if (!h.is_subgroup() && !is_closed_subgroup(g, h.members()))
    fail(Errc::PreconditionFailed, "H is not a subgroup");
  ElementSet hs = ElementSet::assume_subgroup(gp, h.members());
  if (hs.size() == 1) return ElementSet::whole(gp);
  const std::size_t p = prime_of_power(hs.size());
  if (p == 0 || p_part_of(g.order(), p) != hs.size())
    fail(Errc::PreconditionFailed, "H is not a Sylow subgroup");
  if (!hs.subset_of(centralizer(normalizer(hs))))
    fail(Errc::PreconditionFailed, "H is not contained in Z(N_G(H))");
  GroupPtr hg = as_group(hs).group;
  for (const auto& n : normal_subgroups(gp)) {
    if (n.size() * hs.size() != g.order() || !intersection(n, hs).is_trivial()) continue;
    if (are_isomorphic(quotient(n).group, hg)) return n;
  }
  fail(Errc::InternalTheoremViolation, "no normal complement found");
}

P3Report p3_checks(const GroupPtr& g) {
  const std::size_t n = g->order();
  const std::size_t p = prime_of_power(n);
  if (p == 0 || p * p * p != n) fail(Errc::PreconditionFailed, "|G| is not a prime cubed");
  if (g->is_abelian()) fail(Errc::PreconditionFailed, "G is abelian");
  P3Report r;
  r.p = p;
  ElementSet z = center(g);
  ElementSet d = derived_subgroup(g);
  r.derivedEqualsCenter = z == d;
  r.centerHasOrderP = z.size() == p;
  for (const auto& h : all_subgroups(g)) {
    if (!is_abelian(h)) continue;
    ++r.subgroupsTested;
    auto s = enumerate_invariant_transversals(h);
    for (const auto& t : s.transversals) {
      ++r.transversalsChecked;
      ElementSet ts(g, t);
      if (!d.subset_of(ts)) r.derivedInEveryTransversal = false;
    }
    if (!s.transversals.empty() && !intersection(d, h).is_trivial()) r.derivedMeetsTrivially = false;
  }
  return r;
}

std::optional<GroupHomomorphism> embed_in_affine(const GroupPtr& g, std::size_t p) {
  if (!is_prime(p)) fail(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if ((p * (p - 1)) % g->order() != 0) return std::nullopt;
  return find_monomorphism(g, affine_group(p).group);
}

std::string pq_verdict_name(PqVerdict v) {
  switch (v) {
    case PqVerdict::DirectProductAffine:
      return "direct-product-affine";
    case PqVerdict::AffineSubgroup:
      return "affine-subgroup";
    case PqVerdict::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

namespace {

bool normal_in(const ElementSet& sub, const ElementSet& in) {
  const auto& g = sub.group();
  for (Elem k : in)
    for (Elem x : sub)
      if (!sub.contains(g.conj(x, k))) return false;
  return true;
}

PqAnalysis analyze(const LoopFolder& f, const ElementSet& k, std::size_t p, std::size_t q) {
  const GroupPtr& gp = f.group();
  const auto& g = *gp;
  const ElementSet& h = f.subgroup();
  PqAnalysis a;
  a.k = k.members();
  for (Elem x : f.transversal())
    if (k.contains(x)) a.t1.push_back(x);
  std::sort(a.t1.begin(), a.t1.end());
  ElementSet k1 = generated_subgroup(gp, a.t1);
  ElementSet h1 = intersection(h, k1);
  a.k1 = k1.members();
  a.h1 = h1.members();
  ElementSet c = h;
  for (Elem x : k) c = intersection(c, conjugate(h, x));
  a.c = c.members();

  bool t1Transversal = a.t1.size() == p && a.t1.size() * h1.size() == k1.size();
  if (t1Transversal) {
    std::vector<char> hit(g.order(), 0);
    for (Elem t : a.t1) {
      if (hit[t]) t1Transversal = false;
      for (Elem y : h1) hit[g.mul(y, t)] = 1;
    }
  }
  a.lemmaFolder = t1Transversal && is_invariant_under(k, a.t1);
  a.lemmaK1Abelian = is_abelian(k1);
  a.lemmaK1NormalInK = normal_in(k1, k);
  a.lemmaKEqualsHK1 = product_set(h, k1) == k;
  a.lemmaH1NormalInK = normal_in(h1, k);

  a.kNormal = is_normal(k);
  ElementSet ck1 = centralizer(k1);
  a.k1ProperInCentralizer = ck1.size() > k1.size() && k1.subset_of(ck1);
  const bool k1SelfCentralizing = ck1 == k1;
  if (a.kNormal && h1.is_trivial() && c.is_trivial() && a.k1ProperInCentralizer) {
    a.verdict = PqVerdict::DirectProductAffine;
    GroupPtr kg = as_group(k).group;
    a.conclusionConfirmed = are_isomorphic(direct_product(kg, cyclic(q)).group, gp) &&
                            embed_in_affine(kg, p).has_value();
  } else if (a.kNormal && h1.is_trivial() && k1SelfCentralizing) {
    a.verdict = PqVerdict::AffineSubgroup;
    a.conclusionConfirmed = embed_in_affine(gp, p).has_value();
  }
  return a;
}

}  // namespace

PqReport pq_structure_analysis(const LoopFolder& folder, std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    fail(Errc::PreconditionFailed, "p and q must be distinct primes");
  if (folder.order() != p * q) fail(Errc::PreconditionFailed, "folder order is not pq");
  if (!folder.is_rcc() || !folder.is_faithful() || !folder.is_generating())
    fail(Errc::PreconditionFailed, "folder is not a faithful generating RCC folder");
  const GroupPtr& gp = folder.group();
  const ElementSet& h = folder.subgroup();
  std::vector<ElementSet> byIndexQ, byIndexP;
  for (const auto& k : all_subgroups(gp)) {
    if (k.size() == h.size() || k.size() == gp->order() || !h.subset_of(k)) continue;
    if (gp->order() / k.size() == q) byIndexQ.push_back(k);
    if (gp->order() / k.size() == p) byIndexP.push_back(k);
  }
  PqReport r;
  r.p = p;
  r.q = q;
  if (byIndexQ.empty()) {
    if (byIndexP.empty()) fail(Errc::NoIntermediateSubgroup, "H is maximal in G");
    std::swap(r.p, r.q);
    byIndexQ = std::move(byIndexP);
  }
  for (const auto& k : byIndexQ) r.analyses.push_back(analyze(folder, k, r.p, r.q));
  return r;
}

}  // namespace loopforge
