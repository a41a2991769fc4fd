// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loopforge/abelian.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/conjecture.hpp"
#include "loopforge/folder.hpp"
#include "loopforge/frobenius.hpp"
#include "loopforge/lattice.hpp"
#include "loopforge/loop.hpp"
#include "loopforge/numeric.hpp"
#include "loopforge/search.hpp"
#include "oracles.hpp"

using namespace loopforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limitSeconds;
  std::function<Outcome()> run;
};

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Outcome d8_reflection() {
  GroupPtr g = dihedral(8);
  const Elem s = 4, t = 5;  // two reflections generating D8
  auto w = [&](std::initializer_list<Elem> word) {
    Elem x = 0;
    for (Elem y : word) x = g->mul(x, y);
    return x;
  };
  std::vector<std::vector<Elem>> expected{sorted({0, t, w({s, t, s}), w({t, s, t, s})}),
                                          sorted({0, w({s, t}), w({t, s}), w({t, s, t, s})})};
  std::sort(expected.begin(), expected.end());
  ElementSet h = ElementSet::subgroup(g, {0, s});
  auto found = enumerate_invariant_transversals(h);
  Outcome o;
  o.ok = found.complete && found.transversals == expected &&
         oracle::invariant_transversals(*g, h.members()) == expected;
  for (const auto& tr : found.transversals)
    if (validate_folder(h, tr).is_generating() || oracle::closure(*g, tr).size() == 8) o.ok = false;
  o.detail = std::to_string(found.count) + " transversals, none generating";
  return o;
}

Outcome q8_center() {
  GroupPtr g = dicyclic(8);
  ElementSet z = center(g);
  auto found = count_invariant_transversals(z);
  P3Report p3 = p3_checks(g);
  auto derived = oracle::derived_subgroup(*g);
  Outcome o;
  o.ok = found.complete && found.count == 0 && oracle::invariant_transversals(*g, z.members()).empty() &&
         p3.holds() && p3.derivedEqualsCenter && derived == oracle::center(*g) && derived.size() == 2 &&
         derived_subgroup(g).members() == derived;
  o.detail = "count " + std::to_string(found.count) + ", |G'| = " + std::to_string(derived.size()) +
             ", abelian subgroups checked " + std::to_string(p3.subgroupsTested);
  return o;
}

Outcome affine_counting() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t p : {3, 5, 7}) {
    AffineGroup aff = affine_group(p);
    FrobeniusStructure fs = make_frobenius_structure(aff.translations, aff.linear);
    for (const auto& members : oracle::subgroups(*aff.group)) {
      if (!std::includes(aff.linear.begin(), aff.linear.end(), members.begin(), members.end())) continue;
      ElementSet h = ElementSet::subgroup(aff.group, members);
      auto found = enumerate_invariant_transversals(h);
      const std::uint64_t expected = ipow(h.size(), aff.linear.size() / h.size() - 1);
      bool shapes = true;
      for (const auto& t : found.transversals) {
        try {
          auto shape = transversal_shape(fs, h, t);
          shapes = shapes && shape.n == aff.linear.size() / h.size() - 1;
        } catch (const Error&) {
          shapes = false;
        }
      }
      if (!found.complete || found.count != expected || !shapes) {
        o.ok = false;
        o.detail += " Aff(1," + std::to_string(p) + ") |H|=" + std::to_string(h.size()) + " got " +
                    std::to_string(found.count) + " expected " + std::to_string(expected) + ";";
      }
      ++cases;
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " subgroups H <= L, counts match |H|^(|L:H|-1)";
  return o;
}

Outcome conjecture() {
  ConjectureSweep sweep = conjecture_sweep(40);
  std::size_t incomplete = 0, catalogued = 0, known = 0, folders = 0;
  for (const auto& r : sweep.reports) {
    incomplete += r.skippedIncomplete.size();
    folders += r.foldersFound;
  }
  for (const auto& c : sweep.coverage) {
    catalogued += c.catalogued;
    known += c.known;
  }
  Outcome o;
  o.ok = sweep.counterexampleCount() == 0 && incomplete == 0;
  o.detail = std::to_string(sweep.reports.size()) + " non-abelian groups (coverage " +
             std::to_string(catalogued) + "/" + std::to_string(known) + "), " + std::to_string(folders) +
             " subgroups with folders, " + std::to_string(sweep.counterexampleCount()) +
             " counterexamples, " + std::to_string(incomplete) + " incomplete searches";
  return o;
}

Outcome roundtrips() {
  Outcome o;
  std::size_t checked = 0;
  bool sawOrder6 = false;
  for (const auto& e : small_group_catalog(24)) {
    for (const auto& h : subgroups_up_to_conjugacy(e.group)) {
      auto found = enumerate_invariant_transversals(h);
      if (!found.complete) o.ok = false;
      for (const auto& t : found.transversals) {
        LoopFolder f = validate_folder(h, t);
        if (!f.is_faithful() || !f.is_generating()) continue;
        ++checked;
        RoundtripResult rt = envelope_roundtrip(f);
        if (!rt.ok) {
          o.ok = false;
          o.detail += " " + e.name + ": " + rt.failure + ";";
        }
        if (f.order() == 6 && !sawOrder6) {
          LoopTable l = loop_from_folder(f);
          if (!oracle::loop_is_associative(l) && oracle::loop_is_rcc(l) &&
              oracle::right_multiplication_order(l) == 18 &&
              right_multiplication_group(l).perms.group->order() == 18)
            sawOrder6 = true;
        }
      }
    }
  }
  o.ok = o.ok && sawOrder6 && checked > 0;
  if (o.ok)
    o.detail = std::to_string(checked) +
               " faithful generating folders round-trip; non-associative RCC loop of order 6 with |RM| = 18 found";
  else if (!sawOrder6)
    o.detail += " no non-associative order-6 RCC loop with |RM| = 18";
  return o;
}

Outcome exact_cover_vs_brute() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& e : small_group_catalog(16)) {
    for (const auto& members : oracle::subgroups(*e.group)) {
      ElementSet h = ElementSet::subgroup(e.group, members);
      auto found = enumerate_invariant_transversals(h);
      auto brute = oracle::invariant_transversals(*e.group, members);
      if (!found.complete || found.transversals != brute || found.count != brute.size()) {
        o.ok = false;
        o.detail += " " + e.name + " |H|=" + std::to_string(members.size()) + ";";
      }
      ++pairs;
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs (G, H) agree";
  return o;
}

// Random abelian group of order at most 256 as a product of cyclic factors.
std::vector<std::size_t> random_orders(std::mt19937_64& rng, std::size_t p = 0) {
  static const std::size_t primes[] = {2, 3, 5, 7};
  std::vector<std::size_t> orders;
  std::size_t n = 1;
  const int factors = std::uniform_int_distribution<int>(1, 5)(rng);
  for (int i = 0; i < factors; ++i) {
    std::size_t base = p ? p : primes[std::uniform_int_distribution<int>(0, 3)(rng)];
    std::size_t q = base;
    while (std::uniform_int_distribution<int>(0, 2)(rng) == 0) q *= base;
    if (n * q > 256) break;
    orders.push_back(q);
    n *= q;
  }
  if (orders.empty()) orders.push_back(p ? p : 2);
  return orders;
}

ElementSet random_subgroup(std::mt19937_64& rng, const GroupPtr& g) {
  const int gens = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Elem> seed;
  for (int i = 0; i < gens; ++i)
    seed.push_back(static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, g->order() - 1)(rng)));
  return generated_subgroup(g, seed);
}

Outcome abelian_random() {
  std::mt19937_64 rng(20240611);
  Outcome o;
  std::size_t generating = 0, attempts = 0;
  while (generating < 200 && attempts < 100000) {
    ++attempts;
    GroupPtr g = abelian(random_orders(rng));
    ElementSet whole = ElementSet::whole(g);
    ElementSet h = random_subgroup(rng, g);
    if (!sylow_index_condition(whole, h)) continue;
    auto t = generating_transversal_abelian(whole, h);
    if (!oracle::is_transversal(*g, h.members(), t) || oracle::closure(*g, t).size() != g->order() ||
        t.front() != 0) {
      o.ok = false;
      o.detail += " generating case failed at order " + std::to_string(g->order()) + ";";
    }
    ++generating;
  }
  std::size_t minimal = 0;
  attempts = 0;
  while (minimal < 200 && attempts < 100000) {
    ++attempts;
    const std::size_t p = std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 3;
    GroupPtr g = abelian(random_orders(rng, p));
    ElementSet whole = ElementSet::whole(g);
    ElementSet h = random_subgroup(rng, g);
    const std::size_t idx = g->order() / h.size();
    std::vector<Elem> all(g->order());
    for (Elem x = 0; x < g->order(); ++x) all[x] = x;
    if (idx == 1 || idx > oracle::abelian_p_rank(*g, all, p)) continue;
    auto t = minimal_transversal_p_group(whole, h);
    std::vector<Elem> rest(t.begin() + 1, t.end());
    auto k = oracle::closure(*g, rest);
    if (!oracle::is_transversal(*g, h.members(), t) || oracle::abelian_p_rank(*g, k, p) != t.size() - 1) {
      o.ok = false;
      o.detail += " minimal case failed at order " + std::to_string(g->order()) + ";";
    }
    ++minimal;
  }
  o.ok = o.ok && generating == 200 && minimal == 200;
  if (o.ok) o.detail = "200 generating + 200 minimal-rank transversals verified";
  return o;
}

Outcome hall_and_felsch() {
  Outcome o;
  std::size_t hallCases = 0, chains = 0, exists = 0;
  for (const auto& e : small_group_catalog(40)) {
    const std::size_t n = e.group->order();
    for (const auto& h : abelian_subgroups_up_to_conjugacy(e.group)) {
      if (h.is_trivial() || h.size() == n || std::gcd(h.size(), n / h.size()) != 1) continue;
      HallTransferResult r;
      try {
        r = hall_transfer_check(h);
      } catch (const Error& err) {
        if (err.code() == Errc::NoInvariantSystem) continue;
        throw;
      }
      bool direct = true;
      for (Elem x : h)
        direct = direct && oracle::transfer(*e.group, h.members(), r.transversal, x) ==
                               e.group->power(x, static_cast<long long>(n / h.size()));
      if (!r.holds() || !direct) {
        o.ok = false;
        o.detail += " transfer " + e.name + ";";
      }
      ++hallCases;
    }
  }
  for (const auto& e : small_group_catalog(24)) {
    auto subs = oracle::subgroups(*e.group);
    for (const auto& h : subgroups_up_to_conjugacy(e.group)) {
      for (const auto& um : subs) {
        if (!std::includes(h.begin(), h.end(), um.begin(), um.end())) continue;
        ElementSet u = ElementSet::subgroup(e.group, um);
        FelschReport fr = felsch_criteria(h, u);
        bool brute = !oracle::invariant_transversals(*e.group, h.members(), um).empty();
        bool witnessOk = !fr.witness || (oracle::is_transversal(*e.group, h.members(), *fr.witness) &&
                                         oracle::is_invariant(*e.group, um, *fr.witness));
        if (!fr.agree() || fr.exists != brute || fr.exists != fr.witness.has_value() || !witnessOk) {
          o.ok = false;
          o.detail += " felsch " + e.name + ";";
        }
        exists += fr.exists;
        ++chains;
      }
    }
  }
  o.ok = o.ok && hallCases > 0;
  if (o.ok)
    o.detail = std::to_string(hallCases) + " abelian Hall cases; " + std::to_string(chains) + " chains (" +
               std::to_string(exists) + " with a system), all conditions agree";
  return o;
}

Outcome suzuki() {
  SuzukiStabilizer s = suzuki_point_stabilizer(1);
  FrobeniusStructure fs = make_frobenius_structure(s.kernel, s.complement);
  IsaacsConditions ic = isaacs_criteria(s.kernel, s.complement);
  auto derived = oracle::derived_subgroup(*s.group);
  auto detected = detect_frobenius(s.group);
  Outcome o;
  o.ok = s.group->order() == 448 && s.kernel.size() == 64 && s.complement.size() == 7 &&
         fs.complementAbelian && ic.a && ic.b && ic.c && ic.d && ic.e && ic.f &&
         derived == s.kernel.members() && kernel_derived_check(fs).kernelIsDerived && detected &&
         detected->kernel == s.kernel;
  o.detail = "|G| = " + std::to_string(s.group->order()) + ", |N| = " + std::to_string(s.kernel.size()) +
             ", |C| = " + std::to_string(s.complement.size()) + ", N = G'";
  return o;
}

Outcome affine_conjugation() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t q : {3, 4, 5, 7, 8}) {
    AffineGroup aff = affine_group(q);
    const FiniteField& f = aff.field;
    const GroupTable& g = *aff.group;
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        // y^{-1} x y with y = t_{α,β}, x = t_{γ,δ}
        unsigned alpha = aff.alphaOf[y], beta = aff.betaOf[y];
        unsigned gamma = aff.alphaOf[x], delta = aff.betaOf[x];
        unsigned ai = f.inv(alpha);
        unsigned b = f.sub(f.add(f.mul(f.mul(ai, beta), gamma), f.mul(ai, delta)), f.mul(ai, beta));
        if (g.conj(x, y) != aff.element(gamma, b)) o.ok = false;
        ++pairs;
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "D8 with H = <s>: exactly the two invariant transversals, neither generating", 1, d8_reflection},
      {2, "Q8 with H = Z: no invariant transversal; G' = Z of order 2", 1, q8_center},
      {3, "Aff(1,p), p in {3,5,7}: transversal count |H|^(|L:H|-1) and shape", 30, affine_counting},
      {4, "G' meets H trivially over non-abelian catalog groups of order < 40", 600, conjecture},
      {5, "envelope round-trip for faithful generating RCC folders, |G| <= 24", 300, roundtrips},
      {6, "exact cover equals brute-force enumeration, |G| <= 16", 300, exact_cover_vs_brute},
      {7, "random abelian generating and minimal-rank transversals", 120, abelian_random},
      {8, "transfer on abelian Hall subgroups; invariant-system conditions agree", 300, hall_and_felsch},
      {9, "Suzuki point stabilizer, m = 1", 60, suzuki},
      {10, "conjugation formula in Aff(1,q), q in {3,4,5,7,8}", 10, affine_conjugation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool inTime = secs <= c.limitSeconds;
    bool pass = o.ok && inTime;
    failures += !pass;
    std::printf("[%s] %2d %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.limitSeconds, inTime ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
