#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/catalog.hpp"
#include "loopforge/folder.hpp"
#include "loopforge/group.hpp"
#include "loopforge/search.hpp"

namespace loopforge {

// ---- conjecture sweep ----------------------------------------------------------

struct Counterexample {
  std::vector<Elem> h;
  std::vector<Elem> t;
  Elem witness = 0;  // nontrivial element of G' ∩ H
};

struct IncompleteSearch {
  std::vector<Elem> h;
  std::uint64_t budget = 0;
};

struct ConjectureOptions {
  std::uint64_t nodeBudget = kDefaultNodeBudget;
  // Count every invariant transversal instead of stopping at the first.
  bool fullEnumeration = false;
};

struct ConjectureReport {
  std::string groupName;
  std::size_t order = 0;
  std::size_t abelianSubgroupsTested = 0;
  // Subgroups admitting an invariant transversal (existence mode) or the
  // total number of transversals (full enumeration).
  std::uint64_t foldersFound = 0;
  // Transversals looked at (one per subgroup unless fully enumerating) and
  // how many of them are unions of G'-cosets.
  std::uint64_t transversalsExamined = 0;
  std::uint64_t derivedFormTransversals = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<IncompleteSearch> skippedIncomplete;
};

// Abelian H up to conjugacy: an invariant transversal containing 1 forces
// G' ∩ H = 1. Counterexamples are recorded, never thrown.
ConjectureReport verify_conjecture(const GroupPtr& g, const std::string& name,
                                   const ConjectureOptions& options = {});

struct OrderCoverage {
  std::size_t order = 0;
  std::size_t known = 0;       // non-abelian groups of this order up to isomorphism
  std::size_t catalogued = 0;  // non-abelian catalog entries of this order
};

struct ConjectureSweep {
  std::vector<ConjectureReport> reports;  // sorted by (order, name)
  std::vector<OrderCoverage> coverage;
  std::size_t counterexampleCount() const;
};
// Every non-abelian catalog group of order < maxOrderExclusive.
ConjectureSweep conjecture_sweep(std::size_t maxOrderExclusive, const ConjectureOptions& options = {});

// Number of abelian groups of order n (product of partition numbers).
std::size_t abelian_group_count(std::size_t n);

// ---- transfer ------------------------------------------------------------------

class TransferContext {
 public:
  // Throws NotAbelian, NotTransversal.
  TransferContext(const ElementSet& h, std::vector<Elem> t);

  const ElementSet& subgroup() const noexcept { return h_; }
  const std::vector<Elem>& transversal() const noexcept { return t_; }
  // λ_x(t_i): the h in H with t_i x = h t' for some t' in T.
  Elem lambda(std::size_t i, Elem x) const;
  // τ(x) = Π_t λ_x(t)
  Elem evaluate(Elem x) const;
  bool is_homomorphism() const;

 private:
  ElementSet h_;
  std::vector<Elem> t_;
  std::vector<Elem> repOf_;  // transversal element in each element's coset
};

struct HallTransferResult {
  std::vector<Elem> transversal;  // the H-invariant transversal used
  bool restrictionIsPower = false;  // τ(h) = h^{|G:H|}
  bool restrictionBijective = false;
  bool derivedMeetsTrivially = false;
  bool holds() const { return restrictionIsPower && restrictionBijective && derivedMeetsTrivially; }
};
// Throws NotAbelian, NotHall, NoInvariantSystem.
HallTransferResult hall_transfer_check(const ElementSet& h, const SearchOptions& options = {});

// Normal N with G = HN, H ∩ N = 1, G/N ≅ H for a Sylow H <= Z(N_G(H)).
// Throws PreconditionFailed; InternalTheoremViolation if none exists.
ElementSet burnside_complement_check(const ElementSet& h);

struct P3Report {
  std::size_t p = 0;
  bool derivedEqualsCenter = false;
  bool centerHasOrderP = false;
  std::size_t subgroupsTested = 0;
  std::uint64_t transversalsChecked = 0;
  bool derivedInEveryTransversal = true;
  bool derivedMeetsTrivially = true;
  bool holds() const {
    return derivedEqualsCenter && centerHasOrderP && derivedInEveryTransversal &&
           derivedMeetsTrivially;
  }
};
// Non-abelian G of order p^3; transversal checks range over the abelian
// (that is, proper) subgroups. Throws PreconditionFailed.
P3Report p3_checks(const GroupPtr& g);

// ---- order pq envelopes ---------------------------------------------------------

// Monomorphism into Aff(1,p). Throws InvalidArgument unless p is prime.
std::optional<GroupHomomorphism> embed_in_affine(const GroupPtr& g, std::size_t p);

enum class PqVerdict { DirectProductAffine, AffineSubgroup, Unclassified };
std::string pq_verdict_name(PqVerdict v);

struct PqAnalysis {
  std::vector<Elem> k, t1, k1, h1, c;
  bool lemmaFolder = false;         // (K1, H1, T1) is an RCC loop folder of order p
  bool lemmaK1Abelian = false;
  bool lemmaK1NormalInK = false;
  bool lemmaKEqualsHK1 = false;
  bool lemmaH1NormalInK = false;
  bool kNormal = false;
  bool k1ProperInCentralizer = false;  // K1 < C_G(K1)
  PqVerdict verdict = PqVerdict::Unclassified;
  bool conclusionConfirmed = false;
  bool lemmaHolds() const {
    return lemmaFolder && lemmaK1Abelian && lemmaK1NormalInK && lemmaKEqualsHK1 && lemmaH1NormalInK;
  }
};

struct PqReport {
  std::size_t p = 0;  // |K:H|
  std::size_t q = 0;  // |G:K|
  std::vector<PqAnalysis> analyses;  // one per intermediate K, by member list
};
// Faithful generating RCC folder of order pq. Analyzes every K with
// H < K < G and |G:K| = q; when no such K exists the roles of p and q are
// exchanged. Throws PreconditionFailed, NoIntermediateSubgroup.
PqReport pq_structure_analysis(const LoopFolder& folder, std::size_t p, std::size_t q);

}  // namespace loopforge
