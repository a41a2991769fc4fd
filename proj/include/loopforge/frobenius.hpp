#pragma once

#include <optional>
#include <vector>

#include "loopforge/folder.hpp"
#include "loopforge/group.hpp"

namespace loopforge {

struct FrobeniusStructure {
  GroupPtr group;
  ElementSet kernel;
  ElementSet complement;
  bool complementAbelian = false;
};

// C ∩ C^g = 1 for every g outside C.
bool is_malnormal(const ElementSet& c);
// G minus the union of the conjugates of C - {1}.
ElementSet frobenius_kernel(const ElementSet& c);

// Checks every structural invariant of (G, N, C); throws PreconditionFailed.
FrobeniusStructure make_frobenius_structure(const ElementSet& kernel, const ElementSet& complement);

// Complement of smallest order (ties: smallest member list). Candidates come
// from the full lattice for |G| <= 64 and from subgroups with at most two
// generators above that.
std::optional<FrobeniusStructure> detect_frobenius(const GroupPtr& g);

struct IsaacsConditions {
  bool a = false;  // C_G(n) <= N for 1 != n in N
  bool b = false;  // C_C(n) = 1 for 1 != n in N
  bool c = false;  // C_G(c) <= C for 1 != c in C
  bool d = false;  // every x in G - N is conjugate into C
  bool e = false;  // 1 != c in C is conjugate to every element of Nc
  bool f = false;  // C is a Frobenius complement
  bool agree() const { return a == b && b == c && c == d && d == e && e == f; }
};
// Throws PreconditionFailed unless N is normal, G = NC, N ∩ C = 1, 1 < C < G.
IsaacsConditions isaacs_criteria(const ElementSet& n, const ElementSet& c);

struct KernelDerivedCheck {
  bool complementAbelian = false;
  bool kernelIsDerived = false;
  bool consistent() const { return complementAbelian == kernelIsDerived; }
};
KernelDerivedCheck kernel_derived_check(const FrobeniusStructure& fs);

// Conjugacy classes outside N are exactly the cosets Nc, 1 != c in C.
bool classes_outside_kernel_are_cosets(const FrobeniusStructure& fs);

struct FrobeniusTransversalShape {
  std::vector<Elem> tauReps;  // smallest element of each N-coset in T - N
  std::size_t n = 0;          // |C:H| - 1
};
// Decomposes T = N ∪ Nτ_1 ∪ ... ∪ Nτ_n; throws ShapeViolation otherwise.
FrobeniusTransversalShape transversal_shape(const FrobeniusStructure& fs, const ElementSet& h,
                                            std::span<const Elem> t);

// All G-invariant transversals NS, S a transversal of HN in G with 1 in S.
std::vector<LoopFolder> lift_frobenius_transversals(const FrobeniusStructure& fs,
                                                    const ElementSet& h);

struct FrobeniusEnvelope {
  LoopFolder folder;
  bool roundtrip = false;
};
// The lifted folders whose transversal generates G, with the envelope check.
std::vector<FrobeniusEnvelope> frobenius_rcc_envelopes(const FrobeniusStructure& fs,
                                                       const ElementSet& h);

}  // namespace loopforge
