#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/group.hpp"
#include "loopforge/loop.hpp"

namespace loopforge {

// Identity first, remaining elements in increasing index order.
std::vector<Elem> canonical_transversal_order(std::vector<Elem> t);

// |T ∩ Hg| = 1 for every right coset Hg.
bool is_right_transversal(const ElementSet& h, std::span<const Elem> t);
// T^u = T for all u in `acting`.
bool is_invariant_under(const ElementSet& acting, std::span<const Elem> t);

// A validated loop folder (G, H, T). The transversal is kept in canonical
// order; loop tables built from the folder index T by position.
class LoopFolder {
 public:
  const GroupPtr& group() const noexcept { return h_.parent(); }
  const ElementSet& subgroup() const noexcept { return h_; }
  const std::vector<Elem>& transversal() const noexcept { return t_; }
  std::size_t order() const noexcept { return t_.size(); }
  bool is_rcc() const noexcept { return rcc_; }
  bool is_faithful() const noexcept { return faithful_; }
  bool is_generating() const noexcept { return generating_; }

  // Recomputes the cached flags and compares them.
  bool flags_consistent() const;

 private:
  friend LoopFolder validate_folder(const ElementSet&, std::vector<Elem>, bool);
  ElementSet h_;
  std::vector<Elem> t_;
  bool rcc_ = false;
  bool faithful_ = false;
  bool generating_ = false;
};

// Validates (G, H, T). When T is G-invariant and `useInvarianceShortcut` is
// set, transversality is checked for H alone; otherwise for every conjugate.
// Throws NotSubgroup or NotTransversal.
LoopFolder validate_folder(const ElementSet& h, std::vector<Elem> t,
                           bool useInvarianceShortcut = true);

bool is_faithful(const LoopFolder& f);
bool is_rcc(const LoopFolder& f);
bool is_generating(const LoopFolder& f);

// t_i * t_j is the element of T in the coset H t_i t_j.
LoopTable loop_from_folder(const LoopFolder& f);

// (RM(L), Stab(1), R_L).
LoopFolder envelope(const LoopTable& l, std::size_t maxOrder = kDefaultMaxOrder);

struct RoundtripResult {
  bool ok = false;
  std::string failure;             // empty when ok
  std::vector<Elem> phi;           // envelope element -> folder group element
};
// Checks that the envelope of the folder's loop maps onto the folder through
// R_{x1}...R_{xn} -> x1...xn. Throws PreconditionFailed unless the folder is
// faithful and generating.
RoundtripResult envelope_roundtrip(const LoopFolder& f);
bool envelope_roundtrip_check(const LoopFolder& f);

// T = G'S for a transversal S of HG' chosen by smallest index per coset.
// Throws DerivedIntersectsH.
LoopFolder derived_construction(const ElementSet& h);
// Is T of the form G'S, i.e. a union of G'-cosets?
bool is_derived_form(const LoopFolder& f);

// N_G(H) = H C_G(H). Throws PreconditionFailed unless the folder is RCC.
bool normalizer_factorization_check(const LoopFolder& f);

struct ExtendedFolder {
  ProductGroup product;
  LoopFolder folder;
};
// (G x Q, H x 1, T x Q)
ExtendedFolder extend_direct(const LoopFolder& f, const GroupPtr& q);
// (G ⋉ Q, H ⋉ 1, T ⋉ Q)
ExtendedFolder extend_semidirect(const LoopFolder& f, const GroupPtr& q, const Action& action);
// (G1 x G2, H1 x H2, T1 x T2)
ExtendedFolder product_folder(const LoopFolder& f1, const LoopFolder& f2);

struct SemidirectCore {
  ProductGroup product;
  ElementSet core;  // {(h,1) : [(h,1), 1 ⋉ Q] = 1}
};
SemidirectCore semidirect_core(const ElementSet& h, const GroupPtr& q, const Action& action);

// T = ∪_{i<=m} S_i x {q_i} ∪ ∪_{j>m} S_1 x {q_j}, with q_1 = 1 the identity
// of Q and Q's elements taken in index order.
ExtendedFolder merge_transversals(const ElementSet& h, const std::vector<std::vector<Elem>>& family,
                                  const GroupPtr& q);

// ".folder" text: `group <path>` (relative to the folder file),
// `subgroup i j ...`, `transversal i j ...`.
struct FolderFile {
  std::filesystem::path groupPath;
  std::vector<Elem> subgroup;
  std::vector<Elem> transversal;
};
FolderFile parse_folder_text(const std::string& text);
LoopFolder read_folder_file(const std::filesystem::path& path);
std::string format_folder(const LoopFolder& f, const std::string& groupPath);

}  // namespace loopforge
