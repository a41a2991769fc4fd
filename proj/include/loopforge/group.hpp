#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopforge/error.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

inline constexpr std::size_t kDefaultMaxOrder = 512;

struct BuildOptions {
  std::size_t maxOrder = kDefaultMaxOrder;
  // Tables supplied from outside are checked for associativity exhaustively
  // (cubic cost) up to this order.
  std::size_t associativityCheckBound = 512;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// A finite group as a Cayley table. The identity is always element 0.
class GroupTable {
 public:
  // Wraps a table that is known to be a group with identity 0. Only internal
  // constructors (closures, products, quotients) should call this.
  static GroupPtr trusted(std::size_t order, std::vector<Elem> mul,
                          std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  // x^g = g^-1 x g
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inv_[g], x), g); }
  // [a, b] = a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  Elem power(Elem x, long long k) const noexcept;
  std::size_t element_order(Elem x) const noexcept { return orders_[x]; }
  bool is_abelian() const noexcept { return abelian_; }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const Elem> table() const noexcept { return mul_; }
  std::vector<std::vector<Elem>> rows() const;

 private:
  GroupTable() = default;

  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
  bool abelian_ = true;
};

// Subset of a parent group's elements, kept as a strictly increasing index list.
class ElementSet {
 public:
  ElementSet() = default;
  // Plain subset; range-checked, sorted and deduplicated.
  ElementSet(GroupPtr parent, std::vector<Elem> members);

  // Validated subgroup; throws NotSubgroup.
  static ElementSet subgroup(GroupPtr parent, std::vector<Elem> members);
  // Caller guarantees closure.
  static ElementSet assume_subgroup(GroupPtr parent, std::vector<Elem> members);
  static ElementSet trivial(GroupPtr parent);
  static ElementSet whole(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupTable& group() const noexcept { return *parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return x < mask_.size() && mask_[x] != 0; }
  bool is_subgroup() const noexcept { return isSubgroup_; }
  bool is_trivial() const noexcept { return members_.size() == 1 && members_[0] == 0; }
  bool subset_of(const ElementSet& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
  bool isSubgroup_ = false;
};

struct GroupHomomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> imageOf;

  Elem operator()(Elem x) const { return imageOf[x]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_bijective() const;
  ElementSet image() const;
  ElementSet kernel() const;
};

// A right action of G on Q by automorphisms: ofElement[g] is the permutation
// q -> q^g of Q's element indices, with q^(gh) = (q^g)^h.
struct Action {
  std::vector<Perm> ofElement;
};

Action trivial_action(const GroupTable& g, const GroupTable& q);
// Extends generator images to a full action; throws NotAnAction when the
// images are inconsistent or not automorphisms.
Action action_from_generators(const GroupTable& g, const GroupTable& q,
                              std::span<const Elem> generators,
                              std::span<const Perm> images);
bool is_action(const GroupTable& g, const GroupTable& q, const Action& action);

struct ProductGroup {
  GroupPtr group;
  GroupHomomorphism first;   // embedding of the left factor
  GroupHomomorphism second;  // embedding of the right factor
};

struct QuotientGroup {
  GroupPtr group;
  GroupHomomorphism projection;
  std::vector<std::vector<Elem>> cosets;  // cosets[i] is the preimage of quotient element i
};

struct PermutationGroup {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<Perm> elements;  // elements[i] is the permutation of group element i
};

// ---- construction ----------------------------------------------------------

GroupPtr build_from_table(const std::vector<std::vector<Elem>>& table,
                          std::vector<std::string> labels = {},
                          const BuildOptions& options = {});

PermutationGroup permutation_closure(std::size_t degree, const std::vector<Perm>& generators,
                                     const BuildOptions& options = {});
GroupPtr build_from_generators(std::size_t degree, const std::vector<Perm>& generators,
                               const BuildOptions& options = {});

// Builds a group from a Cayley graph: right[i * k + j] is element i times
// generator j, and every element b > 0 equals parent[b] * generator via[b].
GroupPtr group_from_cayley_graph(std::size_t order, std::size_t generatorCount,
                                 const std::vector<Elem>& right,
                                 const std::vector<Elem>& parent,
                                 const std::vector<std::size_t>& via,
                                 std::vector<std::string> labels);

// ---- subgroups and conjugation ----------------------------------------------

ElementSet generated_subgroup(const GroupPtr& g, std::span<const Elem> seed);
ElementSet generated_subgroup(const ElementSet& seed);
bool is_closed_subgroup(const GroupTable& g, std::span<const Elem> members);

std::vector<std::vector<Elem>> right_cosets(const ElementSet& h);
// cosetOf[x] is the position of Hx in right_cosets(h).
std::vector<std::size_t> right_coset_index(const ElementSet& h);
std::size_t index_of(const ElementSet& h);

std::vector<ElementSet> conjugacy_classes(const GroupPtr& g);
// classOf[x] is the position of x's class in conjugacy_classes(g).
std::vector<std::size_t> conjugacy_class_index(const GroupPtr& g);
std::vector<ElementSet> conjugation_orbits(const ElementSet& acting);

ElementSet centralizer(const GroupPtr& g, std::span<const Elem> s);
ElementSet centralizer(const ElementSet& s);
ElementSet center(const GroupPtr& g);
ElementSet normalizer(const ElementSet& h);
ElementSet conjugate(const ElementSet& h, Elem g);
bool is_normal(const ElementSet& h);
ElementSet core(const ElementSet& h);
ElementSet normal_closure(const ElementSet& s);
ElementSet derived_subgroup(const GroupPtr& g);
ElementSet intersection(const ElementSet& a, const ElementSet& b);
ElementSet join(const ElementSet& a, const ElementSet& b);
// The set product {ab : a in A, b in B}.
ElementSet product_set(const ElementSet& a, const ElementSet& b);
bool is_abelian(const ElementSet& h);
bool is_cyclic(const ElementSet& h);

// ---- products and quotients -------------------------------------------------

ProductGroup direct_product(const GroupPtr& g1, const GroupPtr& g2,
                            const BuildOptions& options = {});
// (g,q)(g',q') = (gg', q^{g'} q').
ProductGroup semidirect_product(const GroupPtr& g, const GroupPtr& q, const Action& action,
                                const BuildOptions& options = {});
QuotientGroup quotient(const ElementSet& n);

struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<Elem> toParent;  // toParent[i] is the parent index of local element i
};
// The subgroup as a standalone table; local indices follow the member order.
SubgroupAsGroup as_group(const ElementSet& h);

// ---- invariants ---------------------------------------------------------------

std::size_t rank(const GroupPtr& g);
std::size_t brute_force_rank(const GroupPtr& g);
ElementSet sylow_subgroup(const GroupPtr& g, std::size_t p);
// {x : order(x) is a power of p}; a subgroup when G is abelian.
ElementSet p_part(const ElementSet& h, std::size_t p);

// ---- isomorphism --------------------------------------------------------------

std::optional<GroupHomomorphism> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                                  std::size_t maxOrder = kDefaultMaxOrder);
std::optional<GroupHomomorphism> find_monomorphism(const GroupPtr& source, const GroupPtr& target,
                                                   std::size_t maxOrder = kDefaultMaxOrder);
bool are_isomorphic(const GroupPtr& g1, const GroupPtr& g2);

// Cheap isomorphism invariant: element order/class size statistics plus the
// orders of the center and derived subgroup.
struct GroupFingerprint {
  std::size_t order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> orderAndClassSize;
  std::size_t centerOrder = 0;
  std::size_t derivedOrder = 0;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};
GroupFingerprint fingerprint(const GroupPtr& g);

// Small greedy generating set: repeatedly adds the element that enlarges the
// generated subgroup most (ties: smallest index).
std::vector<Elem> greedy_generators(const ElementSet& h);

}  // namespace loopforge
