#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopforge/group.hpp"

namespace loopforge {

// A finite loop as a Latin square with identity 0.
class LoopTable {
 public:
  LoopTable() = default;
  // Validates the Latin property and the presence of a two-sided identity,
  // which is relocated to index 0. Throws NotLatinSquare / NoIdentity.
  static LoopTable from_rows(const std::vector<std::vector<Elem>>& rows,
                             std::vector<std::string> labels = {});
  static LoopTable from_group(const GroupTable& g);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.mul_ == b.mul_; }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<std::string> labels_;
};

// R_x : l -> l * x
Perm right_translation(const LoopTable& l, Elem x);

struct RightMultiplicationGroup {
  PermutationGroup perms;        // RM(L) acting on the loop's elements
  std::vector<Elem> translation; // translation[x] is the group element R_x
  ElementSet translations;       // {R_x}
  ElementSet stabilizer;         // {g : 0^g = 0}
};
RightMultiplicationGroup right_multiplication_group(const LoopTable& l,
                                                    std::size_t maxOrder = kDefaultMaxOrder);

struct RccCheck {
  bool rcc = true;
  std::optional<std::pair<Elem, Elem>> witness;  // (x, y) with R_x^-1 R_y R_x not a translation
};
RccCheck is_rcc_loop(const LoopTable& l);

bool is_associative(const LoopTable& l);

// Bijection fixing 0 with f(a*b) = f(a)*f(b), if one exists.
std::optional<std::vector<Elem>> find_loop_isomorphism(const LoopTable& a, const LoopTable& b,
                                                       std::size_t maxOrder = kDefaultMaxOrder);
bool loop_isomorphic(const LoopTable& a, const LoopTable& b);

// ".loop" text: `loop <order>` followed by the rows.
LoopTable parse_loop_text(const std::string& text);
std::string format_loop(const LoopTable& l);

}  // namespace loopforge
