#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loopforge {

using Elem = std::uint32_t;

// A permutation of 0..n-1 stored as its image array. Permutations act on the
// right: compose(a, b) applies a first, then b.
using Perm = std::vector<Elem>;

Perm identity_perm(std::size_t degree);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(std::span<const Elem> p);
bool is_identity(const Perm& p);

// Disjoint-cycle notation, fixed points omitted; the identity prints as "()".
std::string cycle_string(const Perm& p);

// Parses "(0 1 2)(3 4)" into a permutation of the given degree. Throws
// Error(ParseError) on malformed input or repeated points.
Perm parse_cycles(std::size_t degree, std::string_view text);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t seed = p.size();
    for (Elem x : p) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

}  // namespace loopforge
