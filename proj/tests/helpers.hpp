#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "loopforge/group.hpp"
#include "loopforge/perm.hpp"

namespace testing {

using namespace loopforge;

// S3 on {0,1,2} from (0 1 2) and (0 1), with a lookup from cycle strings.
struct S3 {
  PermutationGroup pg = permutation_closure(3, {parse_cycles(3, "(0 1 2)"), parse_cycles(3, "(0 1)")});
  GroupPtr g = pg.group;
  Elem operator[](const std::string& cycles) const {
    Perm p = parse_cycles(3, cycles);
    auto it = std::find(pg.elements.begin(), pg.elements.end(), p);
    return static_cast<Elem>(it - pg.elements.begin());
  }
};

inline Elem word(const GroupTable& g, std::initializer_list<Elem> letters) {
  Elem x = 0;
  for (Elem y : letters) x = g.mul(x, y);
  return x;
}

inline std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testing
