#pragma once

#include <vector>

#include "gcns/int_math.hpp"

namespace gcns {

// Apery table of a semigroup element w: entries[r] is the smallest member
// congruent to r (mod modulus). entries[0] is always 0.
struct AperyTable {
  Int modulus = 0;
  std::vector<Int> entries;

  bool operator==(const AperyTable&) const = default;
};

}  // namespace gcns
