#pragma once

#include <span>
#include <vector>

#include "gcns/int_math.hpp"

namespace gcns {

// Coefficient vector of m over a base sequence b_1..b_k.
struct GreedyPresentation {
  Int m = 0;
  std::vector<Int> x;
};

// Descending greedy over b: x_k = floor(m / b_k) and so on down to b_1 = 1.
// For base sequences derived from an s-list this is the unique vector with
// sum(b_i*x_i) = m, x_i <= s_i for i < k, and x_i = s_i forcing all lower
// digits to zero; its coefficient sum is the change-making optimum.
GreedyPresentation greedy_presentation(std::span<const Int> b, std::span<const Int> s, Int m);

/// Coefficient sum of the greedy presentation (minimum coin count for m).
Int opt_b(std::span<const Int> b, std::span<const Int> s, Int m);

/// u*m + opt_b(m), the minimum of sum(h_i*x_i) over representations of m.
Int o_bh(std::span<const Int> b, std::span<const Int> s, Int u, Int m);

/// sum((u*b_i + 1) * x_i); equals u*m + coefficient sum.
Int weight(std::span<const Int> b, const GreedyPresentation& pres, Int u);

struct WeightedPresentation {
  GreedyPresentation presentation;
  Int weight = 0;
  Int coeff_sum = 0;
};

WeightedPresentation make_weighted(std::span<const Int> b, GreedyPresentation pres, Int u);

enum class Colex { less, equal, greater };

// Compare coefficient vectors from the highest index downward; vectors of
// different lengths are a caller bug, not an implicit zero-pad.
Colex colex_compare(std::span<const Int> lhs, std::span<const Int> rhs);

}  // namespace gcns
