#pragma once

#include <string>
#include <vector>

#include "gcns/int_math.hpp"

namespace gcns {

// GCNS family parameters together with the derived sequences.
//
// Given a >= 2, d != 0 coprime to a, u >= 1 and a nondecreasing list
// s_1..s_{k-1} of positive integers, the base sequence is b_1 = 1,
// b_{i+1} = s_i*b_i + 1, the slope sequence is h_i = u*b_i + 1, and the
// semigroup generators are (a, h_1*a + d*b_1, ..., h_k*a + d*b_k).
// When d < 0 every non-a generator must still exceed 1.
struct GcnsSpec {
  Int a = 0;
  Int d = 0;
  Int u = 0;
  std::vector<Int> s;     // s_1..s_{k-1}
  std::vector<Int> b;     // b_1..b_k
  std::vector<Int> h;     // h_1..h_k
  std::vector<Int> gens;  // a first, then h_i*a + d*b_i

  Int k() const { return static_cast<Int>(b.size()); }
};

GcnsSpec build_spec(Int a, Int d, Int u, std::vector<Int> s);

/// CNS special case: s_i = b for all i and u = b - 1 (k generators past a).
GcnsSpec build_cns_spec(Int a, Int d, Int b, Int k);

// A quotient instance: p divides a, p != a, q = a/p >= 2.
struct QuotientSpec {
  GcnsSpec base;
  Int p = 1;
  Int q = 0;
};

QuotientSpec quotient_of(GcnsSpec spec, Int p);

// Hypothesis flags for the formula paths.
//   monotonicity_ok: u*a + d + k - 2 >= sum(s_i); gates the Apery/genus formulas.
//   frobenius_ok:    monotonicity and either (d > 0 and all s_i <= u+1) or
//                    (all s_i < u+1 and a + p*d >= 0); gates the Frobenius formula.
//   cns:             all s_i equal some b >= 2 and u = b - 1.
struct ConditionReport {
  bool monotonicity_ok = false;
  bool frobenius_ok = false;
  bool cns = false;
  std::vector<std::string> reasons;  // nonempty exactly when some flag is false
};

ConditionReport check_conditions(const GcnsSpec& spec, Int p);

}  // namespace gcns
