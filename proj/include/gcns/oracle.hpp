#pragma once

#include <span>
#include <vector>

#include "gcns/apery_table.hpp"
#include "gcns/gcns_model.hpp"
#include "gcns/int_math.hpp"

namespace gcns {

// Ground-truth membership oracle for an arbitrary numerical semigroup.
// Everything here is computed from a reachability table; no result depends
// on the formula modules it is used to verify.
//
// The table covers [0, bound] where bound strictly exceeds the Frobenius
// number, so membership beyond the table is always true. Instances are
// immutable after construction and safe to share across threads.
class SemigroupOracle {
 public:
  /// Builds from a nonempty list of positive generators with gcd 1.
  explicit SemigroupOracle(std::vector<Int> generators);

  bool contains(Int n) const {
    if (n < 0) return false;
    return n <= bound_ ? member_[static_cast<std::size_t>(n)] != 0 : true;
  }

  /// Membership of n in the quotient by p, i.e. contains(p*n).
  bool quotient_contains(Int p, Int n) const;

  /// -1 when the semigroup is all of N.
  Int frobenius() const { return frobenius_; }

  /// Number of gaps.
  Int genus() const { return genus_; }

  /// Apery table of w; w must be a nonzero member.
  AperyTable apery(Int w) const;

  /// Oracle for the quotient by any p >= 1 (all of N when p is a member),
  /// built directly from quotient membership.
  SemigroupOracle quotient(Int p) const;

  const std::vector<Int>& generators() const { return gens_; }
  Int bound() const { return bound_; }

 private:
  SemigroupOracle() = default;

  std::vector<Int> gens_;           // sorted, deduplicated
  Int bound_ = 0;
  std::vector<std::uint8_t> member_;  // membership over [0, bound_]
  Int frobenius_ = -1;
  Int genus_ = 0;
};

/// Apery table of (smallest generator)/p in the quotient by p; p must be a
/// proper divisor of the smallest generator.
AperyTable quotient_apery_oracle(const SemigroupOracle& oracle, Int p);

/// Change-making optimum by dynamic programming: minimum number of coins
/// from b summing to m. b must contain 1.
Int opt_oracle(std::span<const Int> b, Int m);

/// Candidate Apery value at offset m: o_bh(m*a + r*p) * (a/p) + (m*(a/p) + r) * d.
/// Under the monotonicity condition this is increasing in m, so the minimum
/// over m sits at m = 0.
Int ndrp_m(const GcnsSpec& spec, Int p, Int r, Int m);

}  // namespace gcns
