#pragma once

#include <vector>

#include "gcns/apery_table.hpp"
#include "gcns/gcns_model.hpp"
#include "gcns/greedy.hpp"

namespace gcns {

// Formula paths for the quotient of a GCNS semigroup by a proper divisor p
// of a. Each refuses with ConditionNotMet when its hypothesis fails; callers
// that need a total answer fall back to the brute-force oracle.

/// Apery table of a/p in the quotient, modulus a/p, indexed by residue.
/// Requires the monotonicity condition.
AperyTable apery_quotient_formula(const QuotientSpec& qs);

/// Frobenius number of the quotient. Requires the frobenius condition.
Int frobenius_quotient(const QuotientSpec& qs);

/// Genus of the quotient. Requires the monotonicity condition.
Int genus_quotient(const QuotientSpec& qs);

struct FrobeniusGenus {
  Int frobenius = 0;
  Int genus = 0;

  bool operator==(const FrobeniusGenus&) const = default;
};

/// Closed form for k = 2 (generators a, (u+1)a + d, ((s+1)u+1)a + (s+1)d)
/// with d > 0 and 1 <= s <= u + 1.
FrobeniusGenus closed_form_k3(Int a, Int d, Int u, Int s, Int p);

// Precomputed correction tables phi with
//   opt_b(M) = floor(M / modulus) + phi[M mod modulus] + 1  for all M >= 0,
// one per supported s-pattern.
enum class PhiVariant { phi10, phi17, phi29 };

struct PhiTable {
  Int modulus = 0;
  std::vector<Int> values;
};

const PhiTable& phi_table(PhiVariant v);
const std::vector<Int>& phi_variant_s(PhiVariant v);
Int phi_variant_min_u(PhiVariant v);
const char* phi_variant_name(PhiVariant v);

/// Frobenius number of the quotient via the phi table of the variant's
/// s-pattern; requires d > 0 and u at least the variant minimum.
Int closed_form_phi(Int a, Int d, Int u, Int p, PhiVariant v);

// CNS specializations (s_i = b, u = b - 1) with d > 0; the hypothesis
// a >= k - 1 - (d-1)/(b-1) is exactly the monotonicity condition.
Int cns_frobenius(Int a, Int d, Int b, Int k, Int p);
Int cns_genus(Int a, Int d, Int b, Int k, Int p);

}  // namespace gcns
