#include "gcns/gcns_model.hpp"

#include <algorithm>
#include <numeric>

namespace gcns {

namespace {

std::string int_str(Int v) { return std::to_string(v); }

}  // namespace

GcnsSpec build_spec(Int a, Int d, Int u, std::vector<Int> s) {
  // Structural checks first, then gcd, then positivity for d < 0, so the
  // reported error for a bad instance is deterministic.
  if (a < 2) raise(errc::parameter_domain, "a must be at least 2, got " + int_str(a));
  if (d == 0) raise(errc::parameter_domain, "d must be nonzero");
  if (u < 1) raise(errc::parameter_domain, "u must be at least 1, got " + int_str(u));
  if (s.empty()) raise(errc::parameter_domain, "s-list must be nonempty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1)
      raise(errc::parameter_domain, "s-list entries must be positive, got " + int_str(s[i]));
    if (i > 0 && s[i] < s[i - 1])
      raise(errc::parameter_domain, "s-list must be nondecreasing");
  }

  if (std::gcd(a, d) != 1)
    raise(errc::gcd_violation,
          "gcd(a, d) must be 1, got gcd(" + int_str(a) + ", " + int_str(d) + ") = " +
              int_str(std::gcd(a, d)));

  GcnsSpec spec;
  spec.a = a;
  spec.d = d;
  spec.u = u;
  spec.s = std::move(s);

  const Int k = static_cast<Int>(spec.s.size()) + 1;
  spec.b.reserve(k);
  spec.b.push_back(1);
  for (Int i = 0; i + 1 < k; ++i)
    spec.b.push_back(checked_add(checked_mul(spec.s[i], spec.b.back()), 1));

  spec.h.reserve(k);
  for (Int bi : spec.b) spec.h.push_back(checked_add(checked_mul(u, bi), 1));

  spec.gens.reserve(k + 1);
  spec.gens.push_back(a);
  for (Int i = 0; i < k; ++i)
    spec.gens.push_back(checked_add(checked_mul(spec.h[i], a), checked_mul(d, spec.b[i])));

  if (d < 0) {
    for (Int i = 1; i <= k; ++i) {
      if (spec.gens[i] <= 1)
        raise(errc::nonpositive_generator,
              "generator h_" + int_str(i) + "*a + d*b_" + int_str(i) + " = " +
                  int_str(spec.gens[i]) + " must exceed 1 when d < 0");
    }
  }

  return spec;
}

GcnsSpec build_cns_spec(Int a, Int d, Int b, Int k) {
  if (b < 2) raise(errc::parameter_domain, "CNS base b must be at least 2, got " + int_str(b));
  if (k < 2) raise(errc::parameter_domain, "CNS length k must be at least 2, got " + int_str(k));
  return build_spec(a, d, b - 1, std::vector<Int>(static_cast<std::size_t>(k - 1), b));
}

QuotientSpec quotient_of(GcnsSpec spec, Int p) {
  if (p < 1) raise(errc::parameter_domain, "p must be positive, got " + int_str(p));
  if (spec.a % p != 0)
    raise(errc::parameter_domain, "p = " + int_str(p) + " does not divide a = " + int_str(spec.a));
  if (p == spec.a)
    raise(errc::parameter_domain, "p = a is excluded (the quotient by a is all of N)");
  QuotientSpec qs;
  qs.q = spec.a / p;
  qs.p = p;
  qs.base = std::move(spec);
  return qs;
}

ConditionReport check_conditions(const GcnsSpec& spec, Int p) {
  if (p < 1) raise(errc::parameter_domain, "p must be positive, got " + int_str(p));
  if (spec.a % p != 0)
    raise(errc::parameter_domain, "p = " + int_str(p) + " does not divide a = " + int_str(spec.a));
  if (p == spec.a)
    raise(errc::parameter_domain, "p = a is excluded (the quotient by a is all of N)");

  ConditionReport report;

  Int s_sum = 0;
  Int s_max = 0;
  bool s_uniform = true;
  for (Int si : spec.s) {
    s_sum = checked_add(s_sum, si);
    s_max = std::max(s_max, si);
    s_uniform = s_uniform && si == spec.s.front();
  }

  const Int lhs = checked_add(checked_add(checked_mul(spec.u, spec.a), spec.d), spec.k() - 2);
  report.monotonicity_ok = lhs >= s_sum;
  if (!report.monotonicity_ok)
    report.reasons.push_back("monotonicity: u*a + d + k - 2 = " + int_str(lhs) + " < " +
                             int_str(s_sum) + " = sum(s_i)");

  const bool positive_branch = spec.d > 0 && s_max <= spec.u + 1;
  const bool strict_branch =
      s_max < spec.u + 1 && checked_add(spec.a, checked_mul(p, spec.d)) >= 0;
  report.frobenius_ok = report.monotonicity_ok && (positive_branch || strict_branch);
  if (!report.frobenius_ok)
    report.reasons.push_back(
        "frobenius: requires monotonicity and either (d > 0 with all s_i <= u+1) or "
        "(all s_i < u+1 with a + p*d >= 0)");

  report.cns = s_uniform && spec.s.front() >= 2 && spec.u == spec.s.front() - 1;
  if (!report.cns)
    report.reasons.push_back("not CNS: requires all s_i equal some b >= 2 with u = b - 1");

  return report;
}

}  // namespace gcns
