#include "gcns/quotient_formulas.hpp"

#include <cassert>
#include <numeric>

namespace gcns {

namespace {

void require_monotonicity(const QuotientSpec& qs) {
  if (!check_conditions(qs.base, qs.p).monotonicity_ok)
    raise(errc::condition_not_met, "monotonicity condition u*a + d + k - 2 >= sum(s_i) fails");
}

Int coeff_sum(const GreedyPresentation& pres) {
  Int sum = 0;
  for (Int xi : pres.x) sum += xi;
  return sum;
}

}  // namespace

AperyTable apery_quotient_formula(const QuotientSpec& qs) {
  require_monotonicity(qs);
  const GcnsSpec& spec = qs.base;

  AperyTable table;
  table.modulus = qs.q;
  table.entries.assign(static_cast<std::size_t>(qs.q), 0);
  for (Int r = 0; r < qs.q; ++r) {
    GreedyPresentation pres = greedy_presentation(spec.b, spec.s, checked_mul(r, qs.p));
    Int w = weight(spec.b, pres, spec.u);
    Int value = checked_add(checked_mul(w, qs.q), checked_mul(r, spec.d));
    assert(value >= 0);
    // gcd(d, q) = 1, so r -> d*r mod q enumerates every residue once.
    table.entries[static_cast<std::size_t>(mod_nonneg(spec.d * r, qs.q))] = value;
  }
  return table;
}

Int frobenius_quotient(const QuotientSpec& qs) {
  const GcnsSpec& spec = qs.base;
  if (!check_conditions(spec, qs.p).frobenius_ok)
    raise(errc::condition_not_met,
          "frobenius condition fails: need monotonicity and either (d > 0 with all "
          "s_i <= u+1) or (all s_i < u+1 with a + p*d >= 0)");

  Int sum = coeff_sum(greedy_presentation(spec.b, spec.s, spec.a - qs.p));
  Int ua_d = checked_add(checked_mul(spec.u, spec.a), spec.d);
  return checked_sub(checked_add(checked_mul(sum, qs.q), checked_mul(qs.q - 1, ua_d)), qs.q);
}

Int genus_quotient(const QuotientSpec& qs) {
  require_monotonicity(qs);
  const GcnsSpec& spec = qs.base;

  Int twice = 0;
  for (Int r = 1; r < qs.q; ++r)
    twice = checked_add(twice, 2 * opt_b(spec.b, spec.s, checked_mul(r, qs.p)));
  Int ua_d = checked_add(checked_mul(spec.u, spec.a), spec.d);
  twice = checked_add(twice, checked_mul(ua_d - 1, qs.q - 1));
  if (twice % 2 != 0)
    raise(errc::integrality_violation, "genus formula produced an odd doubled total");
  return twice / 2;
}

FrobeniusGenus closed_form_k3(Int a, Int d, Int u, Int s, Int p) {
  if (d <= 0) raise(errc::parameter_domain, "closed form requires d > 0");
  if (s < 1 || s > u + 1)
    raise(errc::parameter_domain, "closed form requires 1 <= s <= u + 1");
  QuotientSpec qs = quotient_of(build_spec(a, d, u, {s}), p);
  const Int q = qs.q;

  Int head = a - p - s * ((a - p) / (s + 1));
  Int ua_d = checked_add(checked_mul(u, a), d);
  FrobeniusGenus out;
  out.frobenius =
      checked_sub(checked_add(checked_mul(head, q), checked_mul(q - 1, ua_d)), q);

  Int twice = checked_mul(q - 1, checked_sub(checked_add(ua_d, a), 1));
  if (twice % 2 != 0)
    raise(errc::integrality_violation, "genus closed form produced an odd doubled total");
  Int floors = 0;
  for (Int r = 1; r < q; ++r) floors += (r * p) / (s + 1);
  out.genus = checked_sub(twice / 2, checked_mul(s, floors));
  return out;
}

namespace {

const PhiTable kPhi10{10, {-1, 0, 1, 0, 1, 2, 1, 2, 3, 2}};
const PhiTable kPhi17{17, {-1, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3, 4, 2, 3, 4, 5, 3}};
const PhiTable kPhi29{29, {-1, 0, 1, 0, 1, 2, 1, 0, 1, 2, 1, 2, 3, 2, 1,
                           2,  3, 2, 3, 4, 3, 2, 3, 4, 3, 4, 5, 4, 3}};

const std::vector<Int> kPhi10S{2, 3};
const std::vector<Int> kPhi17S{3, 4};
const std::vector<Int> kPhi29S{2, 2, 4};

}  // namespace

const PhiTable& phi_table(PhiVariant v) {
  switch (v) {
    case PhiVariant::phi10: return kPhi10;
    case PhiVariant::phi17: return kPhi17;
    case PhiVariant::phi29: return kPhi29;
  }
  raise(errc::parameter_domain, "unknown phi variant");
}

const std::vector<Int>& phi_variant_s(PhiVariant v) {
  switch (v) {
    case PhiVariant::phi10: return kPhi10S;
    case PhiVariant::phi17: return kPhi17S;
    case PhiVariant::phi29: return kPhi29S;
  }
  raise(errc::parameter_domain, "unknown phi variant");
}

Int phi_variant_min_u(PhiVariant v) { return v == PhiVariant::phi10 ? 2 : 3; }

const char* phi_variant_name(PhiVariant v) {
  switch (v) {
    case PhiVariant::phi10: return "phi10";
    case PhiVariant::phi17: return "phi17";
    case PhiVariant::phi29: return "phi29";
  }
  return "unknown";
}

Int closed_form_phi(Int a, Int d, Int u, Int p, PhiVariant v) {
  if (d <= 0) raise(errc::parameter_domain, "phi closed form requires d > 0");
  if (u < phi_variant_min_u(v))
    raise(errc::parameter_domain, std::string("phi variant ") + phi_variant_name(v) +
                                      " requires u >= " + std::to_string(phi_variant_min_u(v)));
  // Validates a, gcd(a, d), and p.
  QuotientSpec qs = quotient_of(build_spec(a, d, u, phi_variant_s(v)), p);

  const PhiTable& table = phi_table(v);
  const Int bk = table.modulus;
  Int ua_d = checked_add(checked_mul(u, a), d);
  Int inner = checked_add(checked_add((a - p) / bk, ua_d),
                          table.values[static_cast<std::size_t>((a - p) % bk)]);
  return checked_sub(checked_mul(qs.q, inner), ua_d);
}

namespace {

QuotientSpec cns_quotient(Int a, Int d, Int b, Int k, Int p) {
  if (d <= 0) raise(errc::parameter_domain, "CNS closed forms require d > 0");
  GcnsSpec spec = build_cns_spec(a, d, b, k);
  // a >= k - 1 - (d-1)/(b-1), evaluated without division.
  if (checked_mul(a, b - 1) < checked_sub(checked_mul(k - 1, b - 1), d - 1))
    raise(errc::condition_not_met, "CNS hypothesis a >= k - 1 - (d-1)/(b-1) fails");
  return quotient_of(std::move(spec), p);
}

}  // namespace

Int cns_frobenius(Int a, Int d, Int b, Int k, Int p) {
  return frobenius_quotient(cns_quotient(a, d, b, k, p));
}

Int cns_genus(Int a, Int d, Int b, Int k, Int p) {
  return genus_quotient(cns_quotient(a, d, b, k, p));
}

}  // namespace gcns
