#include "gcns/greedy.hpp"

#include <cassert>

namespace gcns {

namespace {

// b must come from a nondecreasing s-list: b_1 = 1, b_{i+1} = s_i*b_i + 1.
void validate_base(std::span<const Int> b, std::span<const Int> s) {
  if (b.empty()) raise(errc::parameter_domain, "base sequence must be nonempty");
  if (b.front() != 1) raise(errc::parameter_domain, "base sequence must start at 1");
  if (s.size() + 1 != b.size())
    raise(errc::parameter_domain, "s-list must have one entry fewer than the base sequence");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) raise(errc::parameter_domain, "s-list entries must be positive");
    if (i > 0 && s[i] < s[i - 1]) raise(errc::parameter_domain, "s-list must be nondecreasing");
    if (b[i + 1] != s[i] * b[i] + 1)
      raise(errc::parameter_domain, "base sequence does not match its s-list");
  }
}

}  // namespace

GreedyPresentation greedy_presentation(std::span<const Int> b, std::span<const Int> s, Int m) {
  validate_base(b, s);
  if (m < 0) raise(errc::parameter_domain, "m must be nonnegative, got " + std::to_string(m));

  GreedyPresentation pres;
  pres.m = m;
  pres.x.assign(b.size(), 0);
  Int rem = m;
  for (std::size_t i = b.size(); i-- > 0;) {
    pres.x[i] = rem / b[i];
    rem -= pres.x[i] * b[i];
  }
  assert(rem == 0);  // b_1 = 1 absorbs the final remainder
#ifndef NDEBUG
  for (std::size_t i = 0; i + 1 < b.size(); ++i) assert(pres.x[i] <= s[i]);
#endif
  return pres;
}

Int opt_b(std::span<const Int> b, std::span<const Int> s, Int m) {
  GreedyPresentation pres = greedy_presentation(b, s, m);
  Int sum = 0;
  for (Int xi : pres.x) sum += xi;
  return sum;
}

Int o_bh(std::span<const Int> b, std::span<const Int> s, Int u, Int m) {
  if (u < 1) raise(errc::parameter_domain, "u must be at least 1, got " + std::to_string(u));
  return checked_add(checked_mul(u, m), opt_b(b, s, m));
}

Int weight(std::span<const Int> b, const GreedyPresentation& pres, Int u) {
  if (pres.x.size() != b.size())
    raise(errc::length_mismatch, "presentation length does not match the base sequence");
  Int total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Int hi = checked_add(checked_mul(u, b[i]), 1);
    total = checked_add(total, checked_mul(hi, pres.x[i]));
  }
  return total;
}

WeightedPresentation make_weighted(std::span<const Int> b, GreedyPresentation pres, Int u) {
  WeightedPresentation wp;
  wp.weight = weight(b, pres, u);
  wp.coeff_sum = 0;
  for (Int xi : pres.x) wp.coeff_sum += xi;
  wp.presentation = std::move(pres);
  return wp;
}

Colex colex_compare(std::span<const Int> lhs, std::span<const Int> rhs) {
  if (lhs.size() != rhs.size())
    raise(errc::length_mismatch, "colex comparison requires vectors of equal length");
  for (std::size_t i = lhs.size(); i-- > 0;) {
    if (lhs[i] != rhs[i]) return lhs[i] < rhs[i] ? Colex::less : Colex::greater;
  }
  return Colex::equal;
}

}  // namespace gcns
