#include "gcns/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>

#include "gcns/greedy.hpp"

namespace gcns {

SemigroupOracle::SemigroupOracle(std::vector<Int> generators) {
  if (generators.empty()) raise(errc::empty_generators, "generator list is empty");
  for (Int g : generators)
    if (g < 1) raise(errc::parameter_domain, "generators must be positive, got " + std::to_string(g));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Int g = 0;
  for (Int v : generators) g = std::gcd(g, v);
  if (g != 1)
    raise(errc::gcd_violation, "generators have gcd " + std::to_string(g) + ", expected 1");

  gens_ = std::move(generators);
  const Int a0 = gens_.front();
  if (a0 == 1) {
    bound_ = 1;
    member_ = {1, 1};
    frobenius_ = -1;
    genus_ = 0;
    return;
  }

  // Smallest member per residue class mod a0, by shortest-path relaxation
  // over the residue graph. The largest of these bounds every gap.
  constexpr Int kUnreached = std::numeric_limits<Int>::max();
  std::vector<Int> smallest(static_cast<std::size_t>(a0), kUnreached);
  smallest[0] = 0;
  using Node = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> frontier;
  frontier.emplace(0, 0);
  while (!frontier.empty()) {
    auto [value, residue] = frontier.top();
    frontier.pop();
    if (value != smallest[static_cast<std::size_t>(residue)]) continue;
    for (std::size_t gi = 1; gi < gens_.size(); ++gi) {
      Int next = checked_add(value, gens_[gi]);
      Int next_residue = next % a0;
      if (next < smallest[static_cast<std::size_t>(next_residue)]) {
        smallest[static_cast<std::size_t>(next_residue)] = next;
        frontier.emplace(next, next_residue);
      }
    }
  }
  Int max_apery = 0;
  for (Int v : smallest) max_apery = std::max(max_apery, v);

  bound_ = checked_add(max_apery, a0);
  member_.assign(static_cast<std::size_t>(bound_) + 1, 0);
  member_[0] = 1;
  for (Int n = 1; n <= bound_; ++n) {
    for (Int gen : gens_) {
      if (gen > n) break;
      if (member_[static_cast<std::size_t>(n - gen)]) {
        member_[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }

  frobenius_ = -1;
  for (Int n = bound_; n >= 1; --n) {
    if (!member_[static_cast<std::size_t>(n)]) {
      frobenius_ = n;
      break;
    }
  }
  genus_ = 0;
  for (Int n = 1; n <= frobenius_; ++n)
    if (!member_[static_cast<std::size_t>(n)]) ++genus_;
}

bool SemigroupOracle::quotient_contains(Int p, Int n) const {
  if (p < 1) raise(errc::parameter_domain, "p must be positive, got " + std::to_string(p));
  if (n < 0) return false;
  return contains(checked_mul(p, n));
}

AperyTable SemigroupOracle::apery(Int w) const {
  if (w <= 0 || !contains(w))
    raise(errc::w_not_member, "w = " + std::to_string(w) + " is not a nonzero member");
  AperyTable table;
  table.modulus = w;
  table.entries.resize(static_cast<std::size_t>(w));
  for (Int r = 0; r < w; ++r) {
    Int n = r;
    while (!contains(n)) n += w;  // terminates: all values beyond bound_ are members
    table.entries[static_cast<std::size_t>(r)] = n;
  }
  return table;
}

SemigroupOracle SemigroupOracle::quotient(Int p) const {
  if (p < 1) raise(errc::parameter_domain, "p must be positive, got " + std::to_string(p));
  if (p == 1) return *this;
  if (contains(p)) return SemigroupOracle({1});

  // p is a gap, so frobenius_ >= p and the quotient is a proper semigroup.
  const Int top = frobenius_ / p;  // every x > top has p*x beyond frobenius_
  std::vector<std::uint8_t> q_member(static_cast<std::size_t>(top) + 1);
  for (Int x = 0; x <= top; ++x)
    q_member[static_cast<std::size_t>(x)] = contains(checked_mul(p, x)) ? 1 : 0;

  Int q_frobenius = -1;
  for (Int x = top; x >= 1; --x) {
    if (!q_member[static_cast<std::size_t>(x)]) {
      q_frobenius = x;
      break;
    }
  }
  assert(q_frobenius >= 1);
  Int multiplicity = top + 1;
  for (Int x = 1; x <= top; ++x) {
    if (q_member[static_cast<std::size_t>(x)]) {
      multiplicity = x;
      break;
    }
  }

  SemigroupOracle out;
  out.bound_ = q_frobenius + multiplicity;
  out.member_.assign(static_cast<std::size_t>(out.bound_) + 1, 1);
  for (Int x = 0; x <= std::min(top, out.bound_); ++x)
    out.member_[static_cast<std::size_t>(x)] = q_member[static_cast<std::size_t>(x)];
  out.frobenius_ = q_frobenius;
  out.genus_ = 0;
  for (Int x = 1; x <= q_frobenius; ++x)
    if (!out.member_[static_cast<std::size_t>(x)]) ++out.genus_;
  // Members up to frobenius + multiplicity generate the quotient; the run
  // frobenius+1 .. frobenius+multiplicity contains consecutive members, so
  // the gcd is 1. Minimality of this list is not required.
  for (Int x = multiplicity; x <= out.bound_; ++x)
    if (out.member_[static_cast<std::size_t>(x)]) out.gens_.push_back(x);
  return out;
}

AperyTable quotient_apery_oracle(const SemigroupOracle& oracle, Int p) {
  const Int a0 = oracle.generators().front();
  if (p < 1 || a0 % p != 0 || p == a0)
    raise(errc::parameter_domain,
          "p must be a proper divisor of the smallest generator " + std::to_string(a0));
  return oracle.quotient(p).apery(a0 / p);
}

Int opt_oracle(std::span<const Int> b, Int m) {
  if (m < 0) raise(errc::parameter_domain, "m must be nonnegative, got " + std::to_string(m));
  if (b.empty()) raise(errc::parameter_domain, "coin list must be nonempty");
  bool has_unit = false;
  for (Int coin : b) {
    if (coin < 1) raise(errc::parameter_domain, "coins must be positive");
    has_unit = has_unit || coin == 1;
  }
  if (!has_unit) raise(errc::parameter_domain, "coin list must contain 1");

  std::vector<Int> best(static_cast<std::size_t>(m) + 1, std::numeric_limits<Int>::max());
  best[0] = 0;
  for (Int v = 1; v <= m; ++v) {
    for (Int coin : b) {
      if (coin > v) continue;
      Int candidate = best[static_cast<std::size_t>(v - coin)] + 1;
      if (candidate < best[static_cast<std::size_t>(v)])
        best[static_cast<std::size_t>(v)] = candidate;
    }
  }
  return best[static_cast<std::size_t>(m)];
}

Int ndrp_m(const GcnsSpec& spec, Int p, Int r, Int m) {
  if (p < 1 || spec.a % p != 0 || p == spec.a)
    raise(errc::parameter_domain, "p must be a proper divisor of a");
  const Int q = spec.a / p;
  if (r < 0 || r >= q) raise(errc::parameter_domain, "r must lie in [0, a/p - 1]");
  if (m < 0) raise(errc::parameter_domain, "m must be nonnegative");

  Int target = checked_add(checked_mul(m, spec.a), checked_mul(r, p));
  Int cost = o_bh(spec.b, spec.s, spec.u, target);
  return checked_add(checked_mul(cost, q),
                     checked_mul(checked_add(checked_mul(m, q), r), spec.d));
}

}  // namespace gcns
