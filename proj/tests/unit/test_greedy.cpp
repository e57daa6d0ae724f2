#include <functional>
#include <vector>

#include "doctest.h"
#include "gcns/greedy.hpp"
#include "gcns/oracle.hpp"

using namespace gcns;

namespace {

std::vector<Int> base_of(const std::vector<Int>& s) {
  std::vector<Int> b{1};
  for (Int si : s) b.push_back(si * b.back() + 1);
  return b;
}

Int coeff_sum(const GreedyPresentation& pres) {
  Int sum = 0;
  for (Int xi : pres.x) sum += xi;
  return sum;
}

// All nondecreasing s-lists with `len` entries in [1, max_entry].
void each_s_list(int len, Int max_entry, const std::function<void(const std::vector<Int>&)>& fn,
                 std::vector<Int>& prefix) {
  if (static_cast<int>(prefix.size()) == len) {
    fn(prefix);
    return;
  }
  for (Int v = prefix.empty() ? 1 : prefix.back(); v <= max_entry; ++v) {
    prefix.push_back(v);
    each_s_list(len, max_entry, fn, prefix);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("greedy presentation reference values") {
  std::vector<Int> s1{2, 2, 3};
  auto b1 = base_of(s1);
  CHECK(greedy_presentation(b1, s1, 45).x == std::vector<Int>{1, 0, 0, 2});

  std::vector<Int> s2{3, 4, 4};
  auto b2 = base_of(s2);
  CHECK(greedy_presentation(b2, s2, 234).x == std::vector<Int>{2, 2, 1, 3});

  CHECK(greedy_presentation(b1, s1, 0).x == std::vector<Int>{0, 0, 0, 0});

  std::vector<Int> s3{2, 3};
  auto b3 = base_of(s3);
  CHECK(b3 == std::vector<Int>{1, 3, 10});
  CHECK(greedy_presentation(b3, s3, 9).x == std::vector<Int>{0, 3, 0});
}

TEST_CASE("opt_b and o_bh reference values") {
  std::vector<Int> s1{2, 2, 3};
  auto b1 = base_of(s1);
  CHECK(opt_b(b1, s1, 45) == 3);
  CHECK(opt_b(b1, s1, 0) == 0);
  CHECK(o_bh(b1, s1, 4, 45) == 183);

  std::vector<Int> s3{2, 3};
  auto b3 = base_of(s3);
  CHECK(opt_b(b3, s3, 9) == 3);
  CHECK(o_bh(b3, s3, 2, 9) == 21);
  CHECK(o_bh(b3, s3, 1, 0) == 0);
}

TEST_CASE("weight reference values and identity") {
  std::vector<Int> s{2, 2, 3};
  auto b = base_of(s);
  GreedyPresentation p45 = greedy_presentation(b, s, 45);
  CHECK(weight(b, p45, 4) == 183);
  CHECK(weight(b, GreedyPresentation{0, {0, 0, 0, 0}}, 4) == 0);
  CHECK(weight(b, GreedyPresentation{5, {2, 1, 0, 0}}, 4) == 23);

  for (Int u : {1, 2, 4}) {
    for (Int m = 0; m <= 300; ++m) {
      GreedyPresentation pres = greedy_presentation(b, s, m);
      WeightedPresentation wp = make_weighted(b, pres, u);
      CHECK(wp.weight == u * m + wp.coeff_sum);
      CHECK(wp.coeff_sum == opt_b(b, s, m));
    }
  }

  CHECK_THROWS_AS(weight(b, GreedyPresentation{0, {0, 0}}, 1), Error);
}

TEST_CASE("colex_compare orders from the highest index") {
  std::vector<Int> lhs{2, 1, 0, 0};
  std::vector<Int> rhs{1, 0, 0, 2};
  CHECK(colex_compare(lhs, rhs) == Colex::less);
  CHECK(colex_compare(rhs, rhs) == Colex::equal);
  std::vector<Int> a{0, 3, 0};
  std::vector<Int> b{2, 2, 0};
  CHECK(colex_compare(a, b) == Colex::greater);
  CHECK_THROWS_AS(colex_compare(lhs, a), Error);
}

TEST_CASE("greedy matches the change-making optimum for every small s-list") {
  // every nondecreasing s-list with k <= 5 and entries <= 6, all m <= 10000
  for (int len = 1; len <= 4; ++len) {
    std::vector<Int> prefix;
    each_s_list(len, 6, [&](const std::vector<Int>& s) {
      auto b = base_of(s);
      // one DP sweep per base sequence, then compare every m
      std::vector<Int> best(10001, 1 << 30);
      best[0] = 0;
      for (Int m = 1; m <= 10000; ++m)
        for (Int coin : b)
          if (coin <= m) best[m] = std::min(best[m], best[m - coin] + 1);
      for (Int m = 0; m <= 10000; ++m) CHECK(opt_b(b, s, m) == best[m]);
    }, prefix);
  }

  // the same equivalence through the oracle op itself
  for (const auto& s : {std::vector<Int>{2}, {2, 3}, {3, 4, 4}}) {
    auto b = base_of(s);
    for (Int m = 0; m <= 400; ++m) CHECK(opt_b(b, s, m) == opt_oracle(b, m));
  }
}

TEST_CASE("greedy digit conditions and uniqueness on small targets") {
  for (const auto& s : {std::vector<Int>{2}, {2, 3}, {2, 2, 3}, {3, 4, 4}}) {
    auto b = base_of(s);
    const Int k = static_cast<Int>(b.size());
    for (Int m = 0; m <= 500; ++m) {
      GreedyPresentation pres = greedy_presentation(b, s, m);

      Int total = 0;
      for (Int i = 0; i < k; ++i) total += pres.x[i] * b[i];
      CHECK(total == m);
      CHECK(pres.x[k - 1] == m / b[k - 1]);
      for (Int i = 0; i + 1 < k; ++i) CHECK(pres.x[i] <= s[i]);
      for (Int i = 1; i + 1 < k; ++i) {
        if (pres.x[i] == s[i])
          for (Int j = 0; j < i; ++j) CHECK(pres.x[j] == 0);
      }

      // exhaustive count of vectors satisfying the digit conditions,
      // walking indices k-2 .. 0 with x_k pinned by condition (1)
      Int matches = 0;
      std::function<void(Int, Int)> walk = [&](Int i, Int rem) {
        if (i < 0) {
          if (rem == 0) ++matches;
          return;
        }
        for (Int v = 0; v <= s[i] && v * b[i] <= rem; ++v) {
          if (v == s[i] && i >= 1) {
            // a capped digit above the lowest position forces lower zeros
            if (rem - v * b[i] == 0) ++matches;
          } else {
            walk(i - 1, rem - v * b[i]);
          }
        }
      };
      walk(k - 2, m - (m / b[k - 1]) * b[k - 1]);
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("colex order implies weight order when s_i <= u+1") {
  struct Case {
    std::vector<Int> s;
    Int u;
    bool strict;  // all s_i < u + 1
  };
  for (const Case& c : {Case{{2}, 1, false}, Case{{2}, 2, true}, Case{{2, 3}, 2, false},
                        Case{{2, 3}, 3, true}, Case{{2, 2, 3}, 2, false},
                        Case{{3, 4, 4}, 4, true}}) {
    auto b = base_of(c.s);
    const Int top = 320;
    std::vector<GreedyPresentation> pres;
    std::vector<Int> w;
    for (Int m = 0; m <= top; ++m) {
      pres.push_back(greedy_presentation(b, c.s, m));
      w.push_back(weight(b, pres.back(), c.u));
    }
    for (Int m1 = 0; m1 <= top; ++m1) {
      for (Int m2 = m1 + 1; m2 <= top; ++m2) {
        Colex order = colex_compare(pres[m1].x, pres[m2].x);
        CHECK(order != Colex::equal);  // presentations determine their value
        Int lo = order == Colex::less ? m1 : m2;
        Int hi = order == Colex::less ? m2 : m1;
        CHECK(w[lo] <= w[hi]);
        if (c.strict) CHECK(w[lo] < w[hi]);
      }
    }
  }
}

TEST_CASE("greedy input validation") {
  std::vector<Int> s{2};
  auto b = base_of(s);
  CHECK_THROWS_AS(greedy_presentation(b, s, -1), Error);
  std::vector<Int> bad_b{1, 4};
  CHECK_THROWS_AS(greedy_presentation(bad_b, s, 3), Error);
  std::vector<Int> bad_s{2, 2};
  CHECK_THROWS_AS(greedy_presentation(b, bad_s, 3), Error);
  CHECK_THROWS_AS(o_bh(b, s, 0, 3), Error);
}
