#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gcns/gcns_model.hpp"
#include "gcns/oracle.hpp"

using namespace gcns;

TEST_CASE("two-generator oracle matches hand values") {
  SemigroupOracle oracle({5, 7});
  CHECK(oracle.frobenius() == 23);
  CHECK(oracle.genus() == 12);
  CHECK(oracle.contains(0));
  CHECK(!oracle.contains(23));
  CHECK(oracle.contains(24));
  CHECK(!oracle.contains(-3));

  AperyTable table = oracle.apery(5);
  CHECK(table.modulus == 5);
  CHECK(table.entries == std::vector<Int>{0, 21, 7, 28, 14});
}

TEST_CASE("oracle of <1> is all of N") {
  SemigroupOracle oracle({1});
  CHECK(oracle.frobenius() == -1);
  CHECK(oracle.genus() == 0);
  CHECK(oracle.contains(123456));
  AperyTable table = oracle.apery(4);
  CHECK(table.entries == std::vector<Int>{0, 1, 2, 3});
}

TEST_CASE("membership around the <5,16,38> gap at 49") {
  SemigroupOracle oracle({5, 16, 38});
  CHECK(!oracle.contains(49));
  for (Int n = 50; n <= 54; ++n) CHECK(oracle.contains(n));
  CHECK(!oracle.quotient_contains(1, 49));
}

TEST_CASE("oracle construction errors") {
  CHECK_THROWS_AS(SemigroupOracle(std::vector<Int>{}), Error);
  CHECK_THROWS_AS(SemigroupOracle({4, 6}), Error);
  CHECK_THROWS_AS(SemigroupOracle({0, 3}), Error);
  SemigroupOracle oracle({5, 7});
  CHECK_THROWS_AS(oracle.apery(6), Error);   // 6 is not a member
  CHECK_THROWS_AS(oracle.apery(0), Error);
  CHECK_THROWS_AS(oracle.quotient(0), Error);
  CHECK_THROWS_AS(oracle.quotient_contains(0, 3), Error);
}

TEST_CASE("membership table is closed and cofinal") {
  for (auto gens : {std::vector<Int>{5, 7}, {4, 7, 13}, {5, 16, 38}}) {
    SemigroupOracle oracle(gens);
    const Int bound = oracle.bound();
    std::vector<Int> members;
    for (Int n = 0; n <= bound; ++n)
      if (oracle.contains(n)) members.push_back(n);
    for (Int x : members) {
      if (x == 0) continue;
      for (Int y : members) {
        if (x + y > bound) break;
        CHECK(oracle.contains(x + y));
      }
    }
    for (Int n = oracle.frobenius() + 1; n <= bound; ++n) CHECK(oracle.contains(n));
    // closure is exactly generated: n is a member iff n == 0 or n - g is for some g
    for (Int n = 1; n <= bound; ++n) {
      bool reachable = false;
      for (Int g : gens)
        if (g <= n && oracle.contains(n - g)) reachable = true;
      CHECK(oracle.contains(n) == reachable);
    }
  }
}

TEST_CASE("apery entries are minimal and bound the table") {
  SemigroupOracle oracle({4, 7, 13});
  for (Int w : {4, 7, 11}) {
    AperyTable table = oracle.apery(w);
    CHECK(table.entries[0] == 0);
    Int max_entry = 0;
    for (Int r = 0; r < w; ++r) {
      Int entry = table.entries[static_cast<std::size_t>(r)];
      CHECK(entry % w == r);
      CHECK(oracle.contains(entry));
      CHECK(!oracle.contains(entry - w));
      max_entry = std::max(max_entry, entry);
      for (Int n = r; n < entry; n += w) CHECK(!oracle.contains(n));
    }
    if (w == 4) CHECK(max_entry <= oracle.bound());
  }
}

TEST_CASE("oracle agrees with the classical Apery identities") {
  for (auto gens : {std::vector<Int>{5, 7}, {4, 7, 13}, {5, 16, 38}, {6, 10, 15}}) {
    SemigroupOracle oracle(gens);
    Int a0 = oracle.generators().front();
    AperyTable table = oracle.apery(a0);
    Int max_entry = 0;
    Int sum = 0;
    for (Int entry : table.entries) {
      max_entry = std::max(max_entry, entry);
      sum += entry;
    }
    CHECK(oracle.frobenius() == max_entry - a0);
    // genus * a0 = sum - a0*(a0-1)/2, exactly
    CHECK(oracle.genus() * a0 == sum - a0 * (a0 - 1) / 2);
  }
}

TEST_CASE("quotient oracle membership and special cases") {
  SemigroupOracle oracle({5, 7});
  SemigroupOracle same = oracle.quotient(1);
  for (Int n = 0; n <= oracle.bound(); ++n) CHECK(same.contains(n) == oracle.contains(n));

  SemigroupOracle all = oracle.quotient(35);  // 35 = 5*7 is a member
  CHECK(all.frobenius() == -1);
  CHECK(all.generators() == std::vector<Int>{1});
  CHECK(oracle.quotient_contains(35, 1));

  SemigroupOracle half = oracle.quotient(2);
  for (Int n = 0; n <= half.bound(); ++n)
    CHECK(half.contains(n) == oracle.contains(2 * n));
  // every member of the semigroup lies in its quotient
  for (Int n = 0; n <= oracle.bound(); ++n)
    if (oracle.contains(n)) CHECK(half.contains(n));
}

TEST_CASE("quotient oracle generators regenerate the same semigroup") {
  SemigroupOracle oracle({9, 23, 47});
  for (Int p : {2, 3, 4}) {
    SemigroupOracle qo = oracle.quotient(p);
    SemigroupOracle rebuilt(qo.generators());
    CHECK(rebuilt.frobenius() == qo.frobenius());
    CHECK(rebuilt.genus() == qo.genus());
    for (Int n = 0; n <= std::max(qo.bound(), rebuilt.bound()); ++n)
      CHECK(rebuilt.contains(n) == qo.contains(n));
  }
}

TEST_CASE("quotient of the a=50 reference instance") {
  GcnsSpec spec = build_spec(50, 1, 4, {2, 2, 3});
  SemigroupOracle oracle(spec.gens);
  SemigroupOracle qo = oracle.quotient(5);
  CHECK(qo.frobenius() == 1829);

  AperyTable table = quotient_apery_oracle(oracle, 5);
  CHECK(table.modulus == 10);
  CHECK(table.entries[0] == 0);
  CHECK(table.entries[9] == 1839);
}

TEST_CASE("quotient_apery_oracle at p=1 is the plain apery table") {
  SemigroupOracle oracle({6, 10, 15});
  CHECK(quotient_apery_oracle(oracle, 1) == oracle.apery(6));
  CHECK_THROWS_AS(quotient_apery_oracle(oracle, 6), Error);
  CHECK_THROWS_AS(quotient_apery_oracle(oracle, 4), Error);
}

TEST_CASE("opt_oracle reference values and validation") {
  std::vector<Int> b1{1, 3, 7, 22};
  CHECK(opt_oracle(b1, 45) == 3);
  CHECK(opt_oracle(b1, 0) == 0);
  std::vector<Int> b2{1, 3, 10};
  CHECK(opt_oracle(b2, 9) == 3);
  std::vector<Int> no_unit{2, 3};
  CHECK_THROWS_AS(opt_oracle(no_unit, 5), Error);
  CHECK_THROWS_AS(opt_oracle(b1, -1), Error);
}

TEST_CASE("ndrp_m reference values and monotonicity") {
  GcnsSpec spec = build_spec(50, 1, 4, {2, 2, 3});
  CHECK(ndrp_m(spec, 5, 9, 0) == 1839);
  CHECK(ndrp_m(spec, 5, 0, 0) == 0);
  CHECK(ndrp_m(spec, 5, 9, 1) > 1839);
  CHECK_THROWS_AS(ndrp_m(spec, 3, 0, 0), Error);
  CHECK_THROWS_AS(ndrp_m(spec, 5, 10, 0), Error);
  CHECK_THROWS_AS(ndrp_m(spec, 5, 0, -1), Error);

  // minimum over m in [0, 3] sits at m = 0 whenever monotonicity holds
  for (Int d : {-3, 1, 2}) {
    for (Int u : {1, 3}) {
      GcnsSpec probe;
      try {
        probe = build_spec(30, d, u, {2, 2});
      } catch (const Error&) {
        continue;
      }
      for (Int p : {1, 2, 5, 15}) {
        if (!check_conditions(probe, p).monotonicity_ok) continue;
        for (Int r = 0; r < 30 / p; ++r) {
          Int at0 = ndrp_m(probe, p, r, 0);
          for (Int m = 1; m <= 3; ++m) {
            CHECK(ndrp_m(probe, p, r, m) > ndrp_m(probe, p, r, m - 1));
            CHECK(ndrp_m(probe, p, r, m) >= at0);
          }
        }
      }
    }
  }
}
