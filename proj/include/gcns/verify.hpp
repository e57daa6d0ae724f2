#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcns/int_math.hpp"

namespace gcns {

enum class Quantity { frobenius, genus, apery };

const char* quantity_name(Quantity q);

// Cartesian sweep over (a, d, u, s-pattern, p, quantity). Instances whose
// spec fails validation or whose formula hypothesis does not hold are
// counted as skipped; everything else is compared formula-vs-oracle.
struct VerifyGrid {
  std::vector<Int> a_values;
  std::vector<Int> d_values;
  std::vector<Int> u_values;
  std::vector<std::vector<Int>> s_patterns;
  std::optional<std::vector<Int>> p_values;  // nullopt: all proper divisors of a
  std::vector<Quantity> quantities{Quantity::frobenius, Quantity::genus, Quantity::apery};

  std::string describe() const;
};

/// Smoke grid: composite a <= 120, d in {-3,-1,1,2,3,5}, u in 1..5, the
/// eight stock s-patterns, p over proper divisors, all quantities.
VerifyGrid default_grid();

// One compared instance; values are rendered exactly (Apery tables as
// |-joined entries) so every quantity fits one row.
struct VerifyOutcome {
  Int a = 0;
  Int d = 0;
  Int u = 0;
  std::vector<Int> s;
  Int p = 0;
  Quantity quantity = Quantity::frobenius;
  std::string formula_value;
  std::string oracle_value;
  bool match = false;
};

struct VerificationReport {
  std::string grid_description;
  Int total_instances = 0;
  Int agreements = 0;
  Int skipped_condition_failures = 0;
  std::vector<VerifyOutcome> mismatches;
  std::vector<VerifyOutcome> rows;  // every compared instance; only kept on request
  double elapsed_seconds = 0.0;

  bool ok() const { return mismatches.empty(); }
};

/// threads = 0 picks the hardware concurrency. Instance order in the report
/// is the canonical grid order regardless of the thread count.
VerificationReport run_verification(const VerifyGrid& grid, int threads = 0,
                                    bool collect_rows = false);

std::vector<Int> proper_divisors(Int a);

}  // namespace gcns
