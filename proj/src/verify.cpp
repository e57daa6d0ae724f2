#include "gcns/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gcns/gcns_model.hpp"
#include "gcns/oracle.hpp"
#include "gcns/quotient_formulas.hpp"

namespace gcns {

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::frobenius: return "frobenius";
    case Quantity::genus: return "genus";
    case Quantity::apery: return "apery";
  }
  return "unknown";
}

std::vector<Int> proper_divisors(Int a) {
  std::vector<Int> out;
  for (Int p = 1; p < a; ++p)
    if (a % p == 0) out.push_back(p);
  return out;
}

namespace {

std::string join(const std::vector<Int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string table_str(const AperyTable& table) { return join(table.entries, "|"); }

struct ComboResult {
  Int total = 0;
  Int agreements = 0;
  Int skipped = 0;
  std::vector<VerifyOutcome> mismatches;
  std::vector<VerifyOutcome> rows;
};

struct Combo {
  Int a, d, u;
  const std::vector<Int>* s;
};

ComboResult run_combo(const Combo& combo, const VerifyGrid& grid, bool collect_rows) {
  ComboResult res;
  const std::vector<Int> ps =
      grid.p_values ? *grid.p_values : proper_divisors(combo.a);
  const Int per_p = static_cast<Int>(grid.quantities.size());

  GcnsSpec spec;
  bool spec_valid = true;
  try {
    spec = build_spec(combo.a, combo.d, combo.u, *combo.s);
  } catch (const Error&) {
    spec_valid = false;
  }
  if (!spec_valid) {
    res.total = static_cast<Int>(ps.size()) * per_p;
    res.skipped = res.total;
    return res;
  }

  std::optional<SemigroupOracle> base;
  for (Int p : ps) {
    res.total += per_p;
    if (p < 1 || spec.a % p != 0 || p == spec.a) {
      res.skipped += per_p;
      continue;
    }
    ConditionReport cond = check_conditions(spec, p);

    bool any_compare = false;
    for (Quantity quantity : grid.quantities) {
      bool ok = quantity == Quantity::frobenius ? cond.frobenius_ok : cond.monotonicity_ok;
      any_compare = any_compare || ok;
    }
    if (!any_compare) {
      res.skipped += per_p;
      continue;
    }

    if (!base) base.emplace(spec.gens);
    SemigroupOracle qo = base->quotient(p);
    QuotientSpec qs = quotient_of(spec, p);

    for (Quantity quantity : grid.quantities) {
      bool ok = quantity == Quantity::frobenius ? cond.frobenius_ok : cond.monotonicity_ok;
      if (!ok) {
        ++res.skipped;
        continue;
      }
      VerifyOutcome outcome;
      outcome.a = combo.a;
      outcome.d = combo.d;
      outcome.u = combo.u;
      outcome.s = *combo.s;
      outcome.p = p;
      outcome.quantity = quantity;
      switch (quantity) {
        case Quantity::frobenius: {
          Int formula = frobenius_quotient(qs);
          Int oracle = qo.frobenius();
          outcome.match = formula == oracle;
          outcome.formula_value = std::to_string(formula);
          outcome.oracle_value = std::to_string(oracle);
          break;
        }
        case Quantity::genus: {
          Int formula = genus_quotient(qs);
          Int oracle = qo.genus();
          outcome.match = formula == oracle;
          outcome.formula_value = std::to_string(formula);
          outcome.oracle_value = std::to_string(oracle);
          break;
        }
        case Quantity::apery: {
          AperyTable formula = apery_quotient_formula(qs);
          AperyTable oracle = qo.apery(qs.q);
          outcome.match = formula == oracle;
          outcome.formula_value = table_str(formula);
          outcome.oracle_value = table_str(oracle);
          break;
        }
      }
      if (outcome.match)
        ++res.agreements;
      else
        res.mismatches.push_back(outcome);
      if (collect_rows) res.rows.push_back(std::move(outcome));
    }
  }
  return res;
}

}  // namespace

std::string VerifyGrid::describe() const {
  auto list_or_span = [](const std::vector<Int>& values) {
    if (values.size() <= 12) return join(values, ",");
    return std::to_string(values.size()) + " values in [" + std::to_string(values.front()) +
           "," + std::to_string(values.back()) + "]";
  };
  std::ostringstream out;
  out << "a[" << list_or_span(a_values) << "] d[" << join(d_values, ",") << "] u["
      << join(u_values, ",") << "] s[";
  for (std::size_t i = 0; i < s_patterns.size(); ++i) {
    if (i) out << "; ";
    out << join(s_patterns[i], ",");
  }
  out << "] p[" << (p_values ? join(*p_values, ",") : std::string("proper divisors"))
      << "] quantities[";
  for (std::size_t i = 0; i < quantities.size(); ++i) {
    if (i) out << ",";
    out << quantity_name(quantities[i]);
  }
  out << "]";
  return out.str();
}

VerifyGrid default_grid() {
  VerifyGrid grid;
  for (Int a = 4; a <= 120; ++a) {
    bool composite = false;
    for (Int f = 2; f * f <= a; ++f)
      if (a % f == 0) composite = true;
    if (composite) grid.a_values.push_back(a);
  }
  grid.d_values = {-3, -1, 1, 2, 3, 5};
  grid.u_values = {1, 2, 3, 4, 5};
  grid.s_patterns = {{2}, {3}, {2, 2}, {2, 3}, {3, 4}, {2, 2, 3}, {2, 2, 4}, {3, 4, 4}};
  return grid;
}

VerificationReport run_verification(const VerifyGrid& grid, int threads, bool collect_rows) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<Combo> combos;
  combos.reserve(grid.a_values.size() * grid.d_values.size() * grid.u_values.size() *
                 grid.s_patterns.size());
  for (Int a : grid.a_values)
    for (Int d : grid.d_values)
      for (Int u : grid.u_values)
        for (const auto& s : grid.s_patterns) combos.push_back({a, d, u, &s});

  std::vector<ComboResult> results(combos.size());
  unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  if (combos.size() < n_threads) n_threads = std::max<unsigned>(1, combos.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= combos.size()) return;
      try {
        results[i] = run_combo(combos[i], grid, collect_rows);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerificationReport report;
  report.grid_description = grid.describe();
  for (auto& res : results) {
    report.total_instances += res.total;
    report.agreements += res.agreements;
    report.skipped_condition_failures += res.skipped;
    for (auto& m : res.mismatches) report.mismatches.push_back(std::move(m));
    for (auto& r : res.rows) report.rows.push_back(std::move(r));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gcns
