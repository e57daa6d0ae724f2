// Command-line front end: construction (show, greedy), computation
// (frobenius, genus, apery) with formula/oracle/auto method selection, and
// grid verification (verify).
//
// Exit codes: 0 ok, 1 verification mismatch, 2 validation error,
// 3 condition not met under --method formula.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcns/gcns_model.hpp"
#include "gcns/greedy.hpp"
#include "gcns/oracle.hpp"
#include "gcns/quotient_formulas.hpp"
#include "gcns/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gcns;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCondition = 3;

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      raise(errc::parameter_domain, "cannot parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) raise(errc::parameter_domain, what + " list is empty");
  return out;
}

// "lo..hi" or a comma list.
std::vector<Int> parse_list_or_range(const std::string& text, const std::string& what) {
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    Int lo = parse_int_list(text.substr(0, dots), what).front();
    Int hi = parse_int_list(text.substr(dots + 2), what).front();
    if (hi < lo) raise(errc::parameter_domain, what + " range is empty");
    std::vector<Int> out;
    for (Int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  return parse_int_list(text, what);
}

std::string list_str(const std::vector<Int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string join(const std::vector<Int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

json spec_json(const GcnsSpec& spec) {
  json j;
  j["a"] = spec.a;
  j["d"] = spec.d;
  j["u"] = spec.u;
  j["s"] = spec.s;
  j["B"] = spec.b;
  j["H"] = spec.h;
  j["A"] = spec.gens;
  return j;
}

json conditions_json(const ConditionReport& report) {
  json j;
  j["monotonicity_ok"] = report.monotonicity_ok;
  j["frobenius_ok"] = report.frobenius_ok;
  j["cns"] = report.cns;
  j["reasons"] = report.reasons;
  return j;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_spec_text(const GcnsSpec& spec) {
  std::cout << "a = " << spec.a << "\n"
            << "d = " << spec.d << "\n"
            << "u = " << spec.u << "\n"
            << "s = " << list_str(spec.s) << "\n"
            << "B = " << list_str(spec.b) << "\n"
            << "H = " << list_str(spec.h) << "\n"
            << "A = " << list_str(spec.gens) << "\n";
}

void print_conditions_text(const ConditionReport& report) {
  std::cout << "monotonicity_ok = " << (report.monotonicity_ok ? "true" : "false") << "\n"
            << "frobenius_ok = " << (report.frobenius_ok ? "true" : "false") << "\n"
            << "cns = " << (report.cns ? "true" : "false") << "\n";
  for (const auto& reason : report.reasons) std::cout << "  - " << reason << "\n";
}

struct ComputeArgs {
  Int a = 0;
  Int d = 0;
  Int u = 0;
  std::string s_text;
  Int p = 1;
  std::string method = "auto";
  std::string format = "text";
};

void check_format(const std::string& format, bool allow_csv) {
  if (format == "text" || format == "json") return;
  if (format == "csv" && allow_csv) return;
  raise(errc::parameter_domain, "unsupported format '" + format + "'" +
                                    (format == "csv" ? " (csv is only available for verify)" : ""));
}

int cmd_show(const ComputeArgs& args) {
  check_format(args.format, false);
  GcnsSpec spec = build_spec(args.a, args.d, args.u, parse_int_list(args.s_text, "s"));
  ConditionReport cond = check_conditions(spec, args.p);
  if (args.format == "json") {
    json j;
    j["spec"] = spec_json(spec);
    j["p"] = args.p;
    j["conditions"] = conditions_json(cond);
    print_json(j);
  } else {
    print_spec_text(spec);
    std::cout << "p = " << args.p << "\n";
    print_conditions_text(cond);
  }
  return kExitOk;
}

enum class Method { formula, oracle, automatic };

Method parse_method(const std::string& text) {
  if (text == "formula") return Method::formula;
  if (text == "oracle") return Method::oracle;
  if (text == "auto") return Method::automatic;
  raise(errc::parameter_domain, "unsupported method '" + text + "'");
}

// Single-quantity computation with the path that actually ran.
struct Computed {
  json value;
  std::string text;
  std::string path;
};

Computed compute_quantity(const QuotientSpec& qs, Quantity quantity, Method method) {
  const ConditionReport cond = check_conditions(qs.base, qs.p);
  const bool formula_ok =
      quantity == Quantity::frobenius ? cond.frobenius_ok : cond.monotonicity_ok;
  bool use_formula = false;
  switch (method) {
    case Method::formula: use_formula = true; break;  // refuses below when not ok
    case Method::oracle: use_formula = false; break;
    case Method::automatic: use_formula = formula_ok; break;
  }

  Computed out;
  out.path = use_formula ? "formula" : "oracle";
  if (use_formula) {
    switch (quantity) {
      case Quantity::frobenius: {
        Int v = frobenius_quotient(qs);
        out.value = v;
        out.text = std::to_string(v);
        break;
      }
      case Quantity::genus: {
        Int v = genus_quotient(qs);
        out.value = v;
        out.text = std::to_string(v);
        break;
      }
      case Quantity::apery: {
        AperyTable t = apery_quotient_formula(qs);
        out.value = t.entries;
        out.text = join(t.entries, "\n");
        break;
      }
    }
  } else {
    SemigroupOracle oracle(qs.base.gens);
    SemigroupOracle qo = oracle.quotient(qs.p);
    switch (quantity) {
      case Quantity::frobenius: {
        Int v = qo.frobenius();
        out.value = v;
        out.text = std::to_string(v);
        break;
      }
      case Quantity::genus: {
        Int v = qo.genus();
        out.value = v;
        out.text = std::to_string(v);
        break;
      }
      case Quantity::apery: {
        AperyTable t = qo.apery(qs.q);
        out.value = t.entries;
        out.text = join(t.entries, "\n");
        break;
      }
    }
  }
  return out;
}

int cmd_compute(const ComputeArgs& args, Quantity quantity) {
  check_format(args.format, false);
  Method method = parse_method(args.method);
  QuotientSpec qs =
      quotient_of(build_spec(args.a, args.d, args.u, parse_int_list(args.s_text, "s")), args.p);
  Computed result = compute_quantity(qs, quantity, method);

  if (args.format == "json") {
    json j;
    j["spec"] = spec_json(qs.base);
    j["p"] = qs.p;
    j["conditions"] = conditions_json(check_conditions(qs.base, qs.p));
    json r;
    r["quantity"] = quantity_name(quantity);
    r["value"] = result.value;
    r["path"] = result.path;
    j["result"] = r;
    print_json(j);
  } else if (quantity == Quantity::apery) {
    std::cout << "modulus: " << qs.q << "\n";
    const auto& entries = result.value.get_ref<const json::array_t&>();
    for (std::size_t r = 0; r < entries.size(); ++r)
      std::cout << r << " " << entries[r].get<Int>() << "\n";
    std::cout << "path: " << result.path << "\n";
  } else {
    std::cout << result.text << "\n";
    std::cout << "path: " << result.path << "\n";
  }
  return kExitOk;
}

struct GreedyArgs {
  std::string s_text;
  std::string b_text;
  Int m = 0;
  std::string format = "text";
};

int cmd_greedy(const GreedyArgs& args) {
  check_format(args.format, false);
  if (args.s_text.empty() == args.b_text.empty())
    raise(errc::parameter_domain, "exactly one of --s and --b is required");

  std::vector<Int> s;
  std::vector<Int> b;
  if (!args.s_text.empty()) {
    s = parse_int_list(args.s_text, "s");
    b.push_back(1);
    for (Int si : s) b.push_back(checked_add(checked_mul(si, b.back()), 1));
  } else {
    // Explicit base sequence: recover s and let the greedy validation
    // confirm the GCNS shape.
    b = parse_int_list(args.b_text, "b");
    if (b.size() < 2) raise(errc::parameter_domain, "b must have at least 2 entries");
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (b[i] < 1 || (b[i + 1] - 1) % b[i] != 0)
        raise(errc::parameter_domain, "b is not a valid GCNS base sequence");
      s.push_back((b[i + 1] - 1) / b[i]);
    }
  }

  GreedyPresentation pres = greedy_presentation(b, s, args.m);
  Int opt = 0;
  for (Int xi : pres.x) opt += xi;

  if (args.format == "json") {
    json j;
    j["B"] = b;
    j["s"] = s;
    j["M"] = args.m;
    j["x"] = pres.x;
    j["opt"] = opt;
    print_json(j);
  } else {
    std::cout << "X(" << args.m << ") = " << list_str(pres.x) << "\n";
    std::cout << "opt: " << opt << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string a_text;
  std::string d_text;
  std::string u_text;
  std::string s_patterns_text;
  std::string p_text = "divisors";
  std::string quantities_text = "frobenius,genus,apery";
  int threads = 0;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& args) {
  check_format(args.format, true);
  VerifyGrid grid = default_grid();
  if (!args.a_text.empty()) grid.a_values = parse_list_or_range(args.a_text, "a");
  if (!args.d_text.empty()) grid.d_values = parse_list_or_range(args.d_text, "d");
  if (!args.u_text.empty()) grid.u_values = parse_list_or_range(args.u_text, "u");
  if (!args.s_patterns_text.empty()) {
    grid.s_patterns.clear();
    std::stringstream stream(args.s_patterns_text);
    std::string pattern;
    while (std::getline(stream, pattern, ';'))
      grid.s_patterns.push_back(parse_int_list(pattern, "s-pattern"));
    if (grid.s_patterns.empty()) raise(errc::parameter_domain, "s-pattern list is empty");
  }
  if (args.p_text != "divisors") grid.p_values = parse_list_or_range(args.p_text, "p");

  grid.quantities.clear();
  std::stringstream qstream(args.quantities_text);
  std::string qname;
  while (std::getline(qstream, qname, ',')) {
    if (qname == "frobenius") grid.quantities.push_back(Quantity::frobenius);
    else if (qname == "genus") grid.quantities.push_back(Quantity::genus);
    else if (qname == "apery") grid.quantities.push_back(Quantity::apery);
    else raise(errc::parameter_domain, "unknown quantity '" + qname + "'");
  }
  if (grid.quantities.empty()) raise(errc::parameter_domain, "quantity list is empty");

  const bool collect_rows = args.format == "csv";
  VerificationReport report = run_verification(grid, args.threads, collect_rows);

  if (args.format == "json") {
    json j;
    j["grid"] = report.grid_description;
    j["total_instances"] = report.total_instances;
    j["agreements"] = report.agreements;
    j["skipped_condition_failures"] = report.skipped_condition_failures;
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
      json row;
      row["a"] = m.a;
      row["d"] = m.d;
      row["u"] = m.u;
      row["s"] = m.s;
      row["p"] = m.p;
      row["quantity"] = quantity_name(m.quantity);
      row["formula"] = m.formula_value;
      row["oracle"] = m.oracle_value;
      mismatches.push_back(row);
    }
    j["mismatches"] = mismatches;
    print_json(j);
  } else if (args.format == "csv") {
    std::cout << "a,d,u,s,p,quantity,formula,oracle,match\n";
    for (const auto& row : report.rows)
      std::cout << row.a << "," << row.d << "," << row.u << "," << join(row.s, "|") << ","
                << row.p << "," << quantity_name(row.quantity) << "," << row.formula_value
                << "," << row.oracle_value << "," << (row.match ? 1 : 0) << "\n";
  } else {
    std::cout << "grid: " << report.grid_description << "\n"
              << "total: " << report.total_instances << "\n"
              << "agreements: " << report.agreements << "\n"
              << "mismatches: " << report.mismatches.size() << "\n"
              << "skipped: " << report.skipped_condition_failures << "\n";
    for (const auto& m : report.mismatches)
      std::cout << "MISMATCH a=" << m.a << " d=" << m.d << " u=" << m.u << " s="
                << join(m.s, ",") << " p=" << m.p << " " << quantity_name(m.quantity)
                << " formula=" << m.formula_value << " oracle=" << m.oracle_value << "\n";
    std::fprintf(stderr, "elapsed: %.3fs\n", report.elapsed_seconds);
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers, genus and Apery sets for quotients of GCNS numerical "
               "semigroups, with a brute-force verification oracle"};
  app.require_subcommand(1);

  ComputeArgs show_args;
  auto* show = app.add_subcommand("show", "Print the derived spec and condition flags");
  show->add_option("--a", show_args.a, "multiplicity parameter")->required();
  show->add_option("--d", show_args.d, "shift parameter")->required();
  show->add_option("--u", show_args.u, "slope parameter")->required();
  show->add_option("--s", show_args.s_text, "comma-separated s-list")->required();
  show->add_option("--p", show_args.p, "quotient divisor (default 1)");
  show->add_option("--format", show_args.format, "text|json");

  GreedyArgs greedy_args;
  auto* greedy = app.add_subcommand("greedy", "Greedy presentation of M over the base sequence");
  greedy->add_option("--s", greedy_args.s_text, "comma-separated s-list (derives B)");
  greedy->add_option("--b", greedy_args.b_text, "explicit base sequence B");
  greedy->add_option("--m", greedy_args.m, "target value M")->required();
  greedy->add_option("--format", greedy_args.format, "text|json");

  auto add_compute = [&](const char* name, const char* help, ComputeArgs& args) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--a", args.a, "multiplicity parameter")->required();
    cmd->add_option("--d", args.d, "shift parameter")->required();
    cmd->add_option("--u", args.u, "slope parameter")->required();
    cmd->add_option("--s", args.s_text, "comma-separated s-list")->required();
    cmd->add_option("--p", args.p, "quotient divisor (default 1)");
    cmd->add_option("--method", args.method, "formula|oracle|auto");
    cmd->add_option("--format", args.format, "text|json");
    return cmd;
  };
  ComputeArgs frobenius_args, genus_args, apery_args;
  auto* frobenius = add_compute("frobenius", "Frobenius number of the quotient", frobenius_args);
  auto* genus = add_compute("genus", "Genus of the quotient", genus_args);
  auto* apery = add_compute("apery", "Apery table of a/p in the quotient", apery_args);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Sweep a parameter grid comparing formulas "
                                              "against the brute-force oracle");
  verify->add_option("--a", verify_args.a_text, "a values: list or lo..hi (default: composite 4..120)");
  verify->add_option("--d", verify_args.d_text, "d values (default: -3,-1,1,2,3,5)");
  verify->add_option("--u", verify_args.u_text, "u values (default: 1..5)");
  verify->add_option("--s-patterns", verify_args.s_patterns_text,
                     "semicolon-separated s-lists (default: eight stock patterns)");
  verify->add_option("--p", verify_args.p_text, "'divisors' or an explicit p list");
  verify->add_option("--quantities", verify_args.quantities_text,
                     "comma list from frobenius,genus,apery");
  verify->add_option("--threads", verify_args.threads, "worker threads (0 = hardware)");
  verify->add_option("--format", verify_args.format, "text|json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (show->parsed()) return cmd_show(show_args);
    if (greedy->parsed()) return cmd_greedy(greedy_args);
    if (frobenius->parsed()) return cmd_compute(frobenius_args, Quantity::frobenius);
    if (genus->parsed()) return cmd_compute(genus_args, Quantity::genus);
    if (apery->parsed()) return cmd_compute(apery_args, Quantity::apery);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::condition_not_met ? kExitCondition : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
