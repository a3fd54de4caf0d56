#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "astlab/characters.hpp"
#include "astlab/matchings.hpp"
#include "astlab/registry.hpp"
#include "astlab/statistics.hpp"

namespace {

using nlohmann::json;
using namespace astlab;

json result_json(const CheckResult& r) {
  return json{{"check", r.check},     {"n", r.n},
              {"seed", r.seed},       {"points", r.points},
              {"status", r.status},   {"rejected_points", r.rejected},
              {"details", r.details}};
}

void print_result_text(const CheckResult& r) {
  std::cout << r.check << ": " << r.status;
  if (!r.details.empty()) std::cout << " (" << r.details << ")";
  std::cout << '\n';
}

RunCaps caps_from_env() {
  RunCaps caps;
  if (const char* cap = std::getenv("ASTLAB_CAP")) {
    int v = std::atoi(cap);
    if (v > 0) {
      caps.enumeration = v;
      caps.partition = std::min(v, 6);
      caps.matchings = std::min(v, 5);
    }
  }
  return caps;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

json object_json(const AsmMatrix& a) {
  json rows = json::array();
  for (int i = 1; i <= a.order(); ++i) {
    json row = json::array();
    for (int j = 1; j <= a.order(); ++j) row.push_back(a.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

template <typename T>
json triangle_json(const T& t, int rows) {
  json out = json::array();
  for (int i = 1; i <= rows; ++i) {
    json row = json::array();
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j) row.push_back(t.at(i, j));
    out.push_back(row);
  }
  return out;
}

int cmd_enumerate(Family fam, int n, const std::string& format, const RunCaps& caps) {
  bool as_json = format == "json";
  json all = json::array();
  auto emit_text = [&](const std::string& line) { std::cout << line << '\n'; };
  if (fam == Family::Asm) {
    for (const auto& a : enumerate_asm(n, caps.enumeration))
      as_json ? (void)all.push_back(object_json(a)) : emit_text(to_text(a));
  } else if (fam == Family::DasasmTri) {
    for (const auto& t : enumerate_dasasm_triangles(n, caps.enumeration))
      as_json ? (void)all.push_back(triangle_json(t, t.order() + 1)) : emit_text(to_text(t));
  } else {
    for (const auto& t : enumerate_sign_triangles(fam, n, caps.enumeration))
      as_json ? (void)all.push_back(triangle_json(t, t.order())) : emit_text(to_text(t));
  }
  if (as_json) std::cout << all.dump() << '\n';
  return 0;
}

int cmd_distribution(Family fam, int n, const std::string& stats_csv, const std::string& format,
                     const RunCaps& caps) {
  std::vector<Stat> stats;
  for (const auto& name : split_list(stats_csv)) stats.push_back(stat_from_name(name));
  DistributionTable table = joint_distribution(fam, n, stats, caps.enumeration);
  if (format == "csv") {
    std::cout << table.to_csv();
  } else if (format == "json") {
    json counts = json::array();
    for (const auto& [key, cnt] : table.counts)
      counts.push_back(json{{"key", key}, {"count", cnt}});
    std::cout << json{{"family", table.family},
                      {"n", table.n},
                      {"stats", table.stats},
                      {"counts", counts}}
                     .dump()
              << '\n';
  } else {
    for (const auto& [key, cnt] : table.counts) {
      for (long k : key) std::cout << k << ' ';
      std::cout << "-> " << cnt << '\n';
    }
  }
  return 0;
}

int cmd_table(const std::string& which, int max_n, const std::string& format) {
  if (which != "products") throw UnknownIdentifier("unknown table: " + which);
  struct Row {
    std::string kind;
    int n;
    std::string value;
  };
  std::vector<Row> rows;
  for (ProductKind k :
       {ProductKind::Asm, ProductKind::Cspp, ProductKind::Oosasm4nMinus1,
        ProductKind::Oosasm4nPlus1, ProductKind::Vhsasm, ProductKind::Ast2Enum,
        ProductKind::Ast3EnumOdd, ProductKind::Ast3EnumEven, ProductKind::AsmOneMinusOne}) {
    for (int n = 1; n <= max_n; ++n) {
      if (k == ProductKind::Vhsasm && n % 2 == 0) continue;
      Rational v = product_formula(k, n);
      std::ostringstream os;
      os << v;
      rows.push_back({product_name(k), n, os.str()});
    }
  }
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back(json{{"kind", r.kind}, {"n", r.n}, {"value", r.value}});
    std::cout << out.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "kind,n,value\n";
    for (const auto& r : rows) std::cout << r.kind << ',' << r.n << ',' << r.value << '\n';
  } else {
    for (const auto& r : rows)
      std::cout << r.kind << " n=" << r.n << " value=" << r.value << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& check, int n, unsigned seed, int points, bool strict,
               const std::string& format, const RunCaps& caps) {
  std::vector<CheckResult> results;
  if (check == "all") {
    for (const auto& id : check_ids()) results.push_back(run_check(id, n, seed, points, caps));
  } else {
    results.push_back(run_check(check, n, seed, points, caps));
  }
  bool any_fail = false;
  for (const auto& r : results) any_fail = any_fail || !r.ok(strict);
  if (format == "json") {
    json out = json::array();
    for (const auto& r : results) out.push_back(result_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : results) print_result_text(r);
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and verification for alternating sign objects"};
  app.require_subcommand(1);
  RunCaps caps = caps_from_env();

  std::string family, format = "text", stats, check = "all", which = "products";
  int n = 0, max_n = 0, points = 20;
  unsigned seed = 0;
  bool strict = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream all objects of a family");
  enumerate_cmd->add_option("--family", family)->required();
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* count_cmd = app.add_subcommand("count", "count the objects of a family");
  count_cmd->add_option("--family", family)->required();
  count_cmd->add_option("--n", n)->required();

  auto* dist_cmd = app.add_subcommand("distribution", "joint statistic distribution");
  dist_cmd->add_option("--family", family)->required();
  dist_cmd->add_option("--n", n)->required();
  dist_cmd->add_option("--stats", stats)->required();
  dist_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
  verify_cmd->add_option("--check", check);
  verify_cmd->add_option("--n,--max-n", max_n);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--points", points);
  verify_cmd->add_flag("--strict-conjectures", strict);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table_cmd = app.add_subcommand("table", "emit closed-form value tables");
  table_cmd->add_option("--which", which);
  table_cmd->add_option("--max-n", max_n)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* qn_cmd = app.add_subcommand("qn-graph", "adjacency list of the diamond graph");
  qn_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(family_from_name(family), n, format, caps);
    if (*count_cmd) {
      std::cout << count_family(family_from_name(family), n, caps.enumeration) << '\n';
      return 0;
    }
    if (*dist_cmd) return cmd_distribution(family_from_name(family), n, stats, format, caps);
    if (*verify_cmd) return cmd_verify(check, max_n, seed, points, strict, format, caps);
    if (*table_cmd) return cmd_table(which, max_n, format);
    if (*qn_cmd) {
      std::cout << adjacency_text(build_qn(n));
      return 0;
    }
  } catch (const UnknownIdentifier& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
