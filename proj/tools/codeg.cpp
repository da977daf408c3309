// codeg: character tables, codegree invariants and verification reports
// for finite permutation groups.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codeg/render.hpp"

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Config {
  std::uint64_t order_cap = 100000;
  std::uint64_t degree_cap = 10000;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::size_t jobs = 1;
  bool timing = false;
};

// Defaults may come from a JSON file named by --config or CODEG_CONFIG.
void load_config(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw codeg::InvalidArgument("cannot open config file " + path);
  const auto j = codeg::json::parse(in);
  cfg.order_cap = j.value("order_cap", cfg.order_cap);
  cfg.degree_cap = j.value("degree_cap", cfg.degree_cap);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.format = j.value("format", cfg.format);
  cfg.jobs = j.value("jobs", cfg.jobs);
  cfg.timing = j.value("timing", cfg.timing);
}

codeg::TableOptions table_options(const Config& cfg) {
  codeg::TableOptions o;
  o.limits.order_cap = cfg.order_cap;
  o.limits.degree_cap = cfg.degree_cap;
  o.seed = cfg.seed;
  return o;
}

void emit_json(const codeg::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_table(const std::string& spec, const Config& cfg) {
  const auto opts = table_options(cfg);
  const auto g = codeg::parse_group_spec(spec, opts.limits);
  const auto t = codeg::character_table(g.group, opts);
  if (cfg.format == "json") {
    emit_json(codeg::table_json(g.name, *t));
  } else if (cfg.format == "csv") {
    std::cout << codeg::table_csv(*t);
  } else {
    std::cout << codeg::table_text(g.name, *t);
  }
  return kPass;
}

int cmd_invariants(const std::string& spec, const Config& cfg) {
  const auto opts = table_options(cfg);
  const auto g = codeg::parse_group_spec(spec, opts.limits);
  codeg::GroupAnalysis a(g.name, g.group, opts);
  if (cfg.format == "json") {
    emit_json(codeg::invariants_json(a));
  } else if (cfg.format == "csv") {
    std::cout << "index,degree,kernel_order,codegree\n";
    for (const auto& pc : a.codegrees().per_char) {
      std::cout << pc.index << "," << pc.degree << "," << pc.kernel.order() << "," << pc.codegree << "\n";
    }
  } else {
    std::cout << codeg::invariants_text(a);
  }
  return kPass;
}

int cmd_verify(const std::vector<std::string>& args, const std::string& catalog_filter, const Config& cfg) {
  std::vector<std::string> ids, specs;
  for (const auto& a : args) {
    if (a.find(':') != std::string::npos) {
      specs.push_back(a);
      continue;
    }
    std::size_t i = 0;
    while (i <= a.size()) {
      const std::size_t end = std::min(a.find(',', i), a.size());
      if (end > i) ids.push_back(a.substr(i, end - i));
      i = end + 1;
    }
  }
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = codeg::check_ids();
  codeg::validate_check_ids(ids);
  if (specs.empty() && catalog_filter.empty()) throw codeg::InvalidArgument("verify needs a group spec or --catalog");

  codeg::RunOptions run;
  run.table = table_options(cfg);
  run.jobs = cfg.jobs;
  run.timing = cfg.timing;
  std::vector<codeg::GroupTask> tasks;
  if (!catalog_filter.empty()) {
    for (const auto* e : codeg::select_catalog(catalog_filter)) tasks.push_back({e->name, e->build, e->matrix});
  }
  for (const auto& s : specs) {
    auto g = codeg::parse_group_spec(s, run.table.limits);
    auto matrix = g.matrix;
    tasks.push_back({g.name, [grp = g.group](const codeg::Limits&) { return grp; }, matrix});
  }
  const auto reports = codeg::run_tasks(tasks, ids, run);
  if (cfg.format == "json") {
    emit_json(codeg::reports_json(reports));
  } else if (cfg.format == "csv") {
    std::cout << codeg::reports_csv(reports);
  } else {
    std::cout << codeg::reports_text(reports);
  }
  return codeg::summarize(reports).fail ? kFail : kPass;
}

int cmd_catalog(const Config& cfg) {
  codeg::Limits limits{cfg.order_cap, cfg.degree_cap};
  codeg::json list = codeg::json::array();
  for (const auto& e : codeg::catalog()) {
    const auto g = e.build(limits);
    list.push_back({{"name", e.name},
                    {"order", g.order().get_str()},
                    {"degree", g.degree()},
                    {"linear", e.matrix.has_value()},
                    {"affine", e.affine_of.has_value()}});
  }
  if (cfg.format == "json") {
    emit_json(list);
  } else if (cfg.format == "csv") {
    std::cout << "name,order,degree\n";
    for (const auto& e : list) {
      std::cout << "\"" << e["name"].get<std::string>() << "\"," << e["order"].get<std::string>() << "," << e["degree"]
                << "\n";
    }
  } else {
    for (const auto& e : list) {
      std::cout << std::left << std::setw(18) << e["name"].get<std::string>() << " order " << std::setw(6)
                << e["order"].get<std::string>() << " on " << e["degree"] << " points\n";
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, codegrees and Fitting heights of finite permutation groups"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  if (const char* env = std::getenv("CODEG_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "JSON file with default options (also CODEG_CONFIG)");

  // Options are parsed after the config file is applied, so they are bound to
  // a separate struct and merged below.
  Config flags;
  auto* order_cap = app.add_option("--order-cap", flags.order_cap, "Largest group order to enumerate")
                        ->check(CLI::PositiveNumber);
  auto* degree_cap = app.add_option("--degree-cap", flags.degree_cap, "Largest permutation degree to construct")
                         ->check(CLI::PositiveNumber);
  auto* seed = app.add_option("--seed", flags.seed, "Seed for the randomized eigenspace splitting");
  auto* format = app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  auto* jobs = app.add_option("--jobs", flags.jobs, "Groups verified in parallel")->check(CLI::PositiveNumber);
  auto* timing = app.add_flag("--timing", flags.timing, "Record per-check wall time in reports");
  app.fallthrough();

  std::string spec;
  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("spec", spec, "Group spec (name:, perm:, mat:, affine:)")->required();
  auto* inv = app.add_subcommand("invariants", "Codegrees, normal subgroups and Fitting series");
  inv->add_option("spec", spec, "Group spec")->required();
  std::vector<std::string> verify_args;
  std::string catalog_filter;
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("args", verify_args, "Check ids (comma separated, default all) and group specs");
  verify->add_option("--catalog", catalog_filter, "Run on catalog groups: 'all' or a comma-separated list of names");
  auto* cat = app.add_subcommand("catalog", "List the catalog of named groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (order_cap->count()) cfg.order_cap = flags.order_cap;
    if (degree_cap->count()) cfg.degree_cap = flags.degree_cap;
    if (seed->count()) cfg.seed = flags.seed;
    if (format->count()) cfg.format = flags.format;
    if (jobs->count()) cfg.jobs = flags.jobs;
    if (timing->count()) cfg.timing = true;

    if (table->parsed()) return cmd_table(spec, cfg);
    if (inv->parsed()) return cmd_invariants(spec, cfg);
    if (verify->parsed()) return cmd_verify(verify_args, catalog_filter, cfg);
    if (cat->parsed()) return cmd_catalog(cfg);
  } catch (const codeg::CapExceeded& e) {
    std::cerr << "codeg: " << e.what() << "\n";
    return kCap;
  } catch (const codeg::ParseError& e) {
    std::cerr << "codeg: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const codeg::Unsupported& e) {
    std::cerr << "codeg: unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const codeg::InvalidArgument& e) {
    std::cerr << "codeg: " << e.what() << "\n";
    return kUsage;
  } catch (const codeg::json::exception& e) {
    std::cerr << "codeg: bad config: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "codeg: error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
