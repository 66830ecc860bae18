// Command-line front end: run, sweep, replay, validate.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "gcsim/sim/config.h"
#include "gcsim/sim/csv.h"
#include "gcsim/sim/metrics.h"
#include "gcsim/sim/simulator.h"
#include "gcsim/sim/sweep.h"
#include "gcsim/sim/trace.h"

namespace fs = std::filesystem;
using namespace gcsim;

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string strategy;
  std::optional<int> group_size;
  std::optional<int> groups;
  std::vector<std::string> overrides;
  std::string out_dir;
  bool print_config = false;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_path, "key = value config file");
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--strategy", o.strategy, "unicast-pdsch | pmch | sc-ptm | sc-ptm-ic");
  app->add_option("--group-size", o.group_size, "members per group");
  app->add_option("--groups", o.groups, "groups in the centre cell");
  app->add_option("--set", o.overrides, "override a config key (key=value), repeatable");
  app->add_option("--out", o.out_dir, "output directory");
  app->add_flag("--print-config", o.print_config, "print the effective config and exit");
}

sim::SimConfig effective_config(const CommonOptions& o) {
  sim::SimConfig cfg;
  if (!o.config_path.empty()) cfg = sim::load_config(o.config_path);
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw sim::ConfigError({kv}, "--set expects key=value, got '" + kv + "'");
    }
    sim::set_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) cfg.seed = *o.seed;
  if (!o.strategy.empty()) sim::set_value(cfg, "sim.strategy", o.strategy);
  if (o.group_size) cfg.group_size = *o.group_size;
  if (o.groups) cfg.groups = *o.groups;
  sim::validate(cfg);
  return cfg;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p = dir.empty() ? fs::path(".") : fs::path(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + p.string() + "'");
  return p;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : sim::split(text, ',')) {
    const auto dash = part.find('-');
    if (dash != std::string::npos && dash > 0) {
      const auto lo = sim::parse_int(part.substr(0, dash));
      const auto hi = sim::parse_int(part.substr(dash + 1));
      if (lo > hi) throw std::invalid_argument("empty size range '" + part + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
    } else {
      out.push_back(static_cast<int>(sim::parse_int(part)));
    }
  }
  return out;
}

int emit_error(const std::string& kind, const std::string& message,
               const std::vector<std::string>& keys = {}) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  if (!keys.empty()) j["keys"] = keys;
  std::cerr << j.dump() << "\n";
  return kind == "config" ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-communication radio access simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "one simulation run");
  add_common(run_cmd, run_opts);

  CommonOptions sweep_opts;
  std::string sizes = "2-16";
  std::string strategies = "unicast-pdsch,pmch,sc-ptm,sc-ptm-ic";
  int seed_count = 5;
  int threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "cross product of sizes, strategies and seeds");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--sizes", sizes, "group sizes, e.g. 2-16 or 2,4,8");
  sweep_cmd->add_option("--strategies", strategies, "comma-separated strategy names");
  sweep_cmd->add_option("--seeds", seed_count, "seeds 1..N");
  sweep_cmd->add_option("--threads", threads, "worker threads (0: all cores)");

  std::string trace_path;
  std::string report_path;
  auto* replay_cmd = app.add_subcommand("replay", "recompute a report from trace.csv");
  replay_cmd->add_option("trace", trace_path, "trace.csv")->required();
  replay_cmd->add_option("--compare", report_path, "report.csv to compare against");

  CommonOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "check a config without running");
  add_common(validate_cmd, validate_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return emit_error("usage", e.what());
  }

  try {
    if (*run_cmd) {
      const sim::SimConfig cfg = effective_config(run_opts);
      if (run_opts.print_config) {
        std::cout << sim::to_text(cfg);
        return 0;
      }
      const auto result = sim::run(cfg);
      const fs::path out = prepare_out(run_opts.out_dir);
      sim::write_text_file(out / "report.csv", sim::report_to_csv(result.report));
      sim::write_text_file(out / "trace.csv", sim::trace_to_csv(result.trace));
      std::cout << sim::report_to_csv(result.report);
    } else if (*sweep_cmd) {
      sim::SweepSpec spec;
      spec.base = effective_config(sweep_opts);
      if (sweep_opts.print_config) {
        std::cout << sim::to_text(spec.base);
        return 0;
      }
      spec.group_sizes = parse_sizes(sizes);
      for (const auto& name : sim::split(strategies, ',')) {
        spec.strategies.push_back(access::parse_strategy(sim::trim(name)));
      }
      if (seed_count < 1) throw std::invalid_argument("--seeds must be >= 1");
      for (int s = 1; s <= seed_count; ++s) spec.seeds.push_back(static_cast<std::uint64_t>(s));
      spec.threads = threads;
      const auto result = sim::sweep(spec);
      const fs::path out = prepare_out(sweep_opts.out_dir);
      const std::string csv = sim::sweep_to_csv(result);
      sim::write_text_file(out / "sweep.csv", csv);
      std::cout << csv;
    } else if (*replay_cmd) {
      const auto trace = sim::trace_from_csv(sim::read_text_file(trace_path));
      const auto report = sim::compute_report(trace);
      std::cout << sim::report_to_csv(report);
      if (!report_path.empty()) {
        const auto expected = sim::report_from_csv(sim::read_text_file(report_path));
        if (!(expected == report)) {
          return emit_error("replay-mismatch", "recomputed report differs from " + report_path);
        }
      }
    } else if (*validate_cmd) {
      const sim::SimConfig cfg = effective_config(validate_opts);
      if (validate_opts.print_config) std::cout << sim::to_text(cfg);
      std::cout << "ok\n";
    }
  } catch (const sim::ConfigError& e) {
    return emit_error("config", e.what(), e.keys());
  } catch (const std::exception& e) {
    return emit_error("runtime", e.what());
  }
  return 0;
}
