#include "picksim/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <optional>

#include "picksim/config.hpp"
#include "picksim/csv.hpp"
#include "picksim/dataset.hpp"
#include "picksim/experiment.hpp"
#include "picksim/format.hpp"
#include "picksim/generator.hpp"
#include "picksim/stats.hpp"

namespace picksim {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t default_seed = 20200601;

/// Runtime failure with a ready-made exit code.
struct CliFailure {
  int code;
  std::string message;
};

struct ScenarioFlags {
  std::optional<std::string> policy, allocation, picking;
};

struct RunFlags {
  std::string config;
  ScenarioFlags base;
  std::optional<long> weeks;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string data;
  bool trace = false;
  bool audit = false;
  bool serial = false;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f, const std::string& prefix) {
  cmd->add_option("--" + prefix + "policy", f.policy, "storage policy")
      ->check(CLI::IsMember({"fixed", "random", "fixed-zone"}));
  cmd->add_option("--" + prefix + "allocation", f.allocation, "slot allocation rule")
      ->check(CLI::IsMember({"homogeneous", "demand"}));
  cmd->add_option("--" + prefix + "picking", f.picking, "picking mode")->check(CLI::IsMember({"area", "zoning"}));
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  add_scenario_flags(cmd, f.base, "");
  cmd->add_option("--weeks", f.weeks, "number of weekly runs")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--out", f.out, "output directory")->required();
  cmd->add_option("--data", f.data, "input data directory (default: generated)");
  cmd->add_flag("--trace", f.trace, "write per-week event traces");
  cmd->add_flag("--audit", f.audit, "check conservation and FIFO after every event");
  cmd->add_flag("--serial", f.serial, "run weeks one after another");
}

std::uint64_t resolve_seed(const RunFlags& f, const SimConfig& cfg) {
  if (f.seed) return *f.seed;
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("PICKSIM_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CliFailure{exit_parse, "PICKSIM_SEED is not an unsigned integer: '" + std::string(env) + "'"};
  }
  return default_seed;
}

SimConfig load_effective_config(const RunFlags& f) {
  SimConfig cfg = f.config.empty() ? SimConfig{} : load_config(f.config);
  if (f.base.policy) cfg.policy = *f.base.policy;
  if (f.base.allocation) cfg.allocation = *f.base.allocation;
  if (f.base.picking) cfg.picking = *f.base.picking;
  if (f.weeks) cfg.weeks = *f.weeks;
  if (!f.data.empty()) cfg.data_dir = f.data;
  cfg.seed = resolve_seed(f, cfg);
  cfg.validate();
  return cfg;
}

Dataset load_data(const SimConfig& cfg) {
  Dataset data;
  if (!cfg.data_dir.empty()) {
    data = Dataset::load(cfg.data_dir);
  } else {
    GeneratorScale scale{cfg.generator.items, cfg.generator.slots, cfg.generator.lines, cfg.weeks};
    GeneratorOptions opt;
    opt.start = Date::parse(cfg.start_date);
    data = generate_data(*cfg.seed, scale, opt);
  }
  const auto heavy = data.overweight_pallets(cfg.MPW);
  if (!heavy.empty()) {
    std::string msg = "MPW: " + std::to_string(heavy.size()) + " pallet(s) exceed " + format_real(cfg.MPW) +
                      " kg, first: " + heavy.front();
    throw ConfigValidationError({msg});
  }
  return data;
}

ScenarioSpec make_spec(const SimConfig& cfg, const RunFlags& f, const std::string& policy,
                       const std::string& allocation, const std::string& picking, std::string name) {
  ScenarioSpec s;
  s.policy = parse_policy(policy);
  s.allocation = parse_allocation(allocation);
  s.picking = parse_picking_mode(picking);
  s.name = name.empty() ? policy + "-" + allocation + "-" + picking : std::move(name);
  s.weeks = cfg.weeks;
  s.seed = *cfg.seed;
  s.audit = f.audit;
  s.record_trace = f.trace;
  s.parallel = !f.serial;
  return s;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw CliFailure{exit_runtime, p.string() + ": cannot write"};
  return out;
}

void check_feasible(const RunResult& r) {
  for (const auto& w : r.weeks) {
    if (!w.result) {
      throw CliFailure{exit_runtime, "scenario " + r.spec.name + " week " + std::to_string(w.week + 1) +
                                         " infeasible: " + w.error};
    }
  }
}

void write_run_outputs(const fs::path& dir, const SimConfig& cfg, const Dataset& data,
                       std::span<const RunResult> runs) {
  fs::create_directories(dir);
  {
    auto f = open_out(dir / "results.csv");
    write_results_csv(f, runs);
  }
  {
    auto f = open_out(dir / "summary.csv");
    write_summary_csv(f, runs);
  }
  {
    auto f = open_out(dir / "config.json");
    f << dump_config(cfg);
  }
  for (const auto& r : runs) {
    const std::string suffix = runs.size() > 1 ? "_" + r.spec.name : "";
    {
      auto f = open_out(dir / ("slotmap" + suffix + ".csv"));
      r.slot_map.write_csv(f, data.catalog, data.layout);
    }
    if (r.spec.record_trace) {
      for (const auto& w : r.weeks) {
        auto f = open_out(dir / ("trace_" + r.spec.name + "_week" + std::to_string(w.week + 1) + ".csv"));
        write_trace_csv(f, w.result->trace);
      }
    }
  }
}

void report_run(std::ostream& out, const SimConfig& cfg, const RunResult& r) {
  out << r.spec.name << ": ";
  for (const auto& w : r.weeks) out << "week " << w.week + 1 << " = " << format_fixed(w.result->metric, 2) << ' ';
  out << "total = " << format_fixed(r.total(), 2) << ' ' << cfg.metric_unit << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

int cmd_simulate(const RunFlags& f, std::ostream& out) {
  const SimConfig cfg = load_effective_config(f);
  const Dataset data = load_data(cfg);
  const auto spec = make_spec(cfg, f, cfg.policy, cfg.allocation, cfg.picking, "");
  std::vector<RunResult> runs{run_scenario(data, cfg, spec)};
  check_feasible(runs.front());
  write_run_outputs(f.out, cfg, data, runs);
  report_run(out, cfg, runs.front());
  return exit_ok;
}

void report_paired(std::ostream& out, const std::string& a_name, std::span<const double> a,
                   const std::string& b_name, std::span<const double> b, const std::string& unit) {
  const auto t = paired_test(a, b);
  out << "paired test (" << b_name << " - " << a_name << "): mean_diff = " << format_fixed(t.mean_diff, 4)
      << ", t = " << format_fixed(t.t, 4) << ", df = " << format_real(t.df) << ", p = " << format_fixed(t.p, 4)
      << '\n';
  const double ma = std::accumulate(a.begin(), a.end(), 0.0);
  const double mb = std::accumulate(b.begin(), b.end(), 0.0);
  if (ma != mb) {
    const auto& low = ma < mb ? a_name : b_name;
    const auto& high = ma < mb ? b_name : a_name;
    out << "if lower " << unit << " is better: " << low << " wins; if higher is better: " << high << " wins\n";
  }
}

int cmd_compare(const RunFlags& f, const ScenarioFlags& other, std::ostream& out) {
  const SimConfig cfg = load_effective_config(f);
  const Dataset data = load_data(cfg);
  const auto a = make_spec(cfg, f, cfg.policy, cfg.allocation, cfg.picking, "scenario1");
  const auto b = make_spec(cfg, f, other.policy.value_or(cfg.policy), other.allocation.value_or("demand"),
                           other.picking.value_or(cfg.picking), "scenario2");
  std::vector<RunResult> runs{run_scenario(data, cfg, a), run_scenario(data, cfg, b)};
  for (const auto& r : runs) check_feasible(r);
  write_run_outputs(f.out, cfg, data, runs);
  if (cfg.weeks >= 2) {
    auto p = open_out(fs::path(f.out) / "paired_test.csv");
    write_paired_csv(p, runs[0], runs[1]);
  }
  for (const auto& r : runs) report_run(out, cfg, r);
  out << "gap = " << format_fixed(gap_percent(runs[0].total(), runs[1].total()), 2) << "%\n";
  if (cfg.weeks >= 2) {
    report_paired(out, "scenario1", runs[0].weekly_metrics(), "scenario2", runs[1].weekly_metrics(),
                  cfg.metric_unit);
  }
  return exit_ok;
}

struct GenFlags {
  std::uint64_t seed = default_seed;
  std::size_t items = 153, slots = 1149, lines = 28129;
  long weeks = 4;
  std::string start = "2020-06-01";
  std::string out;
};

int cmd_gen_data(const GenFlags& g, std::ostream& out) {
  GeneratorOptions opt;
  try {
    opt.start = Date::parse(g.start);
  } catch (const std::exception& e) {
    throw CliFailure{exit_parse, std::string("--start: ") + e.what()};
  }
  const auto data = generate_data(g.seed, GeneratorScale{g.items, g.slots, g.lines, g.weeks}, opt);
  data.save(g.out);
  std::size_t lines = 0;
  for (const auto& o : data.orders) lines += o.lines.size();
  out << "wrote " << data.catalog.size() << " items, " << data.layout.storage_slots().size() << " slots, "
      << data.orders.size() << " orders (" << lines << " lines), " << data.initial.size() << " stocked pallets, "
      << data.inbound.size() << " inbound pallets to " << g.out << '\n';
  return exit_ok;
}

struct StatsFlags {
  std::vector<std::string> weekly;
  std::string out;
};

int cmd_stats(const StatsFlags& s, std::ostream& out) {
  std::vector<std::vector<double>> samples;
  for (const auto& p : s.weekly) samples.push_back(read_weekly_csv(p));
  const double baseline = std::accumulate(samples[0].begin(), samples[0].end(), 0.0);

  std::ostringstream csv;
  csv << "scenario,mean,ci_low,ci_high,total,gap_pct\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto sum = summarize(samples[i]);
    const double total = std::accumulate(samples[i].begin(), samples[i].end(), 0.0);
    const double gap = gap_percent(baseline, total);
    out << s.weekly[i] << ": n = " << sum.n << ", mean = " << format_fixed(sum.mean, 2) << ", 95% CI = ["
        << format_fixed(sum.ci_low, 2) << ", " << format_fixed(sum.ci_high, 2) << "], total = "
        << format_fixed(total, 2) << ", gap = " << format_fixed(gap, 2) << "%\n";
    csv << fs::path(s.weekly[i]).stem().string() << ',' << format_real(sum.mean) << ',' << format_real(sum.ci_low)
        << ',' << format_real(sum.ci_high) << ',' << format_real(total) << ',' << format_real(gap) << '\n';
  }
  if (samples.size() == 2) report_paired(out, s.weekly[0], samples[0], s.weekly[1], samples[1], "metric");
  if (!s.out.empty()) {
    fs::create_directories(s.out);
    auto f = open_out(fs::path(s.out) / "summary.csv");
    f << csv.str();
  }
  return exit_ok;
}

std::string one_line(std::string s) {
  for (auto& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Warehouse order-picking simulator", "picksim"};
  app.require_subcommand(1);

  RunFlags sim_flags;
  auto* simulate = app.add_subcommand("simulate", "run one scenario over weekly terminating runs");
  add_run_flags(simulate, sim_flags);

  RunFlags cmp_flags;
  ScenarioFlags other;
  auto* compare = app.add_subcommand("compare", "run two scenarios and test the difference");
  add_run_flags(compare, cmp_flags);
  add_scenario_flags(compare, other, "other-");

  GenFlags gen;
  auto* gen_data = app.add_subcommand("gen-data", "write a seeded synthetic data set");
  gen_data->add_option("--seed", gen.seed, "generator seed");
  gen_data->add_option("--items", gen.items, "number of products");
  gen_data->add_option("--slots", gen.slots, "number of storage slots");
  gen_data->add_option("--lines", gen.lines, "order lines over all weeks");
  gen_data->add_option("--weeks", gen.weeks, "weeks of orders")->check(CLI::PositiveNumber);
  gen_data->add_option("--start", gen.start, "first day (YYYY-MM-DD)");
  gen_data->add_option("--out", gen.out, "output directory")->required();

  StatsFlags st;
  auto* stats = app.add_subcommand("stats", "summarise externally supplied weekly values");
  stats->add_option("--weekly", st.weekly, "weekly CSV files; the first is the baseline")
      ->required()
      ->expected(1, -1)
      ->check(CLI::ExistingFile);
  stats->add_option("--out", st.out, "directory for summary.csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return exit_parse;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim_flags, out);
    if (compare->parsed()) return cmd_compare(cmp_flags, other, out);
    if (gen_data->parsed()) return cmd_gen_data(gen, out);
    if (stats->parsed()) return cmd_stats(st, out);
  } catch (const CliFailure& e) {
    err << "error: " << one_line(e.message) << '\n';
    return e.code;
  } catch (const ConfigParseError& e) {
    err << "error: config: " << one_line(e.what()) << '\n';
    return exit_parse;
  } catch (const ConfigValidationError& e) {
    std::string joined;
    for (const auto& v : e.violations()) joined += (joined.empty() ? "" : "; ") + v;
    err << "error: validation: " << one_line(joined) << '\n';
    return exit_validation;
  } catch (const InputError& e) {
    err << "error: input: " << one_line(e.what()) << '\n';
    return exit_parse;
  } catch (const StatsError& e) {
    err << "error: stats: " << one_line(e.what()) << '\n';
    return exit_validation;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return exit_runtime;
  }
  return exit_parse;
}

}  // namespace picksim
