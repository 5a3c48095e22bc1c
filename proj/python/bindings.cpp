#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "picksim/cli.hpp"
#include "picksim/config.hpp"
#include "picksim/csv.hpp"
#include "picksim/experiment.hpp"
#include "picksim/generator.hpp"
#include "picksim/stats.hpp"

namespace py = pybind11;
using namespace picksim;

namespace {

constexpr std::uint64_t default_seed = 20200601;

py::dict metrics_dict(const ProcessMetrics& m) {
  py::dict d;
  d["pick_full_s"] = m.pick_full_s;
  d["pick_partial_s"] = m.pick_partial_s;
  d["put_full_s"] = m.put_full_s;
  d["put_partial_s"] = m.put_partial_s;
  d["move_s"] = m.move_s;
  d["sort_full_s"] = m.sort_full_s;
  d["sort_partial_s"] = m.sort_partial_s;
  d["waiting_s"] = m.waiting_s;
  d["turns"] = m.turns;
  return d;
}

py::dict scenario(const std::optional<std::filesystem::path>& data_dir, const std::string& config_json,
                  const std::optional<std::string>& policy, const std::optional<std::string>& allocation,
                  const std::optional<std::string>& picking, std::optional<long> weeks,
                  std::optional<std::uint64_t> seed, bool audit, const std::string& name) {
  const SimConfig cfg = parse_config_text(config_json);
  cfg.validate();
  ScenarioSpec spec;
  spec.name = name;
  spec.policy = parse_policy(policy.value_or(cfg.policy));
  spec.allocation = parse_allocation(allocation.value_or(cfg.allocation));
  spec.picking = parse_picking_mode(picking.value_or(cfg.picking));
  spec.weeks = weeks.value_or(cfg.weeks);
  spec.seed = seed ? *seed : cfg.seed.value_or(default_seed);
  spec.audit = audit;

  RunResult r;
  {
    py::gil_scoped_release release;
    Dataset data;
    if (data_dir) {
      data = Dataset::load(*data_dir);
    } else {
      GeneratorScale scale{cfg.generator.items, cfg.generator.slots, cfg.generator.lines, spec.weeks};
      GeneratorOptions opt;
      opt.start = Date::parse(cfg.start_date);
      data = generate_data(spec.seed, scale, opt);
    }
    r = run_scenario(data, cfg, spec);
  }

  py::list weeks_out;
  for (const auto& w : r.weeks) {
    py::dict d;
    d["week"] = w.week + 1;
    if (w.result) {
      d["metric"] = w.result->metric;
      d["makespan_s"] = w.result->makespan;
      d["restocks"] = w.result->restocks.size();
      d["events"] = w.result->events_executed;
      d["metrics"] = metrics_dict(w.result->metrics);
    } else {
      d["error"] = w.error;
    }
    weeks_out.append(d);
  }
  py::dict out;
  out["name"] = r.spec.name;
  out["feasible"] = r.feasible();
  out["weekly"] = r.weekly_metrics();
  out["total"] = r.feasible() ? py::cast(r.total()) : py::none();
  out["weeks"] = weeks_out;
  out["warnings"] = r.warnings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Warehouse picking simulation core";

  py::register_exception<ConfigValidationError>(m, "ConfigValidationError", PyExc_ValueError);
  py::register_exception<ConfigParseError>(m, "ConfigParseError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<StatsSummary>(m, "StatsSummary")
      .def_readonly("n", &StatsSummary::n)
      .def_readonly("mean", &StatsSummary::mean)
      .def_readonly("sd", &StatsSummary::sd)
      .def_readonly("ci_low", &StatsSummary::ci_low)
      .def_readonly("ci_high", &StatsSummary::ci_high)
      .def("__repr__", [](const StatsSummary& s) {
        std::ostringstream o;
        o << "StatsSummary(n=" << s.n << ", mean=" << s.mean << ", ci=[" << s.ci_low << ", " << s.ci_high << "])";
        return o.str();
      });

  py::class_<PairedTest>(m, "PairedTest")
      .def_readonly("mean_diff", &PairedTest::mean_diff)
      .def_readonly("t", &PairedTest::t)
      .def_readonly("df", &PairedTest::df)
      .def_readonly("p", &PairedTest::p);

  m.def(
      "summarize",
      [](const std::vector<double>& v, double confidence) { return summarize(v, confidence); },
      py::arg("values"), py::arg("confidence") = 0.95, "Mean and t-interval of weekly values.");
  m.def("gap_percent", &gap_percent, py::arg("baseline_total"), py::arg("other_total"));
  m.def(
      "paired_test",
      [](const std::vector<double>& a, const std::vector<double>& b) { return paired_test(a, b); },
      py::arg("a"), py::arg("b"), "Paired t-test on b - a.");

  m.def(
      "allocate_slots",
      [](const std::vector<std::pair<std::string, double>>& demand, std::size_t n_slots, const std::string& rule) {
        std::vector<ProductDemand> p;
        for (const auto& [code, picks] : demand) p.push_back({code, picks});
        return allocate_slots(p, n_slots, parse_allocation(rule));
      },
      py::arg("demand"), py::arg("n_slots"), py::arg("rule") = "demand",
      "Slot count per (item_code, avg_picks) pair.");

  m.def(
      "generate_data",
      [](std::uint64_t seed, const std::filesystem::path& out, std::size_t items, std::size_t slots,
         std::size_t lines, long weeks) {
        py::gil_scoped_release release;
        generate_data(seed, {items, slots, lines, weeks}).save(out);
      },
      py::arg("seed"), py::arg("out"), py::arg("items") = 153, py::arg("slots") = 1149,
      py::arg("lines") = 28129, py::arg("weeks") = 4, "Writes a synthetic data directory.");

  m.def("week_seed", &week_seed, py::arg("base"), py::arg("scenario"), py::arg("week"));

  m.def("run_scenario", &scenario, py::arg("data_dir") = py::none(), py::arg("config_json") = "{}",
        py::arg("policy") = py::none(), py::arg("allocation") = py::none(), py::arg("picking") = py::none(),
        py::arg("weeks") = py::none(), py::arg("seed") = py::none(), py::arg("audit") = false,
        py::arg("name") = "scenario1",
        "Runs independent weekly simulations. Without data_dir the workload is generated from the seed.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
