#include "picksim/experiment.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "picksim/csv.hpp"
#include "picksim/format.hpp"

namespace picksim {

const char* to_string(AllocationRule r) { return r == AllocationRule::homogeneous ? "homogeneous" : "demand"; }

AllocationRule parse_allocation(std::string_view text) {
  if (text == "homogeneous") return AllocationRule::homogeneous;
  if (text == "demand" || text == "demand-based" || text == "demand_based") return AllocationRule::demand_based;
  throw std::invalid_argument("unknown allocation rule '" + std::string(text) + "'");
}

bool RunResult::feasible() const {
  return std::all_of(weeks.begin(), weeks.end(), [](const WeekOutcome& w) { return w.result.has_value(); });
}

std::vector<double> RunResult::weekly_metrics() const {
  std::vector<double> out;
  for (const auto& w : weeks) {
    if (w.result) out.push_back(w.result->metric);
  }
  return out;
}

double RunResult::total() const {
  const auto m = weekly_metrics();
  return std::accumulate(m.begin(), m.end(), 0.0);
}

namespace {

long week_of(Date d, Date start) {
  const auto days = d.days - start.days;
  return days >= 0 ? days / 7 : -1 - (-days - 1) / 7;
}

}  // namespace

WeekSlices split_weeks(const Dataset& data, Date start, long weeks) {
  WeekSlices s;
  s.orders.resize(weeks);
  s.receipts.resize(weeks);
  std::size_t dropped = 0;
  for (const auto& o : data.orders) {
    const long w = week_of(o.order_datetime.date, start);
    if (w < 0 || w >= weeks) {
      ++dropped;
      continue;
    }
    s.orders[w].push_back(o);
  }
  if (dropped > 0) s.warnings.push_back(std::to_string(dropped) + " orders fall outside the simulated weeks");

  std::vector<std::size_t> idx(data.inbound.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return data.inbound[a].mfg_date < data.inbound[b].mfg_date;
  });
  for (auto i : idx) {
    const auto& l = data.inbound[i];
    const long w = week_of(l.putaway.date, start);
    if (w < 0 || w >= weeks) continue;
    s.receipts[w].push_back(InboundPallet{l.item, l.qty, l.mfg_date});
  }
  return s;
}

std::vector<ProductDemand> demand_profile(const Dataset& data, Date start, long weeks) {
  std::vector<double> lines(data.catalog.size(), 0.0);
  for (const auto& o : data.orders) {
    const long w = week_of(o.order_datetime.date, start);
    if (w < 0 || w >= weeks) continue;
    for (const auto& l : o.lines) lines[l.item] += 1.0;
  }
  std::vector<ProductDemand> out;
  for (ItemIndex i = 0; i < data.catalog.size(); ++i) {
    out.push_back({data.catalog.at(i).code, lines[i] / static_cast<double>(weeks)});
  }
  return out;
}

SlotMap build_slot_map(const Dataset& data, const SimConfig& cfg, AllocationRule rule,
                       std::span<const ProductDemand> demand) {
  const auto counts = allocate_slots(demand, data.layout.storage_slots().size(), rule);
  return assign_physical_slots(demand, counts, data.layout, data.catalog, cfg.stacker());
}

std::uint64_t week_seed(std::uint64_t base, std::string_view scenario, long week) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : scenario) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  auto mix = [](std::uint64_t z) {  // splitmix64 finaliser
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ h) ^ static_cast<std::uint64_t>(week));
}

RunResult run_scenario(const Dataset& data, const SimConfig& cfg, const ScenarioSpec& spec) {
  if (spec.weeks < 1) throw std::invalid_argument("weeks must be >= 1");
  RunResult r;
  r.spec = spec;
  const Date start = Date::parse(cfg.start_date);
  const auto demand = demand_profile(data, start, spec.weeks);
  r.slot_map = build_slot_map(data, cfg, spec.allocation, demand);
  const auto slices = split_weeks(data, start, spec.weeks);
  r.warnings = slices.warnings;
  const std::uint64_t base = cfg.replenish.seed.value_or(spec.seed);

  auto one_week = [&](long w) {
    WeekOutcome out;
    out.week = w;
    WeekInput in;
    in.layout = &data.layout;
    in.catalog = &data.catalog;
    in.slot_map = &r.slot_map;
    in.initial = data.initial;
    in.receipts = slices.receipts[w];
    in.orders = slices.orders[w];
    in.run_start = start.plus_days(static_cast<std::int32_t>(7 * w));
    WeekOptions opt;
    opt.policy = spec.policy;
    opt.picking = spec.picking;
    opt.seed = week_seed(base, spec.name, w);
    opt.audit = spec.audit;
    opt.record_trace = spec.record_trace;
    try {
      out.result = run_week(cfg, in, opt);
    } catch (const StarvationError& e) {
      out.error = std::string("starvation: ") + e.what();
    } catch (const IncompleteRunError& e) {
      out.error = e.what();
    }
    return out;
  };

  if (spec.parallel && spec.weeks > 1) {
    std::vector<std::future<WeekOutcome>> jobs;
    for (long w = 0; w < spec.weeks; ++w) jobs.push_back(std::async(std::launch::async, one_week, w));
    for (auto& j : jobs) r.weeks.push_back(j.get());
  } else {
    for (long w = 0; w < spec.weeks; ++w) r.weeks.push_back(one_week(w));
  }
  std::sort(r.weeks.begin(), r.weeks.end(), [](const auto& a, const auto& b) { return a.week < b.week; });
  return r;
}

void write_results_csv(std::ostream& out, std::span<const RunResult> runs) {
  out << "scenario,week,metric,pick_full_s,pick_partial_s,put_full_s,put_partial_s,move_s,sort_full_s,"
         "sort_partial_s,waiting_s,turns\n";
  for (const auto& r : runs) {
    for (const auto& w : r.weeks) {
      if (!w.result) continue;
      const auto& m = w.result->metrics;
      out << r.spec.name << ',' << w.week + 1 << ',' << format_real(w.result->metric) << ','
          << format_real(m.pick_full_s) << ',' << format_real(m.pick_partial_s) << ',' << format_real(m.put_full_s)
          << ',' << format_real(m.put_partial_s) << ',' << format_real(m.move_s) << ','
          << format_real(m.sort_full_s) << ',' << format_real(m.sort_partial_s) << ','
          << format_real(m.waiting_s) << ',' << m.turns << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const RunResult> runs) {
  out << "scenario,mean,ci_low,ci_high,total,gap_pct\n";
  if (runs.empty()) return;
  const double baseline = runs.front().total();
  for (const auto& r : runs) {
    const auto m = r.weekly_metrics();
    out << r.spec.name << ',';
    if (m.size() >= 2) {
      const auto s = summarize(m);
      out << format_real(s.mean) << ',' << format_real(s.ci_low) << ',' << format_real(s.ci_high);
    } else if (m.size() == 1) {
      out << format_real(m.front()) << ",,";
    } else {
      out << ",,";
    }
    out << ',' << format_real(r.total()) << ',';
    if (baseline > 0.0) out << format_real(gap_percent(baseline, r.total()));
    out << '\n';
  }
}

void write_paired_csv(std::ostream& out, const RunResult& a, const RunResult& b) {
  out << "scenario_a,scenario_b,n,mean_diff,t,df,p\n";
  const auto t = paired_test(a.weekly_metrics(), b.weekly_metrics());
  out << a.spec.name << ',' << b.spec.name << ',' << a.weekly_metrics().size() << ',' << format_real(t.mean_diff)
      << ',' << format_real(t.t) << ',' << format_real(t.df) << ',' << format_real(t.p) << '\n';
}

std::vector<double> read_weekly_csv(const std::filesystem::path& path) {
  const auto t = CsvTable::read(path);
  std::string col;
  if (t.has_column("metric")) {
    col = "metric";
  } else if (t.header().size() == 1) {
    col = t.header().front();
  } else {
    throw InputError(path.string() + ": expected a 'metric' column or a single column");
  }
  std::vector<double> v;
  for (std::size_t r = 0; r < t.rows(); ++r) v.push_back(t.real(r, col));
  return v;
}

}  // namespace picksim
