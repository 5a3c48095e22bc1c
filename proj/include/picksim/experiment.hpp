#pragma once

// Scenario runs over several independent weeks, and the CSV reports built
// from them.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "picksim/allocation.hpp"
#include "picksim/config.hpp"
#include "picksim/dataset.hpp"
#include "picksim/simulation.hpp"
#include "picksim/stats.hpp"

namespace picksim {

const char* to_string(AllocationRule r);
AllocationRule parse_allocation(std::string_view text);  // homogeneous | demand

struct ScenarioSpec {
  std::string name;
  PolicyKind policy = PolicyKind::fixed;
  AllocationRule allocation = AllocationRule::homogeneous;
  PickingMode picking = PickingMode::area;
  long weeks = 4;
  std::uint64_t seed = 0;
  bool audit = false;
  bool record_trace = false;
  bool parallel = true;
};

struct WeekOutcome {
  long week = 0;
  std::optional<WeekResult> result;
  std::string error;  // set when the week aborted
};

struct RunResult {
  ScenarioSpec spec;
  SlotMap slot_map;
  std::vector<WeekOutcome> weeks;  // ascending week
  std::vector<std::string> warnings;

  bool feasible() const;
  std::vector<double> weekly_metrics() const;
  double total() const;
};

/// Orders and receipts of each experiment week, week = floor(days since start / 7).
struct WeekSlices {
  std::vector<std::vector<Order>> orders;
  std::vector<std::vector<InboundPallet>> receipts;
  std::vector<std::string> warnings;
};

WeekSlices split_weeks(const Dataset& data, Date start, long weeks);

/// Average order lines per week for every catalog item.
std::vector<ProductDemand> demand_profile(const Dataset& data, Date start, long weeks);

SlotMap build_slot_map(const Dataset& data, const SimConfig& cfg, AllocationRule rule,
                       std::span<const ProductDemand> demand);

/// Seed of one week's replenishment stream, from (base seed, scenario, week).
std::uint64_t week_seed(std::uint64_t base, std::string_view scenario, long week);

RunResult run_scenario(const Dataset& data, const SimConfig& cfg, const ScenarioSpec& spec);

void write_results_csv(std::ostream& out, std::span<const RunResult> runs);
/// Gap is measured against the first run.
void write_summary_csv(std::ostream& out, std::span<const RunResult> runs);
void write_paired_csv(std::ostream& out, const RunResult& a, const RunResult& b);

/// Weekly values from a CSV with a `metric` column, or a single-column file.
std::vector<double> read_weekly_csv(const std::filesystem::path& path);

}  // namespace picksim
