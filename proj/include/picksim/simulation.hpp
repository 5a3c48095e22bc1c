#pragma once

// One terminating weekly run: place the week's starting stock, schedule the
// pickers and the replenishment stream, and run until every order is done.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picksim/allocation.hpp"
#include "picksim/config.hpp"
#include "picksim/dataset.hpp"
#include "picksim/des_engine.hpp"
#include "picksim/metrics.hpp"
#include "picksim/picking.hpp"
#include "picksim/replenishment.hpp"
#include "picksim/storage_policy.hpp"

namespace picksim {

/// Conservation or FIFO broken during an audited run.
class AuditError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A run that reached its horizon or ran out of events with orders open.
class IncompleteRunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeekInput {
  const Layout* layout = nullptr;
  const Catalog* catalog = nullptr;
  const SlotMap* slot_map = nullptr;  // required for the fixed policy
  std::span<const InitialPallet> initial;
  std::span<const InboundPallet> receipts;  // placed after the initial stock
  std::span<const Order> orders;
  Date run_start;
};

struct WeekOptions {
  PolicyKind policy = PolicyKind::fixed;
  PickingMode picking = PickingMode::area;
  std::uint64_t seed = 0;
  bool audit = false;
  bool record_trace = false;
};

struct WeekResult {
  double metric = 0.0;  // makespan in the configured unit
  Seconds makespan = 0.0;
  ProcessMetrics metrics;
  std::vector<Seconds> order_completion;  // indexed like WeekInput::orders
  std::vector<std::string> warnings;
  std::vector<Restock> restocks;
  EventTrace trace;
  std::uint64_t events_executed = 0;
  std::size_t start_waiting = 0;  // pallets that found no slot at the start
};

/// Starting stock, oldest lot first: each pallet keeps its recorded slot when that slot
/// qualifies and is free, else takes the nearest candidate, else waits.
void place_starting_stock(const WeekInput& in, const StoragePlanner& planner, Inventory& inventory,
                          WaitingList& waiting);

PutAwaySettings put_away_settings(const SimConfig& cfg);
PickingSettings picking_settings(const SimConfig& cfg, std::size_t n_items);

WeekResult run_week(const SimConfig& cfg, const WeekInput& in, const WeekOptions& opt);

}  // namespace picksim
