#pragma once

// Order preparation, the walking/handling time model and the two picking
// event handlers (start-pick-order and partial-pick).

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "picksim/calendar.hpp"
#include "picksim/config.hpp"
#include "picksim/des_engine.hpp"
#include "picksim/metrics.hpp"
#include "picksim/storage_policy.hpp"
#include "picksim/warehouse.hpp"

namespace picksim {

enum class PickingMode { area, zoning };

const char* to_string(PickingMode m);
PickingMode parse_picking_mode(std::string_view text);  // area | zoning

struct OrderLine {
  ItemIndex item = 0;
  long qty = 1;
  double weight_kg = 0.0;
};

struct Order {
  std::string order_no;
  DateTime order_datetime;
  std::string truck_id;  // delivery route; empty when unknown
  std::vector<OrderLine> lines;
};

struct RouteStop {
  std::size_t line = 0;  // index into Order::lines
  LocationIndex location = 0;
};

/// One picker's share of one order: the whole order in area mode, one zone's
/// lines in zoning mode. Stops are in ascending seq_no.
struct PickTask {
  std::size_t order = 0;  // index into the order list given to prepare_orders
  std::size_t picker = 0;
  std::vector<RouteStop> route;
};

struct PickPlan {
  PickingMode mode = PickingMode::area;
  std::vector<std::size_t> sequence;  // order indices in picking order
  std::vector<PickTask> tasks;
  std::vector<std::string> pickers;   // zone per picker ("" in area mode)
  std::vector<std::vector<std::size_t>> picker_tasks;
  std::vector<std::string> warnings;
};

/// Where a line will be picked from, used to sort the route.
using SourceLocator = std::function<LocationIndex(ItemIndex)>;

/// Groups orders by day and truck, reverses each truck's delivery sequence
/// (last stop picked first) and sorts every route by the seq_no of its source
/// location. Zoning mode splits each order into one task per zone.
PickPlan prepare_orders(std::span<const Order> orders, PickingMode mode, const Layout& layout,
                        const SourceLocator& source_of);

/// FIFO location of the item, else its nearest candidate slot.
SourceLocator fifo_source(const Inventory& inventory, const StoragePlanner& planner, const Layout& layout);

struct PickedEntry {
  long pallets_touched = 0;
  long pieces = 0;
};

struct HandlingParams {
  Seconds base_s = 0.0;        // BTpu
  Seconds per_pallet_s = 0.0;  // PPpu
  Seconds per_master_s = 0.0;  // PMpu
  long pieces_per_master = 1;
};

/// base + per_pallet x pallets + per_master x ceil(pieces / pieces_per_master)
/// summed over entries; zero for an empty batch.
Seconds handling_time(std::span<const PickedEntry> batch, const HandlingParams& p);

/// Per-task walking segments. Segment i moves the picker from route position
/// i to i + 1, where position 0 is the entrance, position k + 1 is stop k and
/// the last position is the special area.
class WalkModel {
 public:
  static WalkModel constant(const PickPlan& plan, Seconds per_task);
  static WalkModel distance(const PickPlan& plan, const Layout& layout, const Equipment& handlift,
                            const Equipment& stacker, bool handlift_can_pick, bool stacker_can_pick);

  /// Sum of segments [from, to).
  Seconds span(std::size_t task, std::size_t from, std::size_t to) const;
  long turns(std::size_t task, std::size_t from, std::size_t to) const;
  const std::vector<Seconds>& segments(std::size_t task) const { return segments_.at(task); }

 private:
  std::vector<std::vector<Seconds>> segments_;
  std::vector<std::vector<int>> turns_;
};

/// Stock stayed short and nothing can refill it.
class StarvationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PickingSettings {
  HandlingParams handling;
  Seconds sort_base_s = 0.0;        // BTs
  Seconds sort_per_pallet_s = 0.0;  // PPs
  Seconds sort_per_master_s = 0.0;  // PMs
  long starvation_retry_limit = 64;
};

struct RunHooks {
  std::function<void(ItemIndex, const Inventory::Take&)> on_pick;
  std::function<void(ItemIndex, long)> on_supply;
};

/// Run state of all pickers for one terminating run.
class PickingProcess {
 public:
  PickingProcess(const PickPlan& plan, std::span<const Order> orders, const Catalog& catalog, WalkModel walk,
                 Inventory& inventory, const StoragePlanner& planner, WaitingList& waiting, ProcessMetrics& metrics,
                 PickingSettings settings, RunHooks hooks = {});

  /// First task of every picker at time 0.
  std::vector<PendingEvent> initial_events() const;

  std::vector<PendingEvent> handle_spo(std::size_t task, Seconds now, const EventList& pending);
  std::vector<PendingEvent> handle_pp(std::size_t task, std::size_t line, LocationIndex location, Seconds now,
                                      const EventList& pending);

  bool all_complete() const { return open_orders_ == 0; }
  /// Completion time per order (indexed like the order list); NaN while open.
  const std::vector<Seconds>& order_completion() const { return order_done_; }
  Seconds makespan() const { return makespan_; }
  long remaining(std::size_t task, std::size_t stop) const { return state_.at(task).remaining.at(stop); }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  struct TaskState {
    std::vector<long> remaining;
    bool started = false;
    bool done = false;
    long idle_retries = 0;
  };

  std::size_t first_short(std::size_t task, std::size_t from) const;
  PickedEntry pick_stop(std::size_t task, std::size_t stop, long qty);
  std::vector<PendingEvent> advance(std::size_t task, std::size_t from_stop, Seconds now,
                                    std::vector<PickedEntry> batch, bool partial_batch);
  std::vector<PendingEvent> finish(std::size_t task, Seconds at);
  void drain_if_freed();

  const PickPlan* plan_;
  std::span<const Order> orders_;
  const Catalog* catalog_;
  WalkModel walk_;
  Inventory* inventory_;
  const StoragePlanner* planner_;
  WaitingList* waiting_;
  ProcessMetrics* metrics_;
  PickingSettings settings_;
  RunHooks hooks_;

  std::vector<TaskState> state_;
  std::vector<std::size_t> open_tasks_per_order_;
  std::vector<Seconds> order_done_;
  std::vector<Seconds> order_latest_;
  std::vector<std::size_t> next_in_picker_;  // position of each task in its picker queue
  std::size_t open_orders_ = 0;
  Seconds makespan_ = 0.0;
  bool slot_freed_ = false;
  std::vector<std::string> warnings_;
};

}  // namespace picksim
