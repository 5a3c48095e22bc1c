#include "picksim/simulation.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <map>

namespace picksim {

void place_starting_stock(const WeekInput& in, const StoragePlanner& planner, Inventory& inventory,
                          WaitingList& waiting) {
  struct Pending {
    InboundPallet pallet;
    std::optional<LocationIndex> recorded;
  };
  std::vector<Pending> all;
  for (const auto& p : in.initial) all.push_back({InboundPallet{p.item, p.qty, p.mfg_date}, p.location});
  for (const auto& r : in.receipts) all.push_back({r, std::nullopt});
  // Oldest first, so the waiting list never holds a lot older than stock on hand.
  std::stable_sort(all.begin(), all.end(),
                   [](const Pending& a, const Pending& b) { return a.pallet.mfg_date < b.pallet.mfg_date; });
  for (const auto& p : all) {
    const auto loc = p.recorded;
    if (loc && planner.qualifies(p.pallet.item, *loc) && !inventory.occupied(*loc)) {
      planner.place_at(p.pallet, *loc, inventory);
    } else {
      planner.put_away(p.pallet, inventory, waiting, 0.0);
    }
  }
}

PutAwaySettings put_away_settings(const SimConfig& cfg) {
  return PutAwaySettings{cfg.put_away_equipment(), cfg.BTpa, cfg.PPpa};
}

PickingSettings picking_settings(const SimConfig& cfg, std::size_t n_items) {
  PickingSettings s;
  s.handling = HandlingParams{cfg.BTpu, cfg.PPpu, cfg.PMpu, cfg.pieces_per_master};
  s.sort_base_s = cfg.BTs;
  s.sort_per_pallet_s = cfg.PPs;
  s.sort_per_master_s = cfg.PMs;
  s.starvation_retry_limit =
      cfg.starvation_retry_limit > 0 ? cfg.starvation_retry_limit : 4 * static_cast<long>(n_items + 1);
  return s;
}

namespace {

// Independent per-item ledger fed by the pick/supply hooks.
struct Audit {
  const Inventory* inventory = nullptr;
  std::vector<long> start, supplied, picked;
  std::vector<std::int32_t> last_consumed;

  void check(const Event& e) const {
    for (std::size_t i = 0; i < start.size(); ++i) {
      const long expect = start[i] + supplied[i] - picked[i];
      if (expect != inventory->total_on_hand(i)) {
        throw AuditError("conservation broken for item #" + std::to_string(i) + " after " + to_string(e.kind()) +
                         " at t=" + std::to_string(e.time));
      }
    }
  }
};

}  // namespace

WeekResult run_week(const SimConfig& cfg, const WeekInput& in, const WeekOptions& opt) {
  const auto& layout = *in.layout;
  const auto& catalog = *in.catalog;
  WeekResult result;

  const StoragePlanner planner(layout, catalog, opt.policy, in.slot_map, put_away_settings(cfg));
  Inventory inventory(layout, catalog);
  WaitingList waiting;
  place_starting_stock(in, planner, inventory, waiting);
  result.start_waiting = waiting.size();

  Audit audit;
  RunHooks hooks;
  if (opt.audit) {
    audit.inventory = &inventory;
    audit.start.resize(catalog.size());
    for (ItemIndex i = 0; i < catalog.size(); ++i) audit.start[i] = inventory.total_on_hand(i);
    audit.supplied.assign(catalog.size(), 0);
    audit.picked.assign(catalog.size(), 0);
    audit.last_consumed.assign(catalog.size(), std::numeric_limits<std::int32_t>::min());
    hooks.on_pick = [&audit](ItemIndex item, const Inventory::Take& take) {
      audit.picked[item] += take.pieces;
      for (const auto& d : take.consumed) {
        if (d.days < audit.last_consumed[item]) {
          throw AuditError("FIFO broken for item #" + std::to_string(item) + ": consumed " + d.iso() +
                           " after a later lot");
        }
        audit.last_consumed[item] = d.days;
      }
    };
    hooks.on_supply = [&audit](ItemIndex item, long qty) { audit.supplied[item] += qty; };
  }

  const PickPlan plan = prepare_orders(in.orders, opt.picking, layout, fifo_source(inventory, planner, layout));
  WalkModel walk = cfg.walking_mode == WalkingMode::constant
                       ? WalkModel::constant(plan, cfg.walking_const_s)
                       : WalkModel::distance(plan, layout, cfg.handlift(), cfg.stacker(), cfg.puh, cfg.pus);

  ProcessMetrics& metrics = result.metrics;
  PickingProcess picking(plan, in.orders, catalog, std::move(walk), inventory, planner, waiting, metrics,
                         picking_settings(cfg, catalog.size()), hooks);
  Replenisher replenisher(catalog, inventory, planner, waiting, ReplenishmentSampler(cfg.replenish, opt.seed),
                          metrics, in.run_start, hooks);

  Engine engine;
  engine.set_record_trace(opt.record_trace);
  engine.set_handler(EventKind::start_pick_order, [&picking](const Event& e, const Engine& eng) {
    return picking.handle_spo(std::get<StartPickOrder>(e.payload).order, e.time, eng.events());
  });
  engine.set_handler(EventKind::partial_pick, [&picking](const Event& e, const Engine& eng) {
    const auto& p = std::get<PartialPick>(e.payload);
    return picking.handle_pp(p.order, p.line, p.location, e.time, eng.events());
  });
  engine.set_handler(EventKind::replenish,
                     [&replenisher](const Event& e, const Engine&) { return replenisher.handle_rp(e.time); });
  if (opt.audit) engine.set_observer([&audit](const Event& e) { audit.check(e); });

  for (auto& ev : picking.initial_events()) engine.schedule(ev.time, std::move(ev.payload));
  if (!picking.all_complete()) engine.schedule(0.0, Replenish{});

  const Seconds horizon = cfg.max_week_s > 0.0 ? cfg.max_week_s : std::numeric_limits<Seconds>::infinity();
  engine.run(horizon, [&picking] { return picking.all_complete(); });
  if (!picking.all_complete()) {
    throw IncompleteRunError("run stopped at t=" + std::to_string(engine.now()) + " with orders still open");
  }

  result.makespan = picking.makespan();
  result.metric = result.makespan / cfg.unit_seconds();
  result.order_completion = picking.order_completion();
  result.warnings = plan.warnings;
  result.warnings.insert(result.warnings.end(), picking.warnings().begin(), picking.warnings().end());
  result.restocks = replenisher.log();
  result.trace = engine.trace();
  result.events_executed = engine.executed_count();
  return result;
}

}  // namespace picksim
