#include "picksim/picking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace picksim {

const char* to_string(PickingMode m) { return m == PickingMode::area ? "area" : "zoning"; }

PickingMode parse_picking_mode(std::string_view text) {
  if (text == "area") return PickingMode::area;
  if (text == "zoning") return PickingMode::zoning;
  throw std::invalid_argument("unknown picking mode '" + std::string(text) + "'");
}

PickPlan prepare_orders(std::span<const Order> orders, PickingMode mode, const Layout& layout,
                        const SourceLocator& source_of) {
  PickPlan plan;
  plan.mode = mode;

  // (day, truck group, -stop) per order; group ranks are per day.
  std::vector<std::tuple<std::int32_t, std::size_t, long>> key(orders.size());
  std::map<std::int32_t, std::map<std::string, std::size_t>> group_of;  // day -> truck -> rank
  std::map<std::int32_t, std::size_t> groups_in_day;
  std::map<std::pair<std::int32_t, std::string>, long> stops_in_truck;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto& o = orders[i];
    if (o.lines.empty()) throw std::invalid_argument("order " + o.order_no + " has no lines");
    const auto day = o.order_datetime.date.days;
    std::size_t group = 0;
    long stop = 0;
    if (o.truck_id.empty()) {
      group = groups_in_day[day]++;
      plan.warnings.push_back("order " + o.order_no + " has no truck_id; picked as its own group");
    } else {
      auto& trucks = group_of[day];
      auto it = trucks.find(o.truck_id);
      if (it == trucks.end()) it = trucks.emplace(o.truck_id, groups_in_day[day]++).first;
      group = it->second;
      stop = stops_in_truck[{day, o.truck_id}]++;
    }
    key[i] = {day, group, -stop};
  }
  plan.sequence.resize(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) plan.sequence[i] = i;
  std::stable_sort(plan.sequence.begin(), plan.sequence.end(),
                   [&key](std::size_t a, std::size_t b) { return key[a] < key[b]; });

  if (mode == PickingMode::area) {
    plan.pickers = {""};
  } else {
    plan.pickers = layout.zones();
  }
  plan.picker_tasks.resize(plan.pickers.size());

  for (auto o : plan.sequence) {
    std::vector<RouteStop> route;
    for (std::size_t l = 0; l < orders[o].lines.size(); ++l) route.push_back({l, source_of(orders[o].lines[l].item)});
    std::stable_sort(route.begin(), route.end(), [&layout](const RouteStop& a, const RouteStop& b) {
      return layout.at(a.location).seq_no < layout.at(b.location).seq_no;
    });

    if (mode == PickingMode::area) {
      plan.picker_tasks[0].push_back(plan.tasks.size());
      plan.tasks.push_back(PickTask{o, 0, std::move(route)});
      continue;
    }
    for (std::size_t p = 0; p < plan.pickers.size(); ++p) {
      PickTask task{o, p, {}};
      for (const auto& stop : route) {
        if (layout.at(stop.location).zone == plan.pickers[p]) task.route.push_back(stop);
      }
      if (task.route.empty()) continue;
      plan.picker_tasks[p].push_back(plan.tasks.size());
      plan.tasks.push_back(std::move(task));
    }
  }
  return plan;
}

SourceLocator fifo_source(const Inventory& inventory, const StoragePlanner& planner, const Layout& layout) {
  return [&inventory, &planner, &layout](ItemIndex item) -> LocationIndex {
    if (auto loc = inventory.fifo_location(item)) return *loc;
    const auto& cands = planner.candidates(item);
    if (!cands.empty()) return cands.front();
    if (!layout.storage_slots().empty()) return layout.storage_slots().front();
    throw std::invalid_argument("layout has no storage slots");
  };
}

Seconds handling_time(std::span<const PickedEntry> batch, const HandlingParams& p) {
  if (batch.empty()) return 0.0;
  Seconds t = p.base_s;
  for (const auto& e : batch) {
    const long masters = (e.pieces + p.pieces_per_master - 1) / p.pieces_per_master;
    t += e.pallets_touched * p.per_pallet_s + masters * p.per_master_s;
  }
  return t;
}

WalkModel WalkModel::constant(const PickPlan& plan, Seconds per_task) {
  WalkModel w;
  for (const auto& task : plan.tasks) {
    const std::size_t n = task.route.size() + 1;
    w.segments_.emplace_back(n, per_task / static_cast<double>(n));
    w.turns_.emplace_back(n, 0);
  }
  return w;
}

WalkModel WalkModel::distance(const PickPlan& plan, const Layout& layout, const Equipment& handlift,
                              const Equipment& stacker, bool handlift_can_pick, bool stacker_can_pick) {
  WalkModel w;
  const auto& entrance = layout.at(layout.anchor(Anchor::entrance));
  const auto& special = layout.at(layout.anchor(Anchor::special_area));
  for (const auto& task : plan.tasks) {
    const bool high = std::any_of(task.route.begin(), task.route.end(), [&](const RouteStop& s) {
      return layout.at(s.location).z_cm != entrance.z_cm;
    });
    const bool use_stacker = high || !handlift_can_pick;
    if (use_stacker && !stacker_can_pick) {
      throw std::invalid_argument("no picking equipment can reach the upper rack layers");
    }
    const Equipment& eq = use_stacker ? stacker : handlift;

    std::vector<const Location*> points{&entrance};
    for (const auto& s : task.route) points.push_back(&layout.at(s.location));
    points.push_back(&special);

    std::vector<Seconds> seg;
    std::vector<int> turns;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      const int k = turns_between(*points[i], *points[i + 1]);
      seg.push_back(travel_time(*points[i], *points[i + 1], eq, k));
      turns.push_back(k);
    }
    w.segments_.push_back(std::move(seg));
    w.turns_.push_back(std::move(turns));
  }
  return w;
}

Seconds WalkModel::span(std::size_t task, std::size_t from, std::size_t to) const {
  const auto& seg = segments_.at(task);
  Seconds t = 0.0;
  for (std::size_t i = from; i < to; ++i) t += seg.at(i);
  return t;
}

long WalkModel::turns(std::size_t task, std::size_t from, std::size_t to) const {
  const auto& tr = turns_.at(task);
  long n = 0;
  for (std::size_t i = from; i < to; ++i) n += tr.at(i);
  return n;
}

PickingProcess::PickingProcess(const PickPlan& plan, std::span<const Order> orders, const Catalog& catalog,
                               WalkModel walk, Inventory& inventory, const StoragePlanner& planner,
                               WaitingList& waiting, ProcessMetrics& metrics, PickingSettings settings,
                               RunHooks hooks)
    : plan_(&plan),
      orders_(orders),
      catalog_(&catalog),
      walk_(std::move(walk)),
      inventory_(&inventory),
      planner_(&planner),
      waiting_(&waiting),
      metrics_(&metrics),
      settings_(settings),
      hooks_(std::move(hooks)),
      state_(plan.tasks.size()),
      open_tasks_per_order_(orders.size(), 0),
      order_done_(orders.size(), std::numeric_limits<Seconds>::quiet_NaN()),
      order_latest_(orders.size(), 0.0),
      next_in_picker_(plan.tasks.size(), 0) {
  for (std::size_t t = 0; t < plan.tasks.size(); ++t) {
    const auto& task = plan.tasks[t];
    for (const auto& stop : task.route) state_[t].remaining.push_back(orders[task.order].lines.at(stop.line).qty);
    ++open_tasks_per_order_.at(task.order);
  }
  for (const auto& queue : plan.picker_tasks) {
    for (std::size_t k = 0; k < queue.size(); ++k) next_in_picker_[queue[k]] = k + 1;
  }
  for (auto n : open_tasks_per_order_) open_orders_ += n > 0 ? 1 : 0;
}

std::vector<PendingEvent> PickingProcess::initial_events() const {
  std::vector<PendingEvent> out;
  for (const auto& queue : plan_->picker_tasks) {
    if (!queue.empty()) out.push_back({0.0, StartPickOrder{queue.front()}});
  }
  return out;
}

std::size_t PickingProcess::first_short(std::size_t task, std::size_t from) const {
  const auto& t = plan_->tasks[task];
  const auto& order = orders_[t.order];
  std::vector<std::pair<ItemIndex, long>> claimed;
  for (std::size_t s = from; s < t.route.size(); ++s) {
    const ItemIndex item = order.lines[t.route[s].line].item;
    auto it = std::find_if(claimed.begin(), claimed.end(), [item](const auto& c) { return c.first == item; });
    if (it == claimed.end()) it = claimed.insert(claimed.end(), {item, 0});
    const long need = state_[task].remaining[s];
    if (need > inventory_->total_on_hand(item) - it->second) return s;
    it->second += need;
  }
  return t.route.size();
}

PickedEntry PickingProcess::pick_stop(std::size_t task, std::size_t stop, long qty) {
  const auto& t = plan_->tasks[task];
  const ItemIndex item = orders_[t.order].lines[t.route[stop].line].item;
  const auto take = inventory_->take(item, qty);
  state_[task].remaining[stop] -= take.pieces;
  if (take.slots_freed > 0) slot_freed_ = true;
  if (hooks_.on_pick) hooks_.on_pick(item, take);
  return PickedEntry{take.pallets_touched, take.pieces};
}

void PickingProcess::drain_if_freed() {
  if (!slot_freed_) return;
  slot_freed_ = false;
  for (const auto& a : planner_->drain_waiting_list(*waiting_, *inventory_)) {
    const auto& rec = *inventory_->at(a.location);
    if (rec.qty == catalog_->at(rec.item).qty_per_pallet) {
      metrics_->put_full_s += a.duration;
    } else {
      metrics_->put_partial_s += a.duration;
    }
    if (hooks_.on_supply) hooks_.on_supply(rec.item, rec.qty);
  }
}

std::vector<PendingEvent> PickingProcess::advance(std::size_t task, std::size_t from_stop, Seconds now,
                                                  std::vector<PickedEntry> batch, bool partial_batch) {
  const auto& t = plan_->tasks[task];
  const std::size_t n = t.route.size();
  const std::size_t stop = first_short(task, from_stop);
  for (std::size_t s = from_stop; s < stop; ++s) batch.push_back(pick_stop(task, s, state_[task].remaining[s]));

  // Walk from the position reached so far to the stock-out, or home.
  const std::size_t from_pos = from_stop;
  const std::size_t to_pos = stop == n ? n + 1 : stop + 1;
  const Seconds walk = walk_.span(task, from_pos, to_pos);
  const Seconds handling = handling_time(batch, settings_.handling);
  metrics_->move_s += walk;
  metrics_->turns += walk_.turns(task, from_pos, to_pos);
  (partial_batch ? metrics_->pick_partial_s : metrics_->pick_full_s) += handling;
  state_[task].started = true;

  const Seconds at = now + walk + handling;
  drain_if_freed();
  if (stop == n) return finish(task, at);
  return {PendingEvent{at, PartialPick{task, t.route[stop].line, t.route[stop].location}}};
}

std::vector<PendingEvent> PickingProcess::handle_spo(std::size_t task, Seconds now, const EventList&) {
  auto& st = state_.at(task);
  if (st.started || st.done) {
    warnings_.push_back("start-pick for task " + std::to_string(task) + " which already started; ignored");
    return {};
  }
  return advance(task, 0, now, {}, false);
}

std::vector<PendingEvent> PickingProcess::handle_pp(std::size_t task, std::size_t line, LocationIndex location,
                                                    Seconds now, const EventList& pending) {
  auto& st = state_.at(task);
  const auto& t = plan_->tasks[task];
  auto it = std::find_if(t.route.begin(), t.route.end(), [line](const RouteStop& s) { return s.line == line; });
  if (it == t.route.end()) throw std::logic_error("partial pick for a line outside its task");
  const auto stop = static_cast<std::size_t>(it - t.route.begin());
  if (st.done || st.remaining[stop] == 0) {
    warnings_.push_back("partial pick for an already picked line; ignored");
    return {};
  }

  const ItemIndex item = orders_[t.order].lines[line].item;
  const long demand = st.remaining[stop];
  const long available = inventory_->total_on_hand(item);

  if (available >= demand) {
    st.idle_retries = 0;
    std::vector<PickedEntry> batch{pick_stop(task, stop, demand)};
    return advance(task, stop + 1, now, std::move(batch), false);
  }

  Seconds handling = 0.0;
  if (available > 0) {
    const PickedEntry e = pick_stop(task, stop, available);
    handling = handling_time(std::span(&e, 1), settings_.handling);
    metrics_->pick_partial_s += handling;
    st.idle_retries = 0;
  } else {
    ++st.idle_retries;
  }

  const auto next_rp = pending.next_of(EventKind::replenish);
  if (!next_rp) {
    throw StarvationError("item " + catalog_->at(item).code + " short by " + std::to_string(demand - available) +
                          " with no replenishment pending");
  }
  if (st.idle_retries > settings_.starvation_retry_limit) {
    throw StarvationError("item " + catalog_->at(item).code + " not restocked after " +
                          std::to_string(st.idle_retries) + " replenishments");
  }
  const Seconds ready = now + handling;
  const Seconds at = std::max(next_rp->time, ready);
  metrics_->waiting_s += at - ready;
  drain_if_freed();
  return {PendingEvent{at, PartialPick{task, line, location}}};
}

std::vector<PendingEvent> PickingProcess::finish(std::size_t task, Seconds at) {
  auto& st = state_[task];
  st.done = true;
  makespan_ = std::max(makespan_, at);
  const auto& t = plan_->tasks[task];

  const auto o = t.order;
  order_latest_[o] = std::max(order_latest_[o], at);
  if (--open_tasks_per_order_[o] == 0) {
    --open_orders_;
    order_done_[o] = order_latest_[o];
    bool any_partial = false;
    for (const auto& line : orders_[o].lines) {
      const long per_pallet = catalog_->at(line.item).qty_per_pallet;
      const long full = line.qty / per_pallet;
      const long rest = line.qty % per_pallet;
      metrics_->sort_full_s += full * settings_.sort_per_pallet_s;
      if (rest > 0) {
        const long masters = (rest + settings_.handling.pieces_per_master - 1) / settings_.handling.pieces_per_master;
        metrics_->sort_partial_s += masters * settings_.sort_per_master_s;
        any_partial = true;
      }
    }
    (any_partial ? metrics_->sort_partial_s : metrics_->sort_full_s) += settings_.sort_base_s;
  }

  const auto& queue = plan_->picker_tasks[t.picker];
  const auto pos = next_in_picker_[task];
  if (pos < queue.size()) return {PendingEvent{at, StartPickOrder{queue[pos]}}};
  return {};
}

}  // namespace picksim
