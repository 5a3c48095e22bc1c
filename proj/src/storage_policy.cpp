#include "picksim/storage_policy.hpp"

#include <algorithm>
#include <limits>

#include "picksim/csv.hpp"

namespace picksim {

const char* to_string(PolicyKind p) {
  switch (p) {
    case PolicyKind::fixed: return "fixed";
    case PolicyKind::random: return "random";
    case PolicyKind::fixed_zone: return "fixed-zone";
  }
  return "?";
}

PolicyKind parse_policy(std::string_view text) {
  if (text == "fixed") return PolicyKind::fixed;
  if (text == "random") return PolicyKind::random;
  if (text == "fixed-zone" || text == "fixed_zone") return PolicyKind::fixed_zone;
  throw std::invalid_argument("unknown storage policy '" + std::string(text) + "'");
}

InboundPallet make_inbound(const Catalog& catalog, std::string_view item_code, long qty, Date mfg_date) {
  const auto item = catalog.find(item_code);
  if (!item) throw InputError("unknown item code '" + std::string(item_code) + "'");
  return InboundPallet{*item, qty, mfg_date};
}

bool WaitingList::contains(ItemIndex item) const {
  return std::any_of(queue_.begin(), queue_.end(), [item](const Entry& e) { return e.pallet.item == item; });
}

std::optional<WaitingList::Entry> WaitingList::take_first_of(ItemIndex item) {
  auto it = std::find_if(queue_.begin(), queue_.end(), [item](const Entry& e) { return e.pallet.item == item; });
  if (it == queue_.end()) return std::nullopt;
  Entry e = *it;
  queue_.erase(it);
  return e;
}

StoragePlanner::StoragePlanner(const Layout& layout, const Catalog& catalog, PolicyKind policy,
                               const SlotMap* slot_map, PutAwaySettings settings)
    : layout_(&layout),
      catalog_(&catalog),
      policy_(policy),
      per_item_(catalog.size()),
      duration_(layout.size(), std::numeric_limits<Seconds>::infinity()),
      member_(catalog.size(), std::vector<bool>(layout.size(), false)) {
  if (policy == PolicyKind::fixed && !slot_map) throw std::invalid_argument("fixed policy needs a slot map");

  const auto& receiving = layout.at(layout.anchor(Anchor::receiving));
  std::vector<LocationIndex> reachable;
  for (auto loc : layout.storage_slots()) {
    const auto& l = layout.at(loc);
    if (!settings.equipment.can_lift() && l.z_cm != receiving.z_cm) continue;
    const Seconds travel = travel_time(receiving, l, settings.equipment, turns_between(receiving, l));
    duration_[loc] = travel + settings.base_time_s + settings.per_pallet_time_s;
    reachable.push_back(loc);
  }
  auto nearer = [&](LocationIndex a, LocationIndex b) {
    if (duration_[a] != duration_[b]) return duration_[a] < duration_[b];
    return layout.at(a).seq_no < layout.at(b).seq_no;
  };
  std::sort(reachable.begin(), reachable.end(), nearer);

  switch (policy) {
    case PolicyKind::random:
      all_ = reachable;
      for (auto& m : member_) {
        for (auto loc : reachable) m[loc] = true;
      }
      break;
    case PolicyKind::fixed_zone:
      for (ItemIndex i = 0; i < catalog.size(); ++i) {
        for (auto loc : reachable) {
          if (layout.at(loc).zone == catalog.at(i).home_zone) {
            per_item_[i].push_back(loc);
            member_[i][loc] = true;
          }
        }
      }
      break;
    case PolicyKind::fixed:
      if (slot_map->item_count() != catalog.size()) throw std::invalid_argument("slot map does not match catalog");
      for (ItemIndex i = 0; i < catalog.size(); ++i) {
        for (auto loc : slot_map->slots(i)) {
          if (duration_.at(loc) == std::numeric_limits<Seconds>::infinity()) continue;
          per_item_[i].push_back(loc);
          member_[i][loc] = true;
        }
        std::sort(per_item_[i].begin(), per_item_[i].end(), nearer);
      }
      break;
  }
}

const std::vector<LocationIndex>& StoragePlanner::candidates(ItemIndex item) const {
  if (item >= per_item_.size()) throw LookupError("unknown item index");
  return policy_ == PolicyKind::random ? all_ : per_item_[item];
}

bool StoragePlanner::qualifies(ItemIndex item, LocationIndex loc) const { return member_.at(item).at(loc); }

std::optional<LocationIndex> StoragePlanner::nearest_vacant(ItemIndex item, const Inventory& inv) const {
  for (auto loc : candidates(item)) {
    if (!inv.occupied(loc)) return loc;
  }
  return std::nullopt;
}

Assignment StoragePlanner::place_at(const InboundPallet& pallet, LocationIndex loc, Inventory& inv) const {
  inv.place(PalletRecord{loc, pallet.item, pallet.qty, pallet.mfg_date});
  return Assignment{loc, duration_[loc]};
}

std::optional<Assignment> StoragePlanner::try_place(const InboundPallet& pallet, Inventory& inv) const {
  const auto loc = nearest_vacant(pallet.item, inv);
  if (!loc) return std::nullopt;
  return place_at(pallet, *loc, inv);
}

PutAwayResult StoragePlanner::put_away(const InboundPallet& pallet, Inventory& inv, WaitingList& waiting,
                                       Seconds now) const {
  if (pallet.item >= catalog_->size()) throw InputError("put-away of unknown item");
  if (auto a = try_place(pallet, inv)) return *a;
  waiting.push(pallet, now);
  return Waiting{};
}

std::vector<Assignment> StoragePlanner::drain_waiting_list(WaitingList& waiting, Inventory& inv) const {
  std::vector<Assignment> placed;
  while (!waiting.empty()) {
    auto a = try_place(waiting.front().pallet, inv);
    if (!a) break;
    waiting.pop_front();
    placed.push_back(*a);
  }
  return placed;
}

}  // namespace picksim
