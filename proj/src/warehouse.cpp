#include "picksim/warehouse.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace picksim {

std::string LocationId::str() const {
  return row + "-" + std::to_string(layer) + "-" + std::to_string(slot);
}

const char* anchor_row(Anchor a) {
  switch (a) {
    case Anchor::entrance: return "@entrance";
    case Anchor::special_area: return "@special";
    case Anchor::receiving: return "@receiving";
    case Anchor::elevator: return "@elevator";
  }
  return "@entrance";
}

Seconds travel_time(const Location& from, const Location& to, const Equipment& eq, int turns) {
  const double dx = std::abs(to.x_cm - from.x_cm);
  const double dy = std::abs(to.y_cm - from.y_cm);
  const double dz = std::abs(to.z_cm - from.z_cm);
  Seconds t = (dx + dy) / eq.speed_cm_s;
  if (eq.lift_speed_cm_s) {
    t += dz / *eq.lift_speed_cm_s;
  } else if (dz > 0.0) {
    throw std::invalid_argument("equipment without lift cannot reach " + to.id.str());
  }
  return t + turns * eq.turn_time_s;
}

int turns_between(const Location& a, const Location& b) { return a.parent == b.parent ? 0 : 1; }

Layout::Layout(std::vector<Location> locations) : locations_(std::move(locations)) {
  std::set<LocationId> ids;
  std::set<long> seqs;
  for (const auto& loc : locations_) {
    if (!ids.insert(loc.id).second) throw std::invalid_argument("duplicate location id " + loc.id.str());
    if (!seqs.insert(loc.seq_no).second) {
      throw std::invalid_argument("duplicate seq_no " + std::to_string(loc.seq_no) + " at " + loc.id.str());
    }
    if (loc.x_cm < 0 || loc.y_cm < 0 || loc.z_cm < 0) {
      throw std::invalid_argument("negative coordinate at " + loc.id.str());
    }
  }

  auto find_row = [this](const char* row) -> std::optional<LocationIndex> {
    for (LocationIndex i = 0; i < locations_.size(); ++i) {
      if (locations_[i].id.row == row) return i;
    }
    return std::nullopt;
  };

  auto entrance = find_row(anchor_row(Anchor::entrance));
  if (!entrance) {
    Location origin;
    origin.id = LocationId{anchor_row(Anchor::entrance), 0, 0};
    origin.seq_no = seqs.empty() ? -1 : std::min(*seqs.begin(), 0L) - 1;
    locations_.push_back(origin);
    entrance = locations_.size() - 1;
  }
  for (Anchor a : {Anchor::entrance, Anchor::special_area, Anchor::receiving, Anchor::elevator}) {
    anchors_[static_cast<std::size_t>(a)] = find_row(anchor_row(a)).value_or(*entrance);
  }

  std::set<std::string> zones;
  for (LocationIndex i = 0; i < locations_.size(); ++i) {
    if (locations_[i].is_anchor()) continue;
    storage_.push_back(i);
    zones.insert(locations_[i].zone);
  }
  std::sort(storage_.begin(), storage_.end(),
            [this](LocationIndex a, LocationIndex b) { return locations_[a].seq_no < locations_[b].seq_no; });
  zones_.assign(zones.begin(), zones.end());
}

std::optional<LocationIndex> Layout::find(const LocationId& id) const {
  for (LocationIndex i = 0; i < locations_.size(); ++i) {
    if (locations_[i].id == id) return i;
  }
  return std::nullopt;
}

LocationIndex Layout::index_of(const LocationId& id) const {
  if (auto i = find(id)) return *i;
  throw LookupError("unknown location " + id.str());
}

Catalog::Catalog(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) { return a.code < b.code; });
  for (ItemIndex i = 0; i < items_.size(); ++i) {
    const auto& it = items_[i];
    if (!(it.weight_kg > 0)) throw std::invalid_argument("item " + it.code + ": weight must be > 0");
    if (it.qty_per_pallet < 1) throw std::invalid_argument("item " + it.code + ": qty_per_pallet must be >= 1");
    if (!by_code_.emplace(it.code, i).second) throw std::invalid_argument("duplicate item code " + it.code);
  }
}

std::optional<ItemIndex> Catalog::find(std::string_view code) const {
  auto it = by_code_.find(std::string(code));
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

ItemIndex Catalog::index_of(std::string_view code) const {
  if (auto i = find(code)) return *i;
  throw LookupError("unknown item code " + std::string(code));
}

std::optional<PalletRecord> fifo_lot(std::span<const PalletRecord> candidates, const Layout& layout) {
  const PalletRecord* best = nullptr;
  for (const auto& rec : candidates) {
    if (!best || rec.mfg_date < best->mfg_date ||
        (rec.mfg_date == best->mfg_date && layout.at(rec.location).seq_no < layout.at(best->location).seq_no)) {
      best = &rec;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

Inventory::Inventory(const Layout& layout, const Catalog& catalog)
    : layout_(&layout),
      slots_(layout.size()),
      lots_(catalog.size()),
      on_hand_(catalog.size(), 0),
      received_(catalog.size(), 0),
      picked_(catalog.size(), 0) {}

void Inventory::place(const PalletRecord& record) {
  if (record.location >= slots_.size()) throw LookupError("pallet placed at unknown location");
  const auto& loc = layout_->at(record.location);
  if (loc.is_anchor()) throw std::logic_error("cannot store a pallet at anchor " + loc.id.str());
  if (slots_[record.location]) throw std::logic_error("slot " + loc.id.str() + " already holds a pallet");
  if (record.qty <= 0) throw std::logic_error("pallet quantity must be positive");
  slots_[record.location] = record;
  lots_.at(record.item).emplace(record.mfg_date.days, loc.seq_no, record.location);
  on_hand_[record.item] += record.qty;
  received_[record.item] += record.qty;
  ++pallets_;
}

Inventory::Take Inventory::take(ItemIndex item, long qty) {
  Take out;
  auto& lots = lots_.at(item);
  while (qty > 0 && !lots.empty()) {
    const auto slot = std::get<2>(*lots.begin());
    auto& rec = *slots_[slot];
    const long n = std::min(qty, rec.qty);
    rec.qty -= n;
    qty -= n;
    out.pieces += n;
    ++out.pallets_touched;
    out.consumed.push_back(rec.mfg_date);
    if (rec.qty == 0) {
      lots.erase(lots.begin());
      slots_[slot].reset();
      --pallets_;
      ++out.slots_freed;
    }
  }
  on_hand_[item] -= out.pieces;
  picked_[item] += out.pieces;
  return out;
}

std::optional<LocationIndex> Inventory::fifo_location(ItemIndex item) const {
  const auto& lots = lots_.at(item);
  if (lots.empty()) return std::nullopt;
  return std::get<2>(*lots.begin());
}

std::vector<PalletRecord> Inventory::lots(ItemIndex item) const {
  std::vector<PalletRecord> out;
  for (const auto& key : lots_.at(item)) out.push_back(*slots_[std::get<2>(key)]);
  return out;
}

}  // namespace picksim
