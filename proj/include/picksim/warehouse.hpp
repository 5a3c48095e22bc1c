#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "picksim/calendar.hpp"
#include "picksim/des_engine.hpp"

namespace picksim {

using LocationIndex = std::size_t;
using ItemIndex = std::size_t;

/// Unknown location id or item code.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// (row, layer, slot). Rows starting with '@' are reserved for anchors.
struct LocationId {
  std::string row;
  int layer = 0;
  int slot = 0;

  std::string str() const;
  friend auto operator<=>(const LocationId&, const LocationId&) = default;
};

enum class Anchor { entrance, special_area, receiving, elevator };

/// Reserved row name for an anchor, e.g. "@entrance".
const char* anchor_row(Anchor a);

struct Location {
  LocationId id;
  double x_cm = 0.0;
  double y_cm = 0.0;
  double z_cm = 0.0;
  std::string zone;
  long seq_no = 0;
  std::string direction;
  std::string parent;  // aisle / rack node

  bool is_anchor() const { return !id.row.empty() && id.row.front() == '@'; }
};

struct Item {
  std::string code;
  std::string category;
  double weight_kg = 1.0;
  std::string home_zone;
  long qty_per_pallet = 1;
};

/// One pallet in one slot (selective racking).
struct PalletRecord {
  LocationIndex location = 0;
  ItemIndex item = 0;
  long qty = 0;
  Date mfg_date;
};

enum class EquipmentKind { handlift, stacker };

struct Equipment {
  EquipmentKind kind = EquipmentKind::stacker;
  int count = 1;
  double speed_cm_s = 100.0;
  std::optional<double> lift_speed_cm_s;  // stackers only
  Seconds turn_time_s = 0.0;
  bool can_put_away = true;
  bool can_pick_up = true;
  bool can_transfer = true;
  int operators_per_unit = 1;

  bool can_lift() const { return lift_speed_cm_s.has_value(); }
};

/// Rectilinear x/y distance over speed, plus vertical distance over lift
/// speed, plus turns x turn time. Throws std::invalid_argument when the move
/// needs a lift the equipment does not have.
Seconds travel_time(const Location& from, const Location& to, const Equipment& eq, int turns);

/// Aisle changes between two points: 1 when their parents differ.
int turns_between(const Location& a, const Location& b);

class Layout {
 public:
  /// Validates unique ids, unique seq_no and non-negative coordinates. An
  /// entrance anchor at the origin is synthesised when none is given; the
  /// other anchors fall back to the entrance.
  explicit Layout(std::vector<Location> locations);

  std::size_t size() const { return locations_.size(); }
  const Location& at(LocationIndex i) const { return locations_.at(i); }
  const std::vector<Location>& locations() const { return locations_; }

  std::optional<LocationIndex> find(const LocationId& id) const;
  LocationIndex index_of(const LocationId& id) const;
  LocationIndex anchor(Anchor a) const { return anchors_[static_cast<std::size_t>(a)]; }

  /// Non-anchor locations ordered by seq_no.
  const std::vector<LocationIndex>& storage_slots() const { return storage_; }
  /// Distinct zone names of storage slots, sorted.
  const std::vector<std::string>& zones() const { return zones_; }

 private:
  std::vector<Location> locations_;
  std::vector<LocationIndex> storage_;
  std::vector<std::string> zones_;
  LocationIndex anchors_[4] = {};
};

class Catalog {
 public:
  /// Items are kept sorted by code; codes must be unique.
  explicit Catalog(std::vector<Item> items);

  std::size_t size() const { return items_.size(); }
  const Item& at(ItemIndex i) const { return items_.at(i); }
  const std::vector<Item>& items() const { return items_; }
  std::optional<ItemIndex> find(std::string_view code) const;
  ItemIndex index_of(std::string_view code) const;

 private:
  std::vector<Item> items_;
  std::unordered_map<std::string, ItemIndex> by_code_;
};

/// Oldest lot among `candidates` (ties: smallest seq_no). nullopt signals a
/// stock-out.
std::optional<PalletRecord> fifo_lot(std::span<const PalletRecord> candidates, const Layout& layout);

/// Dynamic pallet state for one run.
class Inventory {
 public:
  Inventory(const Layout& layout, const Catalog& catalog);

  struct Take {
    long pieces = 0;
    int pallets_touched = 0;
    int slots_freed = 0;
    std::vector<Date> consumed;  // mfg_date of every pallet touched, in order
  };

  /// Creates a record; throws std::logic_error on an occupied or anchor slot.
  void place(const PalletRecord& record);

  /// Removes up to `qty` pieces of `item`, oldest pallets first.
  Take take(ItemIndex item, long qty);

  bool occupied(LocationIndex loc) const { return slots_.at(loc).has_value(); }
  const std::optional<PalletRecord>& at(LocationIndex loc) const { return slots_.at(loc); }

  long total_on_hand(ItemIndex item) const { return on_hand_.at(item); }
  std::optional<LocationIndex> fifo_location(ItemIndex item) const;
  std::vector<PalletRecord> lots(ItemIndex item) const;

  long received(ItemIndex item) const { return received_.at(item); }
  long picked(ItemIndex item) const { return picked_.at(item); }
  std::size_t pallet_count() const { return pallets_; }
  std::size_t item_count() const { return on_hand_.size(); }

 private:
  using LotKey = std::tuple<std::int32_t, long, LocationIndex>;  // date, seq_no, slot

  const Layout* layout_;
  std::vector<std::optional<PalletRecord>> slots_;
  std::vector<std::set<LotKey>> lots_;
  std::vector<long> on_hand_;
  std::vector<long> received_;
  std::vector<long> picked_;
  std::size_t pallets_ = 0;
};

}  // namespace picksim
