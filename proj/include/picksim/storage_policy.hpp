#pragma once

#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "picksim/allocation.hpp"
#include "picksim/warehouse.hpp"

namespace picksim {

enum class PolicyKind { fixed, random, fixed_zone };

const char* to_string(PolicyKind p);
PolicyKind parse_policy(std::string_view text);  // fixed | random | fixed-zone

/// One inbound pallet waiting to be stored.
struct InboundPallet {
  ItemIndex item = 0;
  long qty = 0;
  Date mfg_date;
};

/// Throws InputError for an unknown item code.
InboundPallet make_inbound(const Catalog& catalog, std::string_view item_code, long qty, Date mfg_date);

struct Assignment {
  LocationIndex location = 0;
  Seconds duration = 0.0;  // travel from receiving + base + per-pallet time
};

struct Waiting {};

using PutAwayResult = std::variant<Assignment, Waiting>;

/// Inbound pallets that found no slot, in arrival order.
class WaitingList {
 public:
  struct Entry {
    InboundPallet pallet;
    Seconds enqueued_at = 0.0;
  };

  void push(InboundPallet pallet, Seconds now) { queue_.push_back({pallet, now}); }
  bool empty() const { return queue_.empty(); }
  std::size_t size() const { return queue_.size(); }
  const Entry& front() const { return queue_.front(); }
  void pop_front() { queue_.pop_front(); }
  const std::deque<Entry>& entries() const { return queue_; }

  bool contains(ItemIndex item) const;
  /// Removes and returns the earliest entry for `item`.
  std::optional<Entry> take_first_of(ItemIndex item);

 private:
  std::deque<Entry> queue_;
};

struct PutAwaySettings {
  Equipment equipment;
  Seconds base_time_s = 0.0;        // BTpa
  Seconds per_pallet_time_s = 0.0;  // PPpa
};

/// Slot choice under one storage policy. Candidate slots per item are ranked
/// once by travel time from the receiving anchor (ties by seq_no); the nearest
/// vacant candidate wins.
class StoragePlanner {
 public:
  /// `slot_map` is required (and only used) for PolicyKind::fixed.
  StoragePlanner(const Layout& layout, const Catalog& catalog, PolicyKind policy, const SlotMap* slot_map,
                 PutAwaySettings settings);

  PolicyKind policy() const { return policy_; }
  const std::vector<LocationIndex>& candidates(ItemIndex item) const;
  bool qualifies(ItemIndex item, LocationIndex loc) const;

  std::optional<LocationIndex> nearest_vacant(ItemIndex item, const Inventory& inv) const;
  bool has_vacant_candidate(ItemIndex item, const Inventory& inv) const {
    return nearest_vacant(item, inv).has_value();
  }
  Seconds put_away_duration(LocationIndex loc) const { return duration_.at(loc); }

  /// Places the pallet at `loc` (must be a vacant qualifying slot).
  Assignment place_at(const InboundPallet& pallet, LocationIndex loc, Inventory& inv) const;
  std::optional<Assignment> try_place(const InboundPallet& pallet, Inventory& inv) const;

  /// Stores the pallet or, when no candidate is vacant, queues it.
  PutAwayResult put_away(const InboundPallet& pallet, Inventory& inv, WaitingList& waiting, Seconds now) const;

  /// Retries queued pallets in arrival order; stops at the first one that
  /// still has no slot.
  std::vector<Assignment> drain_waiting_list(WaitingList& waiting, Inventory& inv) const;

 private:
  const Layout* layout_;
  const Catalog* catalog_;
  PolicyKind policy_;
  std::vector<std::vector<LocationIndex>> per_item_;  // fixed, fixed_zone
  std::vector<LocationIndex> all_;                     // random
  std::vector<Seconds> duration_;
  std::vector<std::vector<bool>> member_;              // per item, per location
};

}  // namespace picksim
