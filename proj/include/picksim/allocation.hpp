#pragma once

// Pre-run slot planning: how many dedicated slots each product receives, and
// which physical slots those are.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "picksim/warehouse.hpp"

namespace picksim {

enum class AllocationRule { homogeneous, demand_based };

struct ProductDemand {
  std::string item;
  double avg_picks = 0.0;
};

/// Slot counts, aligned with `products`. Every product first receives one
/// slot; each further slot goes to the product with the highest dispatching
/// ratio d/c (d = avg_picks, or 1 under the homogeneous rule; c = slots held),
/// ties to the smaller item code. Throws std::invalid_argument when
/// n_slots < products.size().
std::vector<std::size_t> allocate_slots(std::span<const ProductDemand> products, std::size_t n_slots,
                                        AllocationRule rule);

/// Dedicated slots per item, indexed by ItemIndex.
class SlotMap {
 public:
  SlotMap() = default;
  explicit SlotMap(std::size_t n_items) : slots_(n_items) {}

  const std::vector<LocationIndex>& slots(ItemIndex item) const { return slots_.at(item); }
  void add(ItemIndex item, LocationIndex loc) { slots_.at(item).push_back(loc); }
  std::size_t item_count() const { return slots_.size(); }
  std::size_t total_slots() const;

  /// CSV `item_code,row,layer,slot`, items in code order.
  void write_csv(std::ostream& out, const Catalog& catalog, const Layout& layout) const;
  static SlotMap read_csv(const std::filesystem::path& path, const Catalog& catalog, const Layout& layout);

 private:
  std::vector<std::vector<LocationIndex>> slots_;
};

/// Products sorted by demand (descending, ties by code) claim slots in
/// ascending travel time from the entrance (ties by seq_no). `counts` is
/// aligned with `products`. Throws std::invalid_argument when the pool is
/// too small or a product is not in the catalog.
SlotMap assign_physical_slots(std::span<const ProductDemand> products, std::span<const std::size_t> counts,
                              const Layout& layout, const Catalog& catalog, const Equipment& equipment);

enum class AbcGrade { A, B, C };

struct AbcClass {
  std::map<std::string, AbcGrade> grade;
  double a_share = 0.80;
  double b_share = 0.95;
};

/// Ranks items by demand and grades each by the cumulative demand share of
/// the items ranked above it: below a_share -> A, below b_share -> B, else C.
/// Zero-demand items are always C.
AbcClass abc_classify(const std::map<std::string, double>& demand, double a_share = 0.80, double b_share = 0.95);

char to_char(AbcGrade g);

}  // namespace picksim
