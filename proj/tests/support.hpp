#pragma once

// Small hand-built warehouses for unit tests.

#include <string>
#include <utility>
#include <vector>

#include "picksim/warehouse.hpp"

namespace testing {

inline picksim::Location slot_at(const std::string& row, int layer, int slot, double x, double y, double z,
                                 const std::string& zone, long seq, const std::string& parent = "A1") {
  picksim::Location l;
  l.id = {row, layer, slot};
  l.x_cm = x;
  l.y_cm = y;
  l.z_cm = z;
  l.zone = zone;
  l.seq_no = seq;
  l.direction = "E";
  l.parent = parent;
  return l;
}

inline picksim::Location anchor_at(picksim::Anchor a, double x, double y, long seq) {
  auto l = slot_at(picksim::anchor_row(a), 0, 0, x, y, 0, "", seq, "dock");
  return l;
}

/// Entrance, receiving and special area at the origin; `n` ground slots in
/// one aisle, 100 cm apart, zone Z1 for the first half and Z2 for the rest.
inline picksim::Layout line_layout(int n) {
  std::vector<picksim::Location> locs{anchor_at(picksim::Anchor::entrance, 0, 0, 0),
                                      anchor_at(picksim::Anchor::receiving, 0, 0, 1),
                                      anchor_at(picksim::Anchor::special_area, 0, 0, 2)};
  for (int i = 0; i < n; ++i) {
    locs.push_back(slot_at("R1", 1, i + 1, 100.0 * (i + 1), 0, 0, i < (n + 1) / 2 ? "Z1" : "Z2", 10 + i, "dock"));
  }
  return picksim::Layout(std::move(locs));
}

inline picksim::Catalog catalog_of(std::vector<std::pair<std::string, long>> items, const std::string& zone = "Z1") {
  std::vector<picksim::Item> out;
  for (auto& [code, qpp] : items) out.push_back({code, "c", 1.0, zone, qpp});
  return picksim::Catalog(std::move(out));
}

}  // namespace testing
