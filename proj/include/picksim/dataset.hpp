#pragma once

// Input data files. A data directory holds:
//   layout.csv     row,layer,slot,x_cm,y_cm,z_cm,zone,seq_no,direction,parent
//   items.csv      item_code,category,weight_kg,home_zone,qty_per_pallet
//   inventory.csv  row,layer,slot,item_code,qty,mfg_date
//   orders.csv     order_datetime,order_no,truck_id,item_code,qty,weight_kg
//   inbound.csv    putaway_datetime,order_no,item_code,qty,total_weight_kg,mfg_date  (optional)

#include <filesystem>
#include <string>
#include <vector>

#include "picksim/calendar.hpp"
#include "picksim/picking.hpp"
#include "picksim/warehouse.hpp"

namespace picksim {

struct InitialPallet {
  LocationIndex location = 0;
  ItemIndex item = 0;
  long qty = 0;
  Date mfg_date;
};

struct InboundLine {
  DateTime putaway;
  std::string order_no;
  ItemIndex item = 0;
  long qty = 0;
  double total_weight_kg = 0.0;
  Date mfg_date;
};

struct Dataset {
  Layout layout{{}};
  Catalog catalog{{}};
  std::vector<InitialPallet> initial;
  std::vector<Order> orders;
  std::vector<InboundLine> inbound;

  /// Throws InputError (with file:line) on malformed or inconsistent data.
  static Dataset load(const std::filesystem::path& dir);
  void save(const std::filesystem::path& dir) const;

  /// Pallets heavier than `max_pallet_weight_kg` as `what` messages.
  std::vector<std::string> overweight_pallets(double max_pallet_weight_kg) const;
};

Layout read_layout(const std::filesystem::path& path);
Catalog read_items(const std::filesystem::path& path);
std::vector<InitialPallet> read_inventory(const std::filesystem::path& path, const Layout& layout,
                                          const Catalog& catalog);
std::vector<Order> read_orders(const std::filesystem::path& path, const Catalog& catalog);
std::vector<InboundLine> read_inbound(const std::filesystem::path& path, const Catalog& catalog);

void write_layout(std::ostream& out, const Layout& layout);
void write_items(std::ostream& out, const Catalog& catalog);
void write_inventory(std::ostream& out, const std::vector<InitialPallet>& pallets, const Layout& layout,
                     const Catalog& catalog);
void write_orders(std::ostream& out, const std::vector<Order>& orders, const Catalog& catalog);
void write_inbound(std::ostream& out, const std::vector<InboundLine>& inbound, const Catalog& catalog);

}  // namespace picksim
