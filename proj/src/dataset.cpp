#include "picksim/dataset.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "picksim/csv.hpp"
#include "picksim/format.hpp"

namespace picksim {
namespace {

template <class F>
auto at_row(const CsvTable& t, std::size_t r, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(t.where(r) + ": " + e.what());
  }
}

ItemIndex item_at(const CsvTable& t, std::size_t r, const Catalog& catalog) {
  const auto& code = t.cell(r, "item_code");
  if (auto i = catalog.find(code)) return *i;
  throw InputError(t.where(r) + ": unknown item code '" + code + "'");
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error(p.string() + ": cannot write");
  return out;
}

}  // namespace

Layout read_layout(const std::filesystem::path& path) {
  const auto t = CsvTable::read(path);
  t.require_columns({"row", "layer", "slot", "x_cm", "y_cm", "z_cm", "zone", "seq_no", "direction", "parent"});
  std::vector<Location> locs;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Location l;
    l.id = LocationId{t.cell(r, "row"), static_cast<int>(t.integer(r, "layer")), static_cast<int>(t.integer(r, "slot"))};
    l.x_cm = t.real(r, "x_cm");
    l.y_cm = t.real(r, "y_cm");
    l.z_cm = t.real(r, "z_cm");
    l.zone = t.cell(r, "zone");
    l.seq_no = static_cast<long>(t.integer(r, "seq_no"));
    l.direction = t.cell(r, "direction");
    l.parent = t.cell(r, "parent");
    locs.push_back(std::move(l));
  }
  try {
    return Layout(std::move(locs));
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Catalog read_items(const std::filesystem::path& path) {
  const auto t = CsvTable::read(path);
  t.require_columns({"item_code", "category", "weight_kg", "home_zone", "qty_per_pallet"});
  std::vector<Item> items;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    items.push_back(Item{t.cell(r, "item_code"), t.cell(r, "category"), t.real(r, "weight_kg"),
                         t.cell(r, "home_zone"), static_cast<long>(t.integer(r, "qty_per_pallet"))});
  }
  try {
    return Catalog(std::move(items));
  } catch (const std::invalid_argument& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<InitialPallet> read_inventory(const std::filesystem::path& path, const Layout& layout,
                                          const Catalog& catalog) {
  const auto t = CsvTable::read(path);
  t.require_columns({"row", "layer", "slot", "item_code", "qty", "mfg_date"});
  std::vector<InitialPallet> out;
  std::set<LocationIndex> used;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const LocationId id{t.cell(r, "row"), static_cast<int>(t.integer(r, "layer")), static_cast<int>(t.integer(r, "slot"))};
    const auto loc = layout.find(id);
    if (!loc) throw InputError(t.where(r) + ": unknown location " + id.str());
    if (layout.at(*loc).is_anchor()) throw InputError(t.where(r) + ": pallet stored at anchor " + id.str());
    if (!used.insert(*loc).second) throw InputError(t.where(r) + ": second pallet in slot " + id.str());
    InitialPallet p;
    p.location = *loc;
    p.item = item_at(t, r, catalog);
    p.qty = static_cast<long>(t.integer(r, "qty"));
    if (p.qty <= 0 || p.qty > catalog.at(p.item).qty_per_pallet) {
      throw InputError(t.where(r) + ": qty must lie within 1..qty_per_pallet");
    }
    p.mfg_date = at_row(t, r, [&] { return Date::parse(t.cell(r, "mfg_date")); });
    out.push_back(p);
  }
  return out;
}

std::vector<Order> read_orders(const std::filesystem::path& path, const Catalog& catalog) {
  const auto t = CsvTable::read(path);
  t.require_columns({"order_datetime", "order_no", "truck_id", "item_code", "qty", "weight_kg"});
  std::vector<Order> orders;
  std::map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto& no = t.cell(r, "order_no");
    const auto when = at_row(t, r, [&] { return DateTime::parse(t.cell(r, "order_datetime")); });
    auto [it, fresh] = index.emplace(no, orders.size());
    if (fresh) orders.push_back(Order{no, when, t.cell(r, "truck_id"), {}});
    auto& order = orders[it->second];
    if (order.truck_id != t.cell(r, "truck_id") || order.order_datetime != when) {
      throw InputError(t.where(r) + ": order " + no + " changes truck_id or order_datetime between lines");
    }
    OrderLine line{item_at(t, r, catalog), static_cast<long>(t.integer(r, "qty")), t.real(r, "weight_kg")};
    if (line.qty < 1) throw InputError(t.where(r) + ": qty must be >= 1");
    order.lines.push_back(line);
  }
  return orders;
}

std::vector<InboundLine> read_inbound(const std::filesystem::path& path, const Catalog& catalog) {
  const auto t = CsvTable::read(path);
  t.require_columns({"putaway_datetime", "order_no", "item_code", "qty", "total_weight_kg", "mfg_date"});
  std::vector<InboundLine> out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    InboundLine l;
    l.putaway = at_row(t, r, [&] { return DateTime::parse(t.cell(r, "putaway_datetime")); });
    l.order_no = t.cell(r, "order_no");
    l.item = item_at(t, r, catalog);
    l.qty = static_cast<long>(t.integer(r, "qty"));
    if (l.qty <= 0 || l.qty > catalog.at(l.item).qty_per_pallet) {
      throw InputError(t.where(r) + ": qty must lie within 1..qty_per_pallet (one pallet per line)");
    }
    l.total_weight_kg = t.real(r, "total_weight_kg");
    l.mfg_date = at_row(t, r, [&] { return Date::parse(t.cell(r, "mfg_date")); });
    out.push_back(l);
  }
  return out;
}

Dataset Dataset::load(const std::filesystem::path& dir) {
  Dataset d;
  d.layout = read_layout(dir / "layout.csv");
  d.catalog = read_items(dir / "items.csv");
  d.initial = read_inventory(dir / "inventory.csv", d.layout, d.catalog);
  d.orders = read_orders(dir / "orders.csv", d.catalog);
  if (std::filesystem::exists(dir / "inbound.csv")) d.inbound = read_inbound(dir / "inbound.csv", d.catalog);
  return d;
}

std::vector<std::string> Dataset::overweight_pallets(double max_pallet_weight_kg) const {
  std::vector<std::string> out;
  for (const auto& p : initial) {
    const double w = p.qty * catalog.at(p.item).weight_kg;
    if (w > max_pallet_weight_kg) {
      out.push_back("pallet of " + catalog.at(p.item).code + " at " + layout.at(p.location).id.str() + " weighs " +
                    format_real(w) + " kg");
    }
  }
  for (const auto& l : inbound) {
    if (l.total_weight_kg > max_pallet_weight_kg) {
      out.push_back("inbound " + l.order_no + " weighs " + format_real(l.total_weight_kg) + " kg");
    }
  }
  return out;
}

void write_layout(std::ostream& out, const Layout& layout) {
  out << "row,layer,slot,x_cm,y_cm,z_cm,zone,seq_no,direction,parent\n";
  for (const auto& l : layout.locations()) {
    out << l.id.row << ',' << l.id.layer << ',' << l.id.slot << ',' << format_real(l.x_cm) << ','
        << format_real(l.y_cm) << ',' << format_real(l.z_cm) << ',' << l.zone << ',' << l.seq_no << ','
        << l.direction << ',' << l.parent << '\n';
  }
}

void write_items(std::ostream& out, const Catalog& catalog) {
  out << "item_code,category,weight_kg,home_zone,qty_per_pallet\n";
  for (const auto& it : catalog.items()) {
    out << it.code << ',' << it.category << ',' << format_real(it.weight_kg) << ',' << it.home_zone << ','
        << it.qty_per_pallet << '\n';
  }
}

void write_inventory(std::ostream& out, const std::vector<InitialPallet>& pallets, const Layout& layout,
                     const Catalog& catalog) {
  out << "row,layer,slot,item_code,qty,mfg_date\n";
  for (const auto& p : pallets) {
    const auto& id = layout.at(p.location).id;
    out << id.row << ',' << id.layer << ',' << id.slot << ',' << catalog.at(p.item).code << ',' << p.qty << ','
        << p.mfg_date.iso() << '\n';
  }
}

void write_orders(std::ostream& out, const std::vector<Order>& orders, const Catalog& catalog) {
  out << "order_datetime,order_no,truck_id,item_code,qty,weight_kg\n";
  for (const auto& o : orders) {
    for (const auto& l : o.lines) {
      out << o.order_datetime.iso() << ',' << o.order_no << ',' << o.truck_id << ',' << catalog.at(l.item).code
          << ',' << l.qty << ',' << format_real(l.weight_kg) << '\n';
    }
  }
}

void write_inbound(std::ostream& out, const std::vector<InboundLine>& inbound, const Catalog& catalog) {
  out << "putaway_datetime,order_no,item_code,qty,total_weight_kg,mfg_date\n";
  for (const auto& l : inbound) {
    out << l.putaway.iso() << ',' << l.order_no << ',' << catalog.at(l.item).code << ',' << l.qty << ','
        << format_real(l.total_weight_kg) << ',' << l.mfg_date.iso() << '\n';
  }
}

void Dataset::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  auto f1 = open_out(dir / "layout.csv");
  write_layout(f1, layout);
  auto f2 = open_out(dir / "items.csv");
  write_items(f2, catalog);
  auto f3 = open_out(dir / "inventory.csv");
  write_inventory(f3, initial, layout, catalog);
  auto f4 = open_out(dir / "orders.csv");
  write_orders(f4, orders, catalog);
  auto f5 = open_out(dir / "inbound.csv");
  write_inbound(f5, inbound, catalog);
}

}  // namespace picksim
