#include "picksim/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>

#include "picksim/csv.hpp"

namespace picksim {
namespace {

std::string numbered(const char* prefix, std::size_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, n);
  return buf;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Dataset generate_data(std::uint64_t seed, const GeneratorScale& scale, const GeneratorOptions& opt) {
  if (scale.items == 0) throw InputError("generator: items must be >= 1");
  if (scale.slots < scale.items) throw InputError("generator: slots must be >= items");
  if (scale.weeks < 1) throw InputError("generator: weeks must be >= 1");
  if (scale.lines < static_cast<std::size_t>(scale.weeks)) throw InputError("generator: need >= 1 order line per week");
  if (opt.layers < 0) throw InputError("generator: layers must be >= 0");
  if (opt.max_line_qty < 1 || opt.max_lines_per_order < 1 || opt.trucks_per_day < 1) {
    throw InputError("generator: order shape parameters must be >= 1");
  }

  std::mt19937_64 rng(seed);
  Dataset d;

  // Layout: rows of racks, serpentine pick sequence, zones in contiguous blocks.
  const int layers = opt.layers > 0 ? opt.layers : scale.slots >= 60 ? 3 : 1;
  const int per_layer = scale.slots >= 60 ? 20 : 5;
  const std::size_t per_row = static_cast<std::size_t>(layers * per_layer);
  const std::size_t rows = (scale.slots + per_row - 1) / per_row;
  std::size_t zones = std::min<std::size_t>({4, rows, scale.items});
  auto zone_size = [&](std::size_t z) { return (z + 1) * scale.slots / zones - z * scale.slots / zones; };
  auto items_in_zone = [&](std::size_t z) {
    return (z + 1) * scale.items / zones - z * scale.items / zones;
  };
  while (zones > 1) {
    bool ok = true;
    for (std::size_t z = 0; z < zones; ++z) ok = ok && items_in_zone(z) <= zone_size(z);
    if (ok) break;
    --zones;
  }

  std::vector<Location> locs;
  locs.push_back({{anchor_row(Anchor::entrance), 0, 0}, 0, 0, 0, "", 0, "", "dock"});
  locs.push_back({{anchor_row(Anchor::special_area), 0, 0}, 200, 0, 0, "", 1, "", "dock"});
  locs.push_back({{anchor_row(Anchor::receiving), 0, 0}, 0, 200, 0, "", 2, "", "dock"});
  std::size_t made = 0;
  for (std::size_t r = 0; r < rows && made < scale.slots; ++r) {
    const bool forward = r % 2 == 0;
    for (int k = 0; k < per_layer && made < scale.slots; ++k) {
      const int slot = forward ? k + 1 : per_layer - k;
      for (int layer = 1; layer <= layers && made < scale.slots; ++layer) {
        Location l;
        l.id = {numbered("R", r + 1, 2), layer, slot};
        l.x_cm = 300.0 + 120.0 * (slot - 1);
        l.y_cm = 300.0 * static_cast<double>(r);
        l.z_cm = 150.0 * (layer - 1);
        l.zone = numbered("Z", made * zones / scale.slots + 1, 1);
        l.seq_no = static_cast<long>(made + 10);
        l.direction = forward ? "E" : "W";
        l.parent = l.id.row;
        locs.push_back(std::move(l));
        ++made;
      }
    }
  }
  d.layout = Layout(std::move(locs));

  // Catalog; demand ranks are a random permutation of the items.
  std::vector<Item> items;
  for (std::size_t i = 0; i < scale.items; ++i) {
    Item it;
    it.code = numbered("P", i + 1, 4);
    it.weight_kg = std::round(std::uniform_real_distribution<double>(0.5, 5.0)(rng) * 100.0) / 100.0;
    it.qty_per_pallet = static_cast<long>(uniform(rng, 20, 120));
    it.home_zone = numbered("Z", i * zones / scale.items + 1, 1);
    items.push_back(std::move(it));
  }
  std::vector<std::size_t> rank(scale.items);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<double> weight(scale.items);
  for (std::size_t i = 0; i < scale.items; ++i) {
    weight[i] = 1.0 / std::pow(static_cast<double>(rank[i] + 1), opt.demand_skew);
    items[i].category = rank[i] < scale.items / 5 ? "fast" : rank[i] < scale.items / 2 ? "medium" : "slow";
  }
  d.catalog = Catalog(items);  // codes are generated in sorted order, so indices match
  std::discrete_distribution<std::size_t> pick_item(weight.begin(), weight.end());

  // Orders: five working days per week, lines spread evenly over weeks.
  std::vector<std::vector<long>> weekly_demand(scale.weeks, std::vector<long>(scale.items, 0));
  std::size_t order_seq = 0;
  for (long w = 0; w < scale.weeks; ++w) {
    const std::size_t week_lines = (static_cast<std::size_t>(w) + 1) * scale.lines / scale.weeks -
                                   static_cast<std::size_t>(w) * scale.lines / scale.weeks;
    for (int day = 0; day < 5; ++day) {
      std::size_t day_lines = (day + 1) * week_lines / 5 - day * week_lines / 5;
      const Date date = opt.start.plus_days(static_cast<std::int32_t>(7 * w + day));
      int minute = 6 * 60;
      while (day_lines > 0) {
        const std::size_t cap = std::min<std::size_t>({static_cast<std::size_t>(opt.max_lines_per_order),
                                                       scale.items, day_lines});
        const std::size_t n = uniform(rng, 1, cap);
        Order o;
        o.order_no = numbered("SO", ++order_seq, 6);
        o.order_datetime = DateTime{date, std::min(minute, 23 * 60 + 59) * 60};
        o.truck_id = numbered("T", uniform(rng, 1, static_cast<std::size_t>(opt.trucks_per_day)), 2);
        minute += 1;
        std::vector<ItemIndex> used;
        while (o.lines.size() < n) {
          const ItemIndex item = pick_item(rng);
          if (std::find(used.begin(), used.end(), item) != used.end()) continue;
          used.push_back(item);
          const long qty = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(opt.max_line_qty)));
          o.lines.push_back({item, qty, std::round(qty * items[item].weight_kg * 100.0) / 100.0});
          weekly_demand[w][item] += qty;
        }
        day_lines -= n;
        d.orders.push_back(std::move(o));
      }
    }
  }

  // Starting stock: at least one pallet per item, the rest by demand share,
  // laid out in the item's home zone.
  const double total_weight = std::accumulate(weight.begin(), weight.end(), 0.0);
  const std::size_t target = std::max<std::size_t>(
      scale.items, static_cast<std::size_t>(opt.stock_fill * static_cast<double>(scale.slots)));
  std::vector<std::size_t> pallets(scale.items, 1);
  std::size_t assigned = scale.items;
  for (std::size_t i = 0; i < scale.items && assigned < target; ++i) {
    const auto extra = static_cast<std::size_t>(std::floor(weight[i] / total_weight * (target - scale.items)));
    pallets[i] += extra;
    assigned += extra;
  }
  std::map<std::string, std::vector<LocationIndex>> free_in_zone;
  for (auto loc : d.layout.storage_slots()) free_in_zone[d.layout.at(loc).zone].push_back(loc);
  std::map<std::string, std::size_t> next_in_zone;
  for (std::size_t i = 0; i < scale.items; ++i) {
    const auto& zone = items[i].home_zone;
    auto& pool = free_in_zone[zone];
    for (std::size_t k = 0; k < pallets[i]; ++k) {
      auto& next = next_in_zone[zone];
      if (next >= pool.size()) break;
      const Date mfg = opt.start.plus_days(-static_cast<std::int32_t>(uniform(rng, 1, 60)));
      d.initial.push_back({pool[next++], i, items[i].qty_per_pallet, mfg});
    }
  }

  // Weekly receipts: full pallets topping the starting stock up to the
  // week's demand, Monday morning.
  std::vector<long> stocked(scale.items, 0);
  for (const auto& p : d.initial) stocked[p.item] += p.qty;
  for (long w = 0; w < scale.weeks; ++w) {
    const Date monday = opt.start.plus_days(static_cast<std::int32_t>(7 * w));
    for (std::size_t i = 0; i < scale.items; ++i) {
      const long need = std::max(0L, weekly_demand[w][i] - stocked[i]);
      const long n = (need + items[i].qty_per_pallet - 1) / items[i].qty_per_pallet;
      for (long k = 0; k < n; ++k) {
        InboundLine l;
        l.putaway = DateTime{monday, 5 * 3600};
        l.order_no = numbered("PO", d.inbound.size() + 1, 6);
        l.item = i;
        l.qty = items[i].qty_per_pallet;
        l.total_weight_kg = std::round(l.qty * items[i].weight_kg * 100.0) / 100.0;
        l.mfg_date = monday.plus_days(-static_cast<std::int32_t>(uniform(rng, 0, 6)));
        d.inbound.push_back(l);
      }
      if (stocked[i] + n * items[i].qty_per_pallet < weekly_demand[w][i]) {
        throw std::logic_error("generator: weekly supply below demand");
      }
    }
  }
  return d;
}

}  // namespace picksim
