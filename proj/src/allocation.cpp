#include "picksim/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "picksim/csv.hpp"

namespace picksim {

std::vector<std::size_t> allocate_slots(std::span<const ProductDemand> products, std::size_t n_slots,
                                        AllocationRule rule) {
  if (n_slots < products.size()) {
    throw std::invalid_argument("infeasible allocation: " + std::to_string(n_slots) + " slots for " +
                                std::to_string(products.size()) + " products");
  }
  for (const auto& p : products) {
    if (!(p.avg_picks >= 0)) throw std::invalid_argument("negative demand for " + p.item);
  }
  std::vector<std::size_t> counts(products.size(), 1);
  if (products.empty()) return counts;

  auto weight = [&](std::size_t i) { return rule == AllocationRule::homogeneous ? 1.0 : products[i].avg_picks; };

  // Compare d_i/c_i > d_j/c_j as d_i*c_j > d_j*c_i to keep ties exact.
  for (std::size_t granted = products.size(); granted < n_slots; ++granted) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < products.size(); ++i) {
      const double lhs = weight(i) * static_cast<double>(counts[best]);
      const double rhs = weight(best) * static_cast<double>(counts[i]);
      if (lhs > rhs || (lhs == rhs && products[i].item < products[best].item)) best = i;
    }
    ++counts[best];
  }
  return counts;
}

std::size_t SlotMap::total_slots() const {
  std::size_t n = 0;
  for (const auto& s : slots_) n += s.size();
  return n;
}

void SlotMap::write_csv(std::ostream& out, const Catalog& catalog, const Layout& layout) const {
  out << "item_code,row,layer,slot\n";
  for (ItemIndex i = 0; i < slots_.size(); ++i) {
    for (auto loc : slots_[i]) {
      const auto& id = layout.at(loc).id;
      out << catalog.at(i).code << ',' << id.row << ',' << id.layer << ',' << id.slot << '\n';
    }
  }
}

SlotMap SlotMap::read_csv(const std::filesystem::path& path, const Catalog& catalog, const Layout& layout) {
  const auto t = CsvTable::read(path);
  t.require_columns({"item_code", "row", "layer", "slot"});
  SlotMap map(catalog.size());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto item = catalog.find(t.cell(r, "item_code"));
    if (!item) throw InputError(t.where(r) + ": unknown item code '" + t.cell(r, "item_code") + "'");
    const LocationId id{t.cell(r, "row"), static_cast<int>(t.integer(r, "layer")),
                        static_cast<int>(t.integer(r, "slot"))};
    const auto loc = layout.find(id);
    if (!loc) throw InputError(t.where(r) + ": unknown location " + id.str());
    map.add(*item, *loc);
  }
  return map;
}

SlotMap assign_physical_slots(std::span<const ProductDemand> products, std::span<const std::size_t> counts,
                              const Layout& layout, const Catalog& catalog, const Equipment& equipment) {
  if (counts.size() != products.size()) throw std::invalid_argument("counts and products differ in length");
  const std::size_t wanted = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  const auto& pool = layout.storage_slots();
  if (wanted > pool.size()) {
    throw std::invalid_argument("slot pool exhausted: " + std::to_string(wanted) + " requested, " +
                                std::to_string(pool.size()) + " available");
  }

  const auto& entrance = layout.at(layout.anchor(Anchor::entrance));
  std::vector<std::pair<Seconds, LocationIndex>> ranked;
  ranked.reserve(pool.size());
  for (auto loc : pool) {
    const auto& l = layout.at(loc);
    ranked.emplace_back(travel_time(entrance, l, equipment, turns_between(entrance, l)), loc);
  }
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return layout.at(a.second).seq_no < layout.at(b.second).seq_no;
  });

  std::vector<std::size_t> order(products.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (products[a].avg_picks != products[b].avg_picks) return products[a].avg_picks > products[b].avg_picks;
    return products[a].item < products[b].item;
  });

  SlotMap map(catalog.size());
  std::size_t next = 0;
  for (auto p : order) {
    const auto item = catalog.find(products[p].item);
    if (!item) throw std::invalid_argument("unknown item code " + products[p].item);
    for (std::size_t k = 0; k < counts[p]; ++k) map.add(*item, ranked[next++].second);
  }
  return map;
}

AbcClass abc_classify(const std::map<std::string, double>& demand, double a_share, double b_share) {
  if (demand.empty()) throw std::invalid_argument("ABC analysis of an empty catalog");
  AbcClass out;
  out.a_share = a_share;
  out.b_share = b_share;

  std::vector<std::pair<std::string, double>> ranked(demand.begin(), demand.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  double total = 0.0;
  for (const auto& [code, d] : ranked) {
    if (d < 0) throw std::invalid_argument("negative demand for " + code);
    total += d;
  }

  double before = 0.0;
  for (const auto& [code, d] : ranked) {
    AbcGrade g = AbcGrade::C;
    if (d > 0 && total > 0) {
      const double share = before / total;
      g = share < a_share ? AbcGrade::A : share < b_share ? AbcGrade::B : AbcGrade::C;
    }
    out.grade[code] = g;
    before += d;
  }
  return out;
}

char to_char(AbcGrade g) {
  switch (g) {
    case AbcGrade::A: return 'A';
    case AbcGrade::B: return 'B';
    case AbcGrade::C: return 'C';
  }
  return '?';
}

}  // namespace picksim
