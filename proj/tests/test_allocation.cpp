#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "picksim/allocation.hpp"
#include "support.hpp"

using namespace picksim;
using testing::slot_at;

namespace {

// Reference: hand out slots one at a time to the largest demand/held ratio,
// computed by plain division.
std::vector<std::size_t> greedy_oracle(const std::vector<ProductDemand>& p, std::size_t n, bool even) {
  std::vector<std::size_t> c(p.size(), 1);
  for (std::size_t left = n - p.size(); left > 0; --left) {
    std::size_t best = 0;
    double best_r = -1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double r = (even ? 1.0 : p[i].avg_picks) / static_cast<double>(c[i]);
      if (r > best_r || (r == best_r && p[i].item < p[best].item)) {
        best = i;
        best_r = r;
      }
    }
    ++c[best];
  }
  return c;
}

std::vector<ProductDemand> products(std::initializer_list<double> demand) {
  std::vector<ProductDemand> out;
  char code = 'A';
  for (double d : demand) out.push_back({std::string(1, code++), d});
  return out;
}

}  // namespace

TEST_CASE("homogeneous allocation examples") {
  CHECK(allocate_slots(products({1, 1, 1, 1, 1}), 10, AllocationRule::homogeneous) ==
        std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK(allocate_slots(products({7, 1, 3}), 10, AllocationRule::homogeneous) ==
        std::vector<std::size_t>{4, 3, 3});
}

TEST_CASE("demand-based allocation example") {
  const auto p = products({50, 30, 20});
  CHECK(greedy_oracle(p, 10, false) == std::vector<std::size_t>{5, 3, 2});
  CHECK(allocate_slots(p, 10, AllocationRule::demand_based) == std::vector<std::size_t>{5, 3, 2});
}

TEST_CASE("too few slots") {
  CHECK_THROWS_AS(allocate_slots(products({1, 2, 3}), 2, AllocationRule::homogeneous), std::invalid_argument);
}

TEST_CASE("allocation properties on random inputs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<ProductDemand> p;
    for (std::size_t i = 0; i < n; ++i) {
      char code[16];
      std::snprintf(code, sizeof code, "P%05zu", static_cast<std::size_t>(rng() % 100000));
      p.push_back({code + std::to_string(i), static_cast<double>(rng() % 60)});
    }
    std::shuffle(p.begin(), p.end(), rng);
    const std::size_t slots = n + rng() % (4 * n + 1);

    const auto even = allocate_slots(p, slots, AllocationRule::homogeneous);
    CHECK(std::accumulate(even.begin(), even.end(), std::size_t{0}) == slots);
    const auto [lo, hi] = std::minmax_element(even.begin(), even.end());
    CHECK(*hi - *lo <= 1);
    CHECK(even == greedy_oracle(p, slots, true));

    const auto by_demand = allocate_slots(p, slots, AllocationRule::demand_based);
    CHECK(std::accumulate(by_demand.begin(), by_demand.end(), std::size_t{0}) == slots);
    CHECK(by_demand == greedy_oracle(p, slots, false));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(by_demand[i] >= 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (p[i].avg_picks > p[j].avg_picks) CHECK(by_demand[i] >= by_demand[j]);
        if (p[i].avg_picks == p[j].avg_picks) CHECK(by_demand[i] + 1 >= by_demand[j]);
      }
    }
  }
}

TEST_CASE("physical slots go nearest-first to the busiest products") {
  Layout layout({testing::anchor_at(Anchor::entrance, 0, 0, 0), slot_at("R", 1, 1, 900, 0, 0, "Z", 5),
                 slot_at("R", 1, 2, 500, 0, 0, "Z", 6)});
  const auto catalog = testing::catalog_of({{"A", 1}, {"B", 1}});
  Equipment eq;
  eq.speed_cm_s = 100;
  SUBCASE("one product, one slot") {
    const auto one = testing::catalog_of({{"A", 1}});
    const std::vector<ProductDemand> p{{"A", 3}};
    const std::vector<std::size_t> c{1};
    const auto map = assign_physical_slots(p, c, layout, one, eq);
    CHECK(layout.at(map.slots(0).front()).id.slot == 2);
  }
  SUBCASE("demand 90 beats demand 10") {
    const std::vector<ProductDemand> p{{"A", 10}, {"B", 90}};
    const std::vector<std::size_t> c{1, 1};
    const auto map = assign_physical_slots(p, c, layout, catalog, eq);
    CHECK(layout.at(map.slots(1).front()).id.slot == 2);
    CHECK(layout.at(map.slots(0).front()).id.slot == 1);
  }
  SUBCASE("equal demand, code order") {
    const std::vector<ProductDemand> p{{"B", 5}, {"A", 5}};
    const std::vector<std::size_t> c{1, 1};
    const auto map = assign_physical_slots(p, c, layout, catalog, eq);
    CHECK(layout.at(map.slots(0).front()).id.slot == 2);
  }
  SUBCASE("pool exhausted") {
    const std::vector<ProductDemand> p{{"A", 5}, {"B", 5}};
    const std::vector<std::size_t> c{2, 1};
    CHECK_THROWS_AS(assign_physical_slots(p, c, layout, catalog, eq), std::invalid_argument);
  }
}

TEST_CASE("greedy claim order is exchange-optimal") {
  std::mt19937_64 rng(9);
  Equipment eq;
  eq.speed_cm_s = 100;
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<Location> locs{testing::anchor_at(Anchor::entrance, 0, 0, 0)};
    for (int i = 0; i < 14; ++i) {
      locs.push_back(slot_at("R", 1, i + 1, static_cast<double>(rng() % 2000), static_cast<double>(rng() % 2000), 0,
                             "Z", 10 + i, "A1"));
    }
    const Layout layout(locs);
    std::vector<Item> items;
    std::vector<ProductDemand> p;
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string code(1, static_cast<char>('A' + i));
      items.push_back({code, "c", 1.0, "Z", 1});
      p.push_back({code, static_cast<double>(rng() % 50)});
      c.push_back(1 + rng() % 2);
    }
    const Catalog catalog(items);
    const auto map = assign_physical_slots(p, c, layout, catalog, eq);
    const auto& entrance = layout.at(layout.anchor(Anchor::entrance));
    auto nearest = [&](const std::vector<LocationIndex>& set) {
      double best = 1e300;
      for (auto loc : set) best = std::min(best, travel_time(entrance, layout.at(loc), eq, 0));
      return best;
    };
    auto cost = [&](const std::vector<std::vector<LocationIndex>>& sets) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) total += p[i].avg_picks * nearest(sets[i]);
      return total;
    };
    std::vector<std::vector<LocationIndex>> sets;
    for (std::size_t i = 0; i < n; ++i) sets.push_back(map.slots(catalog.index_of(p[i].item)));
    const double base = cost(sets);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto swapped = sets;
        std::swap(swapped[i], swapped[j]);
        CHECK(cost(swapped) >= base - 1e-9);
      }
    }
  }
}

TEST_CASE("slot map CSV round trip") {
  const auto layout = testing::line_layout(4);
  const auto catalog = testing::catalog_of({{"A", 1}, {"B", 1}});
  SlotMap map(2);
  const auto& s = layout.storage_slots();
  map.add(0, s[2]);
  map.add(1, s[0]);
  map.add(1, s[3]);
  std::ostringstream out;
  map.write_csv(out, catalog, layout);
  CHECK(out.str() == "item_code,row,layer,slot\nA,R1,1,3\nB,R1,1,1\nB,R1,1,4\n");
  const auto path = std::filesystem::temp_directory_path() / "picksim_slotmap_test.csv";
  std::ofstream(path) << out.str();
  const auto back = SlotMap::read_csv(path, catalog, layout);
  CHECK(back.slots(1) == map.slots(1));
  CHECK(back.total_slots() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("ABC classes") {
  SUBCASE("single item") {
    const auto c = abc_classify({{"A", 4}});
    CHECK(c.grade.at("A") == AbcGrade::A);
  }
  SUBCASE("80/15/5") {
    const auto c = abc_classify({{"X", 80}, {"Y", 15}, {"Z", 5}});
    CHECK(c.grade.at("X") == AbcGrade::A);
    CHECK(c.grade.at("Y") == AbcGrade::B);
    CHECK(c.grade.at("Z") == AbcGrade::C);
  }
  SUBCASE("equal demand") {
    const auto c = abc_classify({{"A", 10}, {"B", 10}, {"C", 10}, {"D", 10}, {"E", 10}});
    std::string grades;
    for (const auto& [code, g] : c.grade) grades += to_char(g);
    CHECK(grades == "AAAAB");
  }
  SUBCASE("zero demand is C") {
    const auto c = abc_classify({{"A", 10}, {"B", 0}});
    CHECK(c.grade.at("B") == AbcGrade::C);
  }
  SUBCASE("empty catalog") { CHECK_THROWS(abc_classify({})); }
}
