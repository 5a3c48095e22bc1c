#include <doctest.h>

#include <random>

#include "picksim/csv.hpp"
#include "picksim/storage_policy.hpp"
#include "support.hpp"

using namespace picksim;
using testing::slot_at;

namespace {

PutAwaySettings plain(double base = 0.0, double per_pallet = 0.0) {
  Equipment e;
  e.speed_cm_s = 100.0;
  e.lift_speed_cm_s = 20.0;
  return {e, base, per_pallet};
}

const Date d0 = Date::parse("2020-06-01");

}  // namespace

TEST_CASE("policy names") {
  CHECK(parse_policy("fixed-zone") == PolicyKind::fixed_zone);
  CHECK(std::string(to_string(PolicyKind::random)) == "random");
  CHECK_THROWS(parse_policy("lifo"));
}

TEST_CASE("fixed zone with a single vacant slot in the zone") {
  const auto layout = testing::line_layout(4);  // Z1: slots 0,1  Z2: slots 2,3
  const auto catalog = testing::catalog_of({{"A", 10}, {"B", 10}}, "Z2");
  const StoragePlanner p(layout, catalog, PolicyKind::fixed_zone, nullptr, plain());
  Inventory inv(layout, catalog);
  WaitingList w;
  const auto& s = layout.storage_slots();
  inv.place({s[2], 1, 10, d0});
  const auto r = p.put_away({0, 10, d0}, inv, w, 0.0);
  REQUIRE(std::holds_alternative<Assignment>(r));
  CHECK(std::get<Assignment>(r).location == s[3]);
  CHECK(std::get<Assignment>(r).duration == doctest::Approx(4.0));
}

TEST_CASE("fixed policy with all dedicated slots taken waits") {
  const auto layout = testing::line_layout(4);
  const auto catalog = testing::catalog_of({{"A", 10}, {"B", 10}});
  const auto& s = layout.storage_slots();
  SlotMap map(2);
  map.add(0, s[0]);
  map.add(0, s[1]);
  map.add(1, s[2]);
  map.add(1, s[3]);
  const StoragePlanner p(layout, catalog, PolicyKind::fixed, &map, plain());
  Inventory inv(layout, catalog);
  WaitingList w;
  inv.place({s[0], 0, 10, d0});
  inv.place({s[1], 0, 10, d0});
  const auto r = p.put_away({0, 10, d0}, inv, w, 42.0);
  CHECK(std::holds_alternative<Waiting>(r));
  REQUIRE(w.size() == 1);
  CHECK(w.front().enqueued_at == 42.0);
  CHECK_FALSE(inv.occupied(s[2]));
}

TEST_CASE("fixed policy needs a slot map") {
  const auto layout = testing::line_layout(2);
  const auto catalog = testing::catalog_of({{"A", 10}});
  CHECK_THROWS(StoragePlanner(layout, catalog, PolicyKind::fixed, nullptr, plain()));
}

TEST_CASE("random takes the nearest vacant slot") {
  Layout layout({testing::anchor_at(Anchor::entrance, 0, 0, 0), slot_at("R", 1, 1, 1400, 0, 0, "Z", 5),
                 slot_at("R", 1, 2, 1000, 0, 0, "Z", 6)});
  const auto catalog = testing::catalog_of({{"A", 10}});
  const StoragePlanner p(layout, catalog, PolicyKind::random, nullptr, plain(20, 30));
  Inventory inv(layout, catalog);
  WaitingList w;
  const auto a = std::get<Assignment>(p.put_away({0, 10, d0}, inv, w, 0));
  CHECK(layout.at(a.location).id.slot == 2);
  CHECK(a.duration == doctest::Approx(10.0 + 20 + 30));
  const auto b = std::get<Assignment>(p.put_away({0, 10, d0}, inv, w, 0));
  CHECK(layout.at(b.location).id.slot == 1);
}

TEST_CASE("equal distance ties go to the smaller seq_no") {
  Layout layout({testing::anchor_at(Anchor::entrance, 500, 0, 0), slot_at("R", 1, 1, 1000, 0, 0, "Z", 9),
                 slot_at("R", 1, 2, 0, 0, 0, "Z", 4)});
  const auto catalog = testing::catalog_of({{"A", 10}});
  const StoragePlanner p(layout, catalog, PolicyKind::random, nullptr, plain());
  CHECK(layout.at(p.candidates(0).front()).seq_no == 4);
}

TEST_CASE("unknown items") {
  const auto catalog = testing::catalog_of({{"A", 10}});
  CHECK_THROWS_AS(make_inbound(catalog, "ZZ", 1, d0), InputError);
  CHECK(make_inbound(catalog, "A", 3, d0).qty == 3);
}

TEST_CASE("draining the waiting list") {
  const auto layout = testing::line_layout(4);
  const auto catalog = testing::catalog_of({{"A", 10}, {"B", 10}});
  const auto& s = layout.storage_slots();
  SlotMap map(2);
  map.add(0, s[0]);
  map.add(1, s[1]);
  const StoragePlanner p(layout, catalog, PolicyKind::fixed, &map, plain());
  Inventory inv(layout, catalog);
  WaitingList w;

  SUBCASE("empty list") { CHECK(p.drain_waiting_list(w, inv).empty()); }
  SUBCASE("one entry that now fits") {
    w.push({0, 10, d0}, 0);
    const auto placed = p.drain_waiting_list(w, inv);
    REQUIRE(placed.size() == 1);
    CHECK(placed[0].location == s[0]);
    CHECK(w.empty());
  }
  SUBCASE("head of line blocks") {
    inv.place({s[0], 0, 10, d0});
    w.push({0, 10, d0}, 0);  // A: its only slot is full
    w.push({1, 10, d0}, 1);  // B: its slot is free
    CHECK(p.drain_waiting_list(w, inv).empty());
    CHECK(w.size() == 2);
  }
  SUBCASE("take_first_of skips other items") {
    w.push({1, 4, d0}, 0);
    w.push({0, 5, d0}, 1);
    w.push({0, 6, d0}, 2);
    CHECK(w.contains(0));
    const auto e = w.take_first_of(0);
    REQUIRE(e);
    CHECK(e->pallet.qty == 5);
    CHECK(w.size() == 2);
    CHECK_FALSE(w.take_first_of(7));
  }
}

TEST_CASE("slots out of reach without a lift are excluded") {
  Layout layout({testing::anchor_at(Anchor::entrance, 0, 0, 0), slot_at("R", 1, 1, 100, 0, 0, "Z", 5),
                 slot_at("R", 2, 1, 100, 0, 150, "Z", 6)});
  const auto catalog = testing::catalog_of({{"A", 10}});
  auto settings = plain();
  settings.equipment.lift_speed_cm_s.reset();
  const StoragePlanner p(layout, catalog, PolicyKind::random, nullptr, settings);
  CHECK(p.candidates(0).size() == 1);
}

// Random layouts, random stock, random inbound: every placement is inside the
// policy's candidate set and as near as any vacant candidate.
TEST_CASE("containment and nearest choice over random put-aways") {
  std::mt19937_64 rng(11);
  for (auto policy : {PolicyKind::fixed, PolicyKind::random, PolicyKind::fixed_zone}) {
    std::vector<Location> locs{testing::anchor_at(Anchor::entrance, 0, 0, 0),
                               testing::anchor_at(Anchor::receiving, 50, 50, 1)};
    std::uniform_int_distribution<int> coord(0, 3000);
    for (int i = 0; i < 40; ++i) {
      locs.push_back(slot_at("R" + std::to_string(i / 10), 1 + i % 2, i, coord(rng), coord(rng), (i % 2) * 150.0,
                             "Z" + std::to_string(i % 3), 10 + i, "A" + std::to_string(i / 10)));
    }
    const Layout layout(locs);
    std::vector<Item> items;
    for (int i = 0; i < 6; ++i) items.push_back({"I" + std::to_string(i), "c", 1.0, "Z" + std::to_string(i % 3), 10});
    const Catalog catalog(items);
    SlotMap map(catalog.size());
    const auto& pool = layout.storage_slots();
    for (std::size_t k = 0; k < pool.size(); ++k) map.add(k % catalog.size(), pool[k]);
    const StoragePlanner p(layout, catalog, policy, &map, plain(5, 7));

    Inventory inv(layout, catalog);
    WaitingList w;
    int placed = 0;
    for (int n = 0; n < 1000; ++n) {
      const ItemIndex item = rng() % catalog.size();
      // Empty a random occupied slot now and then.
      if (rng() % 2 == 0) {
        const auto loc = pool[rng() % pool.size()];
        if (inv.occupied(loc)) inv.take(inv.at(loc)->item, inv.total_on_hand(inv.at(loc)->item));
      }
      std::optional<LocationIndex> best;
      for (auto loc : pool) {
        if (inv.occupied(loc) || !p.qualifies(item, loc)) continue;
        if (!best || p.put_away_duration(loc) < p.put_away_duration(*best) ||
            (p.put_away_duration(loc) == p.put_away_duration(*best) &&
             layout.at(loc).seq_no < layout.at(*best).seq_no)) {
          best = loc;
        }
      }
      const auto r = p.put_away({item, 10, d0}, inv, w, 0);
      if (!best) {
        CHECK(std::holds_alternative<Waiting>(r));
        continue;
      }
      REQUIRE(std::holds_alternative<Assignment>(r));
      const auto loc = std::get<Assignment>(r).location;
      CHECK(loc == *best);
      if (policy == PolicyKind::fixed_zone) CHECK(layout.at(loc).zone == catalog.at(item).home_zone);
      if (policy == PolicyKind::fixed) {
        const auto& own = map.slots(item);
        CHECK(std::find(own.begin(), own.end(), loc) != own.end());
      }
      ++placed;
    }
    CHECK(placed > 100);
  }
}
