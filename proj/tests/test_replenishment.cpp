#include <doctest.h>

#include "picksim/replenishment.hpp"
#include "support.hpp"

using namespace picksim;

namespace {

const Date d0 = Date::parse("2020-06-01");

struct Bench {
  Layout layout = testing::line_layout(6);
  Catalog catalog = testing::catalog_of({{"A", 50}, {"B", 40}, {"C", 30}});
  Inventory inv{layout, catalog};
  SlotMap map{3};
  std::optional<StoragePlanner> planner;
  WaitingList waiting;
  ProcessMetrics metrics;

  explicit Bench(PolicyKind policy = PolicyKind::random) {
    const auto& s = layout.storage_slots();
    for (std::size_t k = 0; k < s.size(); ++k) map.add(k % 3, s[k]);
    Equipment e;
    e.speed_cm_s = 100;
    planner.emplace(layout, catalog, policy, &map, PutAwaySettings{e, 0, 0});
  }

  Replenisher replenisher(ReplenishConfig cfg = {}) {
    return Replenisher(catalog, inv, *planner, waiting, ReplenishmentSampler(cfg, 1), metrics, d0);
  }
};

}  // namespace

TEST_CASE("lowest stock wins") {
  Bench b;
  const auto& s = b.layout.storage_slots();
  b.inv.place({s[0], 0, 5, d0});
  b.inv.place({s[1], 1, 2, d0});
  b.inv.place({s[2], 2, 9, d0});
  auto r = b.replenisher();
  CHECK(r.select_item() == 1u);
  r.handle_rp(0);
  CHECK(b.inv.total_on_hand(1) == 42);
}

TEST_CASE("ties go to the smaller code") {
  Bench b;
  const auto& s = b.layout.storage_slots();
  b.inv.place({s[0], 0, 2, d0});
  b.inv.place({s[1], 1, 2, d0});
  b.inv.place({s[2], 2, 9, d0});
  CHECK(b.replenisher().select_item() == 0u);
}

TEST_CASE("next replenishment after a constant gap") {
  Bench b;
  auto r = b.replenisher();
  const auto out = r.handle_rp(1000);
  REQUIRE(out.size() == 1);
  CHECK(out[0].time == 1600);
  CHECK(std::holds_alternative<Replenish>(out[0].payload));
}

TEST_CASE("items without room are skipped; a full warehouse still reschedules") {
  Bench b(PolicyKind::fixed);
  const auto& s = b.layout.storage_slots();
  // A's slots (0 and 3) full, A has the least stock.
  b.inv.place({s[0], 0, 1, d0});
  b.inv.place({s[3], 0, 1, d0});
  b.inv.place({s[1], 1, 10, d0});
  b.inv.place({s[2], 2, 20, d0});
  auto r = b.replenisher();
  CHECK(r.select_item() == 1u);
  b.inv.place({s[4], 1, 10, d0});
  b.inv.place({s[5], 2, 20, d0});
  CHECK_FALSE(r.select_item());
  const auto out = r.handle_rp(10);
  CHECK(out.size() == 1);
  CHECK(r.log().empty());
}

TEST_CASE("a restock is one full pallet dated today") {
  Bench b;
  auto r = b.replenisher();
  r.handle_rp(3 * 86400 + 5);
  REQUIRE(r.log().size() == 1);
  const auto& rec = *b.inv.at(r.log()[0].location);
  CHECK(rec.qty == b.catalog.at(rec.item).qty_per_pallet);
  CHECK(rec.mfg_date == d0.plus_days(3));
  CHECK(b.metrics.put_full_s > 0);
}

TEST_CASE("queued pallets are restocked before fresh ones") {
  Bench b;
  b.waiting.push({0, 50, d0.plus_days(-9)}, 0);
  auto r = b.replenisher();
  r.handle_rp(0);
  REQUIRE(r.log().size() == 1);
  CHECK(r.log()[0].from_waiting_list);
  CHECK(b.inv.at(r.log()[0].location)->mfg_date == d0.plus_days(-9));
  CHECK(b.waiting.empty());
}

TEST_CASE("sampler") {
  SUBCASE("constant mode returns mu") {
    ReplenishmentSampler s({SamplerMode::constant, 600, 120, {}, {}}, 4);
    for (int i = 0; i < 10; ++i) CHECK(s.next_interval() == 600);
  }
  SUBCASE("sampled gaps respect the floor and repeat per seed") {
    ReplenishConfig cfg{SamplerMode::sampled, 100, 80, {}, {}};
    CHECK(cfg.effective_t_min() == 1.0);
    cfg.t_min_s = 40.0;
    ReplenishmentSampler a(cfg, 99), b(cfg, 99);
    bool floored = false;
    for (int i = 0; i < 2000; ++i) {
      const double x = a.next_interval();
      CHECK(x >= 40.0);
      CHECK(x == b.next_interval());
      floored = floored || x == 40.0;
    }
    CHECK(floored);
  }
  SUBCASE("default floor") {
    ReplenishConfig cfg{SamplerMode::sampled, 600, 120, {}, {}};
    CHECK(cfg.effective_t_min() == 240.0);
  }
}
