#include <doctest.h>

#include <random>
#include <sstream>

#include "picksim/calendar.hpp"
#include "picksim/csv.hpp"
#include "picksim/format.hpp"
#include "picksim/warehouse.hpp"
#include "support.hpp"

using namespace picksim;
using testing::slot_at;

namespace {

Equipment walker(double speed, double turn, std::optional<double> lift = std::nullopt) {
  Equipment e;
  e.speed_cm_s = speed;
  e.turn_time_s = turn;
  e.lift_speed_cm_s = lift;
  return e;
}

}  // namespace

TEST_CASE("travel time") {
  const auto origin = slot_at("R", 1, 1, 0, 0, 0, "Z", 1);
  SUBCASE("zero distance") { CHECK(travel_time(origin, origin, walker(100, 2, 30.0), 0) == 0.0); }
  SUBCASE("rectilinear plus one turn") {
    const auto far = slot_at("R", 1, 2, 1000, 500, 0, "Z", 2);
    CHECK(travel_time(origin, far, walker(100, 2), 1) == doctest::Approx(17.0));
  }
  SUBCASE("lift to layer 3") {
    const auto high = slot_at("R", 3, 1, 0, 0, 300, "Z", 3);
    CHECK(travel_time(origin, high, walker(80, 5, 30.0), 0) == doctest::Approx(10.0));
  }
  SUBCASE("upper layer without a lift") {
    const auto high = slot_at("R", 2, 1, 0, 0, 150, "Z", 3);
    CHECK_THROWS_AS(travel_time(origin, high, walker(100, 2), 0), std::invalid_argument);
  }
  SUBCASE("symmetric") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0, 5000);
    for (int i = 0; i < 200; ++i) {
      const auto a = slot_at("R", 1, 1, u(rng), u(rng), u(rng) / 10, "Z", 1);
      const auto b = slot_at("R", 1, 2, u(rng), u(rng), u(rng) / 10, "Z", 2);
      const int k = i % 3;
      CHECK(travel_time(a, b, walker(90, 3, 25.0), k) == travel_time(b, a, walker(90, 3, 25.0), k));
    }
  }
}

TEST_CASE("turns are aisle changes") {
  CHECK(turns_between(slot_at("R", 1, 1, 0, 0, 0, "Z", 1, "A1"), slot_at("R", 1, 2, 0, 0, 0, "Z", 2, "A1")) == 0);
  CHECK(turns_between(slot_at("R", 1, 1, 0, 0, 0, "Z", 1, "A1"), slot_at("R", 1, 2, 0, 0, 0, "Z", 2, "A2")) == 1);
}

TEST_CASE("layout validation and anchors") {
  SUBCASE("entrance synthesised") {
    Layout l({slot_at("R", 1, 1, 100, 0, 0, "Z", 5)});
    const auto& e = l.at(l.anchor(Anchor::entrance));
    CHECK(e.is_anchor());
    CHECK(e.x_cm == 0.0);
    CHECK(l.anchor(Anchor::receiving) == l.anchor(Anchor::entrance));
    CHECK(l.storage_slots().size() == 1);
  }
  SUBCASE("duplicate id") {
    CHECK_THROWS(Layout({slot_at("R", 1, 1, 0, 0, 0, "Z", 1), slot_at("R", 1, 1, 5, 0, 0, "Z", 2)}));
  }
  SUBCASE("duplicate seq_no") {
    CHECK_THROWS(Layout({slot_at("R", 1, 1, 0, 0, 0, "Z", 1), slot_at("R", 1, 2, 5, 0, 0, "Z", 1)}));
  }
  SUBCASE("negative coordinate") { CHECK_THROWS(Layout({slot_at("R", 1, 1, -1, 0, 0, "Z", 1)})); }
  SUBCASE("storage slots by seq_no, zones sorted") {
    Layout l({slot_at("R", 1, 2, 0, 0, 0, "Zb", 9), slot_at("R", 1, 1, 0, 0, 0, "Za", 3)});
    CHECK(l.at(l.storage_slots().front()).seq_no == 3);
    CHECK(l.zones() == std::vector<std::string>{"Za", "Zb"});
    CHECK(l.index_of({"R", 1, 2}) == *l.find({"R", 1, 2}));
    CHECK_THROWS_AS(l.index_of({"R", 9, 9}), LookupError);
  }
}

TEST_CASE("catalog validation") {
  CHECK_THROWS(Catalog({{"A", "c", 0.0, "Z", 1}}));
  CHECK_THROWS(Catalog({{"A", "c", 1.0, "Z", 0}}));
  CHECK_THROWS(Catalog({{"A", "c", 1.0, "Z", 1}, {"A", "c", 1.0, "Z", 1}}));
  Catalog c({{"B", "c", 1.0, "Z", 1}, {"A", "c", 1.0, "Z", 1}});
  CHECK(c.at(0).code == "A");
  CHECK(c.index_of("B") == 1);
  CHECK_FALSE(c.find("Q"));
}

TEST_CASE("fifo lot") {
  Layout l({slot_at("R", 1, 1, 0, 0, 0, "Z", 12), slot_at("R", 1, 2, 0, 0, 0, "Z", 40)});
  const auto s12 = l.index_of({"R", 1, 1});
  const auto s40 = l.index_of({"R", 1, 2});
  SUBCASE("oldest date") {
    std::vector<PalletRecord> lots{{s12, 0, 5, Date::parse("2020-06-15")}, {s40, 0, 5, Date::parse("2020-06-01")}};
    CHECK(fifo_lot(lots, l)->mfg_date == Date::parse("2020-06-01"));
  }
  SUBCASE("tie to smaller seq_no") {
    std::vector<PalletRecord> lots{{s40, 0, 5, Date::parse("2020-06-01")}, {s12, 0, 5, Date::parse("2020-06-01")}};
    CHECK(fifo_lot(lots, l)->location == s12);
  }
  SUBCASE("empty is a stock-out") { CHECK_FALSE(fifo_lot({}, l)); }
}

TEST_CASE("inventory on hand and FIFO takes") {
  const auto layout = testing::line_layout(4);
  const auto catalog = testing::catalog_of({{"A", 100}, {"B", 100}});
  Inventory inv(layout, catalog);
  const auto& s = layout.storage_slots();
  CHECK(inv.total_on_hand(0) == 0);
  inv.place({s[2], 0, 70, Date::parse("2020-06-10")});
  inv.place({s[1], 0, 30, Date::parse("2020-06-01")});
  CHECK(inv.total_on_hand(0) == 100);
  CHECK(inv.fifo_location(0) == s[1]);

  const auto t = inv.take(0, 25);
  CHECK(t.pieces == 25);
  CHECK(t.pallets_touched == 1);
  CHECK(inv.total_on_hand(0) == 75);
  CHECK(inv.at(s[1])->qty == 5);

  const auto t2 = inv.take(0, 40);
  CHECK(t2.pallets_touched == 2);
  CHECK(t2.slots_freed == 1);
  CHECK_FALSE(inv.occupied(s[1]));
  CHECK(t2.consumed == std::vector<Date>{Date::parse("2020-06-01"), Date::parse("2020-06-10")});
  CHECK(inv.received(0) == 100);
  CHECK(inv.picked(0) == 65);
  CHECK(inv.total_on_hand(0) == inv.received(0) - inv.picked(0));

  SUBCASE("one pallet per slot") { CHECK_THROWS(inv.place({s[2], 1, 5, Date{}})); }
  SUBCASE("no pallets on anchors") { CHECK_THROWS(inv.place({layout.anchor(Anchor::entrance), 1, 5, Date{}})); }
  SUBCASE("take beyond stock stops at zero") {
    const auto t3 = inv.take(0, 1000);
    CHECK(t3.pieces == 35);
    CHECK(inv.total_on_hand(0) == 0);
    CHECK_FALSE(inv.fifo_location(0));
  }
}

TEST_CASE("dates") {
  CHECK(Date::parse("1970-01-02").days == 1);
  CHECK(Date::parse("2020-06-01").iso() == "2020-06-01");
  CHECK(Date::from_ymd(2020, 6, 1) == Date::parse("2020-06-01"));
  CHECK(Date::parse("2020-06-01").plus_days(30).iso() == "2020-07-01");
  CHECK_THROWS(Date::parse("2020-13-01"));
  CHECK_THROWS(Date::parse("2020-02-30"));
  CHECK_THROWS(Date::parse("June 1"));
  CHECK(DateTime::parse("2020-06-01T06:30").iso() == "2020-06-01T06:30:00");
  CHECK(DateTime::parse("2020-06-01 06:30:15").second_of_day == 6 * 3600 + 30 * 60 + 15);
  CHECK(DateTime::parse("2020-06-01").second_of_day == 0);
  CHECK_THROWS(DateTime::parse("2020-06-01T25:00"));
}

TEST_CASE("csv reading") {
  std::istringstream in("\xEF\xBB\xBF" "a,b,c\r\n1,\"x, y\",2.5\r\n\"q\"\"\",,-3\n");
  const auto t = CsvTable::parse(in, "mem.csv");
  REQUIRE(t.rows() == 2);
  CHECK(t.cell(0, "b") == "x, y");
  CHECK(t.real(0, "c") == 2.5);
  CHECK(t.cell(1, "a") == "q\"");
  CHECK(t.integer(1, "c") == -3);
  CHECK(t.where(1) == "mem.csv:3");
  CHECK_THROWS_AS(t.require_columns({"a", "zz"}), InputError);
  CHECK_THROWS_AS(t.integer(0, "b"), InputError);
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(17.0) == "17");
  CHECK(format_fixed(-0.001, 2) == "0.00");
  CHECK(format_fixed(20.8602, 2) == "20.86");
}
