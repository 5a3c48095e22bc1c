#pragma once

// Seeded synthetic workloads: a rack layout, a catalog with skewed demand,
// starting stock, weekly orders and weekly inbound receipts.

#include <cstdint>

#include "picksim/calendar.hpp"
#include "picksim/dataset.hpp"

namespace picksim {

struct GeneratorScale {
  std::size_t items = 153;
  std::size_t slots = 1149;
  std::size_t lines = 28129;
  long weeks = 4;
};

struct GeneratorOptions {
  Date start = Date::from_ymd(2020, 6, 1);
  double demand_skew = 1.0;   // Zipf exponent over item popularity ranks
  double stock_fill = 0.6;    // share of slots holding starting stock
  long max_line_qty = 12;
  long max_lines_per_order = 6;
  long trucks_per_day = 8;
  int layers = 0;  // rack layers; 0 picks 3 from 60 slots up, else 1
};

/// Deterministic per (seed, scale, options). Throws InputError on an
/// infeasible scale. Starting stock plus weekly inbound covers each week's
/// demand for every item.
Dataset generate_data(std::uint64_t seed, const GeneratorScale& scale, const GeneratorOptions& options = {});

}  // namespace picksim
