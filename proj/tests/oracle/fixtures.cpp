#include "fixtures.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "naive_sim.hpp"
#include "picksim/experiment.hpp"
#include "picksim/format.hpp"
#include "picksim/generator.hpp"
#include "picksim/simulation.hpp"

namespace oracle {

using namespace picksim;

namespace {

bool same_bits(double a, double b) {
  if (std::isnan(a) && std::isnan(b)) return true;
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

FixtureOutcome check_fixture(const FixtureCase& c) {
  std::mt19937_64 rng(c.seed);
  GeneratorScale scale;
  scale.items = 3 + rng() % 8;
  scale.slots = scale.items + rng() % (21 - scale.items);
  scale.lines = 1 + rng() % 30;
  scale.weeks = 1;
  GeneratorOptions opt;
  opt.layers = 1 + static_cast<int>(rng() % 2);
  opt.max_line_qty = 1 + static_cast<long>(rng() % 40);
  opt.trucks_per_day = 1 + static_cast<long>(rng() % 3);
  opt.stock_fill = 0.3 + 0.1 * static_cast<double>(rng() % 5);
  const Dataset data = generate_data(c.seed, scale, opt);

  SimConfig cfg;
  cfg.walking_mode = c.walking;
  cfg.BTpu = 7.5;
  cfg.PPpu = 11.25;
  cfg.PMpu = 1.5;
  cfg.pieces_per_master = 6;
  cfg.walking_const_s = 70.0;
  cfg.replenish.mu_s = 90.0 + static_cast<double>(rng() % 400);
  if (c.sampled_replenishment) {
    cfg.replenish.mode = SamplerMode::sampled;
    cfg.replenish.sigma_s = cfg.replenish.mu_s / 3.0;
  }

  const Date start = Date::parse(cfg.start_date);
  const auto rule = rng() % 2 ? AllocationRule::demand_based : AllocationRule::homogeneous;
  const SlotMap map = build_slot_map(data, cfg, rule, demand_profile(data, start, 1));
  const auto slices = split_weeks(data, start, 1);

  FixtureOutcome out;
  out.orders = slices.orders[0].size();
  for (const auto& o : slices.orders[0]) out.lines += o.lines.size();

  WeekInput in;
  in.layout = &data.layout;
  in.catalog = &data.catalog;
  in.slot_map = &map;
  in.initial = data.initial;
  in.receipts = slices.receipts[0];
  in.orders = slices.orders[0];
  in.run_start = start;
  WeekOptions wo;
  wo.policy = c.policy;
  wo.picking = c.picking;
  wo.seed = c.seed * 31 + 7;
  wo.audit = true;

  NaiveInput ni;
  ni.layout = &data.layout;
  ni.catalog = &data.catalog;
  ni.slot_map = &map;
  ni.policy = c.policy;
  ni.picking = c.picking;
  ni.initial = data.initial;
  ni.receipts = slices.receipts[0];
  ni.orders = slices.orders[0];
  ni.run_start = start;
  ni.seed = wo.seed;

  const NaiveResult ref = naive_week(cfg, ni);
  std::optional<WeekResult> got;
  try {
    got = run_week(cfg, in, wo);
  } catch (const StarvationError& e) {
    out.starved = true;
    out.agree = ref.starved;
    if (!out.agree) out.detail = std::string("engine starved, reference finished: ") + e.what();
    return out;
  }
  if (ref.starved) {
    out.detail = "reference starved, engine finished";
    return out;
  }

  std::ostringstream why;
  for (std::size_t o = 0; o < ref.completion.size(); ++o) {
    if (!same_bits(ref.completion[o], got->order_completion[o])) {
      why << "order " << o << ": reference " << format_real(ref.completion[o]) << ", engine "
          << format_real(got->order_completion[o]);
      break;
    }
  }
  if (why.str().empty() && !same_bits(ref.makespan, got->makespan)) why << "makespan differs";
  if (why.str().empty() && ref.restocks != got->restocks.size()) {
    why << "restocks: reference " << ref.restocks << ", engine " << got->restocks.size();
  }
  out.detail = why.str();
  out.agree = out.detail.empty();
  return out;
}

}  // namespace oracle
