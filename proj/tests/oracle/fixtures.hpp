#pragma once

// Seeded desk-scale workloads run through both the event engine and the
// brute-force reference.

#include <cstdint>
#include <string>

#include "picksim/config.hpp"
#include "picksim/picking.hpp"
#include "picksim/storage_policy.hpp"

namespace oracle {

struct FixtureCase {
  std::uint64_t seed = 0;
  picksim::PolicyKind policy = picksim::PolicyKind::fixed;
  picksim::PickingMode picking = picksim::PickingMode::area;
  picksim::WalkingMode walking = picksim::WalkingMode::constant;
  bool sampled_replenishment = false;
};

struct FixtureOutcome {
  bool agree = false;
  bool starved = false;  // both sides gave up on the same run
  std::size_t orders = 0;
  std::size_t lines = 0;
  std::string detail;  // first disagreement
};

FixtureOutcome check_fixture(const FixtureCase& c);

}  // namespace oracle
