#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "picksim/config.hpp"
#include "picksim/des_engine.hpp"
#include "picksim/metrics.hpp"
#include "picksim/picking.hpp"
#include "picksim/storage_policy.hpp"
#include "picksim/warehouse.hpp"

namespace picksim {

/// Inter-replenishment times: constant mu, or normal(mu, sigma) truncated
/// from below at t_min.
class ReplenishmentSampler {
 public:
  ReplenishmentSampler(const ReplenishConfig& cfg, std::uint64_t seed);

  Seconds next_interval();
  std::uint64_t seed() const { return seed_; }
  Seconds t_min() const { return t_min_; }

 private:
  SamplerMode mode_;
  Seconds mu_;
  Seconds t_min_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

struct Restock {
  Seconds time = 0.0;
  ItemIndex item = 0;
  long qty = 0;
  LocationIndex location = 0;
  bool from_waiting_list = false;
};

/// Handler for Replenish events: restocks one pallet of the eligible item
/// with the lowest on-hand quantity and schedules the next replenishment.
class Replenisher {
 public:
  Replenisher(const Catalog& catalog, Inventory& inventory, const StoragePlanner& planner, WaitingList& waiting,
              ReplenishmentSampler sampler, ProcessMetrics& metrics, Date run_start, RunHooks hooks = {});

  /// Eligible = has a vacant candidate slot. Minimal on-hand wins, ties to
  /// the smaller item code.
  std::optional<ItemIndex> select_item() const;

  std::vector<PendingEvent> handle_rp(Seconds now);

  const std::vector<Restock>& log() const { return log_; }
  const ReplenishmentSampler& sampler() const { return sampler_; }

 private:
  const Catalog* catalog_;
  Inventory* inventory_;
  const StoragePlanner* planner_;
  WaitingList* waiting_;
  ReplenishmentSampler sampler_;
  ProcessMetrics* metrics_;
  Date run_start_;
  RunHooks hooks_;
  std::vector<Restock> log_;
};

}  // namespace picksim
