#include "picksim/replenishment.hpp"

#include <algorithm>
#include <cmath>

namespace picksim {

ReplenishmentSampler::ReplenishmentSampler(const ReplenishConfig& cfg, std::uint64_t seed)
    : mode_(cfg.mode),
      mu_(cfg.mu_s),
      t_min_(cfg.effective_t_min()),
      seed_(seed),
      rng_(seed),
      normal_(cfg.mu_s, cfg.sigma_s) {}

Seconds ReplenishmentSampler::next_interval() {
  if (mode_ == SamplerMode::constant) return mu_;
  return std::max(normal_(rng_), t_min_);
}

Replenisher::Replenisher(const Catalog& catalog, Inventory& inventory, const StoragePlanner& planner,
                         WaitingList& waiting, ReplenishmentSampler sampler, ProcessMetrics& metrics, Date run_start,
                         RunHooks hooks)
    : catalog_(&catalog),
      inventory_(&inventory),
      planner_(&planner),
      waiting_(&waiting),
      sampler_(std::move(sampler)),
      metrics_(&metrics),
      run_start_(run_start),
      hooks_(std::move(hooks)) {}

std::optional<ItemIndex> Replenisher::select_item() const {
  std::optional<ItemIndex> best;
  // Catalog order is code order, so the first minimum found wins ties.
  for (ItemIndex i = 0; i < catalog_->size(); ++i) {
    if (best && inventory_->total_on_hand(i) >= inventory_->total_on_hand(*best)) continue;
    if (!planner_->has_vacant_candidate(i, *inventory_)) continue;
    best = i;
  }
  return best;
}

std::vector<PendingEvent> Replenisher::handle_rp(Seconds now) {
  if (const auto item = select_item()) {
    // Pallets already queued for this item go first so fresh stock never
    // overtakes older stock.
    InboundPallet pallet{*item, catalog_->at(*item).qty_per_pallet,
                         run_start_.plus_days(static_cast<std::int32_t>(std::floor(now / 86400.0)))};
    bool queued = false;
    if (auto entry = waiting_->take_first_of(*item)) {
      pallet = entry->pallet;
      queued = true;
    }
    const auto placed = planner_->try_place(pallet, *inventory_);
    if (pallet.qty == catalog_->at(*item).qty_per_pallet) {
      metrics_->put_full_s += placed->duration;
    } else {
      metrics_->put_partial_s += placed->duration;
    }
    log_.push_back(Restock{now, *item, pallet.qty, placed->location, queued});
    if (hooks_.on_supply) hooks_.on_supply(*item, pallet.qty);
  }
  return {PendingEvent{now + sampler_.next_interval(), Replenish{}}};
}

}  // namespace picksim
