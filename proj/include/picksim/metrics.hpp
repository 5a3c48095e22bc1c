#pragma once

namespace picksim {

/// Time spent per sub-process during one run, in seconds.
struct ProcessMetrics {
  double pick_full_s = 0.0;
  double pick_partial_s = 0.0;
  double put_full_s = 0.0;
  double put_partial_s = 0.0;
  double move_s = 0.0;
  double sort_full_s = 0.0;
  double sort_partial_s = 0.0;
  double waiting_s = 0.0;
  long turns = 0;
};

}  // namespace picksim
