#pragma once

#include <span>
#include <stdexcept>

namespace picksim {

/// Fewer than two observations, zero baseline or mismatched samples.
class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StatsSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Mean and 95% t-interval with n - 1 degrees of freedom.
StatsSummary summarize(std::span<const double> values, double confidence = 0.95);

/// Percent change of `other_total` relative to `baseline_total`.
double gap_percent(double baseline_total, double other_total);

struct PairedTest {
  double mean_diff = 0.0;
  double t = 0.0;  // +-inf when the differences are constant and nonzero
  double df = 0.0;
  double p = 1.0;  // two-sided
};

/// Test on d = b - a.
PairedTest paired_test(std::span<const double> a, std::span<const double> b);

double t_quantile(double p, double df);
double t_cdf(double x, double df);

}  // namespace picksim
