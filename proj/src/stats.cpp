#include "picksim/stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace picksim {

double t_quantile(double p, double df) { return boost::math::quantile(boost::math::students_t(df), p); }

double t_cdf(double x, double df) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::students_t(df), x);
}

namespace {

double mean_of(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double sd_of(std::span<const double> v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (v.size() - 1));
}

}  // namespace

StatsSummary summarize(std::span<const double> values, double confidence) {
  if (values.size() < 2) throw StatsError("confidence interval needs at least 2 values");
  if (!(confidence > 0.0 && confidence < 1.0)) throw StatsError("confidence must lie in (0, 1)");
  StatsSummary s;
  s.n = values.size();
  s.mean = mean_of(values);
  s.sd = sd_of(values, s.mean);
  const double df = static_cast<double>(s.n - 1);
  const double half = t_quantile(0.5 + confidence / 2.0, df) * s.sd / std::sqrt(static_cast<double>(s.n));
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  return s;
}

double gap_percent(double baseline_total, double other_total) {
  if (baseline_total == 0.0) throw StatsError("gap undefined for a zero baseline");
  return 100.0 * (other_total - baseline_total) / baseline_total;
}

PairedTest paired_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw StatsError("paired samples differ in length");
  if (a.size() < 2) throw StatsError("paired test needs at least 2 pairs");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  PairedTest r;
  r.df = static_cast<double>(d.size() - 1);
  r.mean_diff = mean_of(d);
  const double sd = sd_of(d, r.mean_diff);
  if (sd == 0.0) {
    if (r.mean_diff == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = std::copysign(std::numeric_limits<double>::infinity(), r.mean_diff);
      r.p = 0.0;
    }
    return r;
  }
  r.t = r.mean_diff / (sd / std::sqrt(static_cast<double>(d.size())));
  r.p = 2.0 * t_cdf(-std::abs(r.t), r.df);
  return r;
}

}  // namespace picksim
