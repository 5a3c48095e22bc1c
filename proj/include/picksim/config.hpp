#pragma once

// Simulation settings. Field names follow the warehouse's own parameter
// symbols (h, s, sph, BTpu, ...), so a config file reads like the parameter
// sheet it was copied from.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picksim/warehouse.hpp"

namespace picksim {

/// Config text is not valid JSON (CLI exit 2).
class ConfigParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config parsed but violates constraints (CLI exit 3). what() joins all
/// violations; violations() lists them one per field.
class ConfigValidationError : public std::runtime_error {
 public:
  explicit ConfigValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

enum class WalkingMode { constant, distance };
enum class SamplerMode { constant, sampled };

struct ReplenishConfig {
  SamplerMode mode = SamplerMode::constant;
  double mu_s = 600.0;
  double sigma_s = 120.0;
  std::optional<double> t_min_s;  // default: max(mu - 3 sigma, 1)
  std::optional<std::uint64_t> seed;

  double effective_t_min() const;
};

/// Synthetic workload used when no data directory is given.
struct GeneratorConfig {
  std::size_t items = 153;
  std::size_t slots = 1149;
  std::size_t lines = 28129;
};

struct SimConfig {
  // Equipment settings.
  int h = 2;
  int s = 2;
  int oh = 1;
  int os = 1;
  bool puh = false;
  bool pus = true;
  bool pah = true;
  bool pas = true;
  bool tfh = true;
  bool tfs = true;
  double sph = 100.0;
  double sps = 80.0;
  double Lsps = 20.0;
  double tth = 3.0;
  double tts = 5.0;

  // Process times (seconds).
  double BTpu = 10.0;
  double BTpa = 20.0;
  double BTs = 15.0;
  double PMpu = 2.0;
  double PMs = 1.0;
  double PPpu = 15.0;
  double PPpa = 30.0;
  double PPs = 10.0;

  // Plan durations (hours per day).
  double PDpu = 2.0;
  double PDpa = 3.0;
  double PDs = 3.0;

  // Limits.
  bool EAT = false;
  double MPW = 1000.0;
  double MPV = 100.0;
  double WI = 60.0;
  double OIFW = 100.0;
  double LR = 1.0;

  // Model controls.
  WalkingMode walking_mode = WalkingMode::constant;
  double walking_const_s = 90.0;
  long pieces_per_master = 12;
  std::string metric_unit = "minutes";
  std::string start_date = "2020-06-01";
  double abc_a = 0.80;
  double abc_b = 0.95;
  long starvation_retry_limit = 0;  // 0: derived from catalog size
  double max_week_s = 0.0;          // 0: unlimited
  ReplenishConfig replenish;

  // Experiment-defining choices (CLI flags override these).
  std::string policy = "fixed";
  std::string allocation = "homogeneous";
  std::string picking = "area";
  long weeks = 4;
  std::optional<std::uint64_t> seed;
  std::string data_dir;
  GeneratorConfig generator;

  Equipment handlift() const;
  Equipment stacker() const;
  /// Stacker when it can put away, else handlift.
  Equipment put_away_equipment() const;
  /// Seconds per metric unit ("seconds", "minutes" or "hours").
  double unit_seconds() const;
  /// Picking capacity of `days` working days: PDpu minus breaks.
  Seconds plan_horizon_s(int days) const;

  /// Every violated constraint as `field: message`; empty when valid.
  std::vector<std::string> violations() const;
  void validate() const;
};

SimConfig parse_config_text(const std::string& text);
SimConfig load_config(const std::filesystem::path& path);
std::string dump_config(const SimConfig& cfg);
void save_config(const SimConfig& cfg, const std::filesystem::path& path);

}  // namespace picksim
