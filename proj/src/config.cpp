#include "picksim/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "picksim/calendar.hpp"

namespace picksim {

using Json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

// Reads fields from a JSON object, recording type problems instead of
// throwing so every bad field is reported in one pass.
class Reader {
 public:
  Reader(const Json& obj, std::string prefix, std::vector<std::string>& errors)
      : obj_(obj), prefix_(std::move(prefix)), errors_(errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) unseen_.insert(it.key());
  }

  template <class T>
  void get(const char* key, T& out) {
    unseen_.erase(key);
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return;
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) throw std::invalid_argument("expected true/false");
      } else if constexpr (std::is_unsigned_v<T>) {
        if (!it->is_number_unsigned()) throw std::invalid_argument("expected a non-negative integer");
      } else if constexpr (std::is_integral_v<T>) {
        if (!it->is_number_integer()) throw std::invalid_argument("expected an integer");
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!it->is_number()) throw std::invalid_argument("expected a number");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!it->is_string()) throw std::invalid_argument("expected a string");
      }
      out = it->template get<T>();
    } catch (const std::exception& e) {
      errors_.push_back(prefix_ + key + ": " + e.what());
    }
  }

  template <class T>
  void get(const char* key, std::optional<T>& out) {
    unseen_.erase(key);
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return;
    T value{};
    get(key, value);
    out = value;
  }

  const Json* object(const char* key) {
    unseen_.erase(key);
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return nullptr;
    if (!it->is_object()) {
      errors_.push_back(prefix_ + key + ": expected an object");
      return nullptr;
    }
    return &*it;
  }

  void finish() {
    for (const auto& k : unseen_) errors_.push_back(prefix_ + k + ": unknown field");
  }

 private:
  const Json& obj_;
  std::string prefix_;
  std::vector<std::string>& errors_;
  std::set<std::string> unseen_;
};

template <class E>
void get_enum(Reader& r, const char* key, E& out, std::initializer_list<std::pair<const char*, E>> names,
              const std::string& prefix, std::vector<std::string>& errors) {
  std::string text;
  r.get(key, text);
  if (text.empty()) return;
  for (const auto& [name, value] : names) {
    if (text == name) {
      out = value;
      return;
    }
  }
  errors.push_back(prefix + key + ": unknown value '" + text + "'");
}

const char* walking_name(WalkingMode m) { return m == WalkingMode::constant ? "constant" : "distance"; }
const char* sampler_name(SamplerMode m) { return m == SamplerMode::constant ? "constant" : "sampled"; }

}  // namespace

ConfigValidationError::ConfigValidationError(std::vector<std::string> violations)
    : std::runtime_error("invalid config: " + join(violations)), violations_(std::move(violations)) {}

double ReplenishConfig::effective_t_min() const {
  if (t_min_s) return *t_min_s;
  return std::max(mu_s - 3.0 * sigma_s, 1.0);
}

Equipment SimConfig::handlift() const {
  Equipment e;
  e.kind = EquipmentKind::handlift;
  e.count = h;
  e.speed_cm_s = sph;
  e.turn_time_s = tth;
  e.can_put_away = puh;
  e.can_pick_up = pah;
  e.can_transfer = tfh;
  e.operators_per_unit = oh;
  return e;
}

Equipment SimConfig::stacker() const {
  Equipment e;
  e.kind = EquipmentKind::stacker;
  e.count = s;
  e.speed_cm_s = sps;
  e.lift_speed_cm_s = Lsps;
  e.turn_time_s = tts;
  e.can_put_away = pus;
  e.can_pick_up = pas;
  e.can_transfer = tfs;
  e.operators_per_unit = os;
  return e;
}

Equipment SimConfig::put_away_equipment() const {
  if (s > 0 && pus) return stacker();
  return handlift();
}

double SimConfig::unit_seconds() const {
  if (metric_unit == "seconds") return 1.0;
  if (metric_unit == "hours") return 3600.0;
  return 60.0;
}

Seconds SimConfig::plan_horizon_s(int days) const { return days * std::max(PDpu - LR, 0.0) * 3600.0; }

std::vector<std::string> SimConfig::violations() const {
  std::vector<std::string> v;
  auto nonneg = [&v](const char* name, double x) {
    if (!(x >= 0)) v.push_back(std::string(name) + ": must be >= 0");
  };
  auto positive = [&v](const char* name, double x) {
    if (!(x > 0)) v.push_back(std::string(name) + ": must be > 0");
  };
  auto hours = [&v](const char* name, double x) {
    if (!(x >= 0 && x <= 24)) v.push_back(std::string(name) + ": must lie within 0..24 hours per day");
  };

  nonneg("h", h);
  nonneg("s", s);
  nonneg("oh", oh);
  nonneg("os", os);
  positive("sph", sph);
  positive("sps", sps);
  positive("Lsps", Lsps);
  nonneg("tth", tth);
  nonneg("tts", tts);
  for (auto [name, x] : {std::pair{"BTpu", BTpu}, {"BTpa", BTpa}, {"BTs", BTs}, {"PMpu", PMpu}, {"PMs", PMs},
                         {"PPpu", PPpu}, {"PPpa", PPpa}, {"PPs", PPs}}) {
    nonneg(name, x);
  }
  hours("PDpu", PDpu);
  hours("PDpa", PDpa);
  hours("PDs", PDs);
  positive("MPW", MPW);
  if (!(MPV > 0 && MPV <= 100)) v.push_back("MPV: must lie within (0, 100] percent");
  nonneg("WI", WI);
  if (!(OIFW >= 0 && OIFW <= 100)) v.push_back("OIFW: must lie within 0..100 percent");
  hours("LR", LR);

  if (!(s > 0 && pus) && !(h > 0 && puh)) v.push_back("pus: no equipment is able to put away (need s>0 with pus or h>0 with puh)");
  if (!(s > 0 && pas) && !(h > 0 && pah)) v.push_back("pas: no equipment is able to pick up (need s>0 with pas or h>0 with pah)");

  nonneg("walking_const_s", walking_const_s);
  if (pieces_per_master < 1) v.push_back("pieces_per_master: must be >= 1");
  if (metric_unit != "seconds" && metric_unit != "minutes" && metric_unit != "hours") {
    v.push_back("metric_unit: must be seconds, minutes or hours");
  }
  try {
    Date::parse(start_date);
  } catch (const std::exception& e) {
    v.push_back(std::string("start_date: ") + e.what());
  }
  if (!(abc_a > 0 && abc_a <= abc_b && abc_b <= 1)) v.push_back("abc_a: need 0 < abc_a <= abc_b <= 1");
  if (starvation_retry_limit < 0) v.push_back("starvation_retry_limit: must be >= 0");
  nonneg("max_week_s", max_week_s);

  positive("replenish.mu_s", replenish.mu_s);
  nonneg("replenish.sigma_s", replenish.sigma_s);
  if (replenish.t_min_s && !(*replenish.t_min_s > 0)) v.push_back("replenish.t_min_s: must be > 0");

  if (policy != "fixed" && policy != "random" && policy != "fixed-zone") {
    v.push_back("policy: must be fixed, random or fixed-zone");
  }
  if (allocation != "homogeneous" && allocation != "demand") v.push_back("allocation: must be homogeneous or demand");
  if (picking != "area" && picking != "zoning") v.push_back("picking: must be area or zoning");
  if (weeks < 1) v.push_back("weeks: must be >= 1");
  if (generator.items < 1) v.push_back("generator.items: must be >= 1");
  if (generator.slots < generator.items) v.push_back("generator.slots: must be >= generator.items");
  return v;
}

void SimConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigValidationError(std::move(v));
}

SimConfig parse_config_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigParseError("config must be a JSON object");

  SimConfig cfg;
  std::vector<std::string> errors;
  Reader r(doc, "", errors);
  r.get("h", cfg.h);
  r.get("s", cfg.s);
  r.get("oh", cfg.oh);
  r.get("os", cfg.os);
  r.get("puh", cfg.puh);
  r.get("pus", cfg.pus);
  r.get("pah", cfg.pah);
  r.get("pas", cfg.pas);
  r.get("tfh", cfg.tfh);
  r.get("tfs", cfg.tfs);
  r.get("sph", cfg.sph);
  r.get("sps", cfg.sps);
  r.get("Lsps", cfg.Lsps);
  r.get("tth", cfg.tth);
  r.get("tts", cfg.tts);
  r.get("BTpu", cfg.BTpu);
  r.get("BTpa", cfg.BTpa);
  r.get("BTs", cfg.BTs);
  r.get("PMpu", cfg.PMpu);
  r.get("PMs", cfg.PMs);
  r.get("PPpu", cfg.PPpu);
  r.get("PPpa", cfg.PPpa);
  r.get("PPs", cfg.PPs);
  r.get("PDpu", cfg.PDpu);
  r.get("PDpa", cfg.PDpa);
  r.get("PDs", cfg.PDs);
  r.get("EAT", cfg.EAT);
  r.get("MPW", cfg.MPW);
  r.get("MPV", cfg.MPV);
  r.get("WI", cfg.WI);
  r.get("OIFW", cfg.OIFW);
  r.get("LR", cfg.LR);
  get_enum(r, "walking_mode", cfg.walking_mode,
           {{"constant", WalkingMode::constant}, {"distance", WalkingMode::distance}}, "", errors);
  r.get("walking_const_s", cfg.walking_const_s);
  r.get("pieces_per_master", cfg.pieces_per_master);
  r.get("metric_unit", cfg.metric_unit);
  r.get("start_date", cfg.start_date);
  r.get("abc_a", cfg.abc_a);
  r.get("abc_b", cfg.abc_b);
  r.get("starvation_retry_limit", cfg.starvation_retry_limit);
  r.get("max_week_s", cfg.max_week_s);
  if (const Json* rep = r.object("replenish")) {
    Reader rr(*rep, "replenish.", errors);
    get_enum(rr, "mode", cfg.replenish.mode, {{"constant", SamplerMode::constant}, {"sampled", SamplerMode::sampled}},
             "replenish.", errors);
    rr.get("mu_s", cfg.replenish.mu_s);
    rr.get("sigma_s", cfg.replenish.sigma_s);
    rr.get("t_min_s", cfg.replenish.t_min_s);
    rr.get("seed", cfg.replenish.seed);
    rr.finish();
  }
  r.get("policy", cfg.policy);
  r.get("allocation", cfg.allocation);
  r.get("picking", cfg.picking);
  r.get("weeks", cfg.weeks);
  r.get("seed", cfg.seed);
  r.get("data_dir", cfg.data_dir);
  if (const Json* gen = r.object("generator")) {
    Reader gr(*gen, "generator.", errors);
    gr.get("items", cfg.generator.items);
    gr.get("slots", cfg.generator.slots);
    gr.get("lines", cfg.generator.lines);
    gr.finish();
  }
  r.finish();

  for (auto& v : cfg.violations()) errors.push_back(std::move(v));
  if (!errors.empty()) throw ConfigValidationError(std::move(errors));
  return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(path.string() + ": cannot open config");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string dump_config(const SimConfig& c) {
  Json j;
  j["h"] = c.h;
  j["s"] = c.s;
  j["oh"] = c.oh;
  j["os"] = c.os;
  j["puh"] = c.puh;
  j["pus"] = c.pus;
  j["pah"] = c.pah;
  j["pas"] = c.pas;
  j["tfh"] = c.tfh;
  j["tfs"] = c.tfs;
  j["sph"] = c.sph;
  j["sps"] = c.sps;
  j["Lsps"] = c.Lsps;
  j["tth"] = c.tth;
  j["tts"] = c.tts;
  j["BTpu"] = c.BTpu;
  j["BTpa"] = c.BTpa;
  j["BTs"] = c.BTs;
  j["PMpu"] = c.PMpu;
  j["PMs"] = c.PMs;
  j["PPpu"] = c.PPpu;
  j["PPpa"] = c.PPpa;
  j["PPs"] = c.PPs;
  j["PDpu"] = c.PDpu;
  j["PDpa"] = c.PDpa;
  j["PDs"] = c.PDs;
  j["EAT"] = c.EAT;
  j["MPW"] = c.MPW;
  j["MPV"] = c.MPV;
  j["WI"] = c.WI;
  j["OIFW"] = c.OIFW;
  j["LR"] = c.LR;
  j["walking_mode"] = walking_name(c.walking_mode);
  j["walking_const_s"] = c.walking_const_s;
  j["pieces_per_master"] = c.pieces_per_master;
  j["metric_unit"] = c.metric_unit;
  j["start_date"] = c.start_date;
  j["abc_a"] = c.abc_a;
  j["abc_b"] = c.abc_b;
  j["starvation_retry_limit"] = c.starvation_retry_limit;
  j["max_week_s"] = c.max_week_s;
  Json rep;
  rep["mode"] = sampler_name(c.replenish.mode);
  rep["mu_s"] = c.replenish.mu_s;
  rep["sigma_s"] = c.replenish.sigma_s;
  rep["t_min_s"] = c.replenish.t_min_s ? Json(*c.replenish.t_min_s) : Json(nullptr);
  rep["seed"] = c.replenish.seed ? Json(*c.replenish.seed) : Json(nullptr);
  j["replenish"] = rep;
  j["policy"] = c.policy;
  j["allocation"] = c.allocation;
  j["picking"] = c.picking;
  j["weeks"] = c.weeks;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["data_dir"] = c.data_dir;
  j["generator"] = Json{{"items", c.generator.items}, {"slots", c.generator.slots}, {"lines", c.generator.lines}};
  return j.dump(2) + "\n";
}

void save_config(const SimConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write config");
  out << dump_config(cfg);
}

}  // namespace picksim
