#include "fuzzybdi/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fbdi {

using nlohmann::json;

namespace {

LinguisticVariable make_var(std::string name, double lo, double hi,
                            std::vector<std::pair<std::string, MembershipFunction>> labels) {
  LinguisticVariable v{std::move(name), lo, hi, std::move(labels)};
  v.validate();
  return v;
}

std::vector<LinguisticVariable> scaler_variables() {
  return {make_var("workLoad", 0, 1500,
                   {{"low", MembershipFunction::trapezoidal(0, 0, 200, 500)},
                    {"medium", MembershipFunction::triangular(200, 600, 1000)},
                    {"high", MembershipFunction::trapezoidal(700, 1000, 1500, 1500)}}),
          make_var("responseTime", 0, 150,
                   {{"good", MembershipFunction::trapezoidal(0, 0, 10, 30)},
                    {"ok", MembershipFunction::triangular(10, 40, 70)},
                    {"bad", MembershipFunction::trapezoidal(50, 80, 150, 150)}})};
}

std::vector<LinguisticVariable> robot_variables() {
  auto three = [](std::string name) {
    return make_var(std::move(name), 0, 100,
                    {{"min", MembershipFunction::trapezoidal(0, 0, 20, 50)},
                     {"mid", MembershipFunction::triangular(20, 50, 80)},
                     {"max", MembershipFunction::trapezoidal(50, 80, 100, 100)}});
  };
  return {three("batteryPower"), three("vacuumBag"), three("dirtIntensity")};
}

std::vector<LinguisticVariable> line_variables() {
  auto rb = [](std::string name) {
    return make_var(std::move(name), 0, 255,
                    {{"low", MembershipFunction::trapezoidal(0, 0, 60, 110)},
                     {"medium", MembershipFunction::triangular(60, 128, 196)},
                     {"high", MembershipFunction::trapezoidal(146, 196, 255, 255)}});
  };
  const double s = 255.0 / 6.0;
  auto green = make_var("green", 0, 255,
                        {{"ultralow", MembershipFunction::triangular(0, 0, s)},
                         {"low", MembershipFunction::triangular(0, s, 2 * s)},
                         {"medium", MembershipFunction::triangular(s, 2 * s, 3 * s)},
                         {"ultramedium", MembershipFunction::triangular(2 * s, 3 * s, 4 * s)},
                         {"high", MembershipFunction::triangular(3 * s, 4 * s, 5 * s)},
                         {"veryhigh", MembershipFunction::triangular(4 * s, 5 * s, 255)},
                         {"ultrahigh", MembershipFunction::triangular(5 * s, 255, 255)}});
  return {rb("red"), green, rb("blue")};
}

MembershipFunction parse_mf(const json& j) {
  std::string shape = j.value("shape", std::string(j.at("points").size() == 3 ? "triangular" : "trapezoidal"));
  const auto& p = j.at("points");
  if (shape == "triangular" && p.size() == 3) return MembershipFunction::triangular(p[0], p[1], p[2]);
  if (shape == "trapezoidal" && p.size() == 4) return MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]);
  throw ConfigError("bad membership function " + j.dump());
}

LinguisticVariable parse_variable(const json& j) {
  LinguisticVariable v;
  v.name = j.at("name").get<std::string>();
  v.lo = j.at("universe").at(0).get<double>();
  v.hi = j.at("universe").at(1).get<double>();
  for (const auto& l : j.at("labels")) v.labels.emplace_back(l.at("label").get<std::string>(), parse_mf(l));
  v.validate();
  return v;
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

const std::vector<LinguisticVariable>& ScenarioConfig::variables_for(const std::string& scenario) const {
  auto it = variables.find(scenario);
  if (it == variables.end()) throw ConfigError("no variables configured for " + scenario);
  return it->second;
}

ScenarioConfig default_config() {
  ScenarioConfig c;
  c.variables["network-scaler"] = scaler_variables();
  c.variables["cleaning-robots"] = robot_variables();
  c.variables["production-line"] = line_variables();
  return c;
}

ScenarioConfig parse_config(const std::string& json_text) {
  ScenarioConfig c = default_config();
  try {
    json root = json::parse(json_text);
    if (root.contains("scenarios")) {
      for (const auto& [id, s] : root.at("scenarios").items()) {
        if (s.contains("variables")) {
          std::vector<LinguisticVariable> vars;
          for (const auto& v : s.at("variables")) vars.push_back(parse_variable(v));
          c.variables[id] = std::move(vars);
        }
        if (!s.contains("params")) continue;
        const json& p = s.at("params");
        if (id == "network-scaler") {
          read(p, "initial_machines", c.scaler.initial_machines);
          read(p, "max_machines", c.scaler.max_machines);
          read(p, "machine_capacity", c.scaler.machine_capacity);
          read(p, "burst_min", c.scaler.burst_min);
          read(p, "burst_max", c.scaler.burst_max);
          read(p, "gap_min", c.scaler.gap_min);
          read(p, "gap_max", c.scaler.gap_max);
        } else if (id == "cleaning-robots") {
          read(p, "move_cost", c.robots.move_cost);
          read(p, "burn_cost", c.robots.burn_cost);
          read(p, "bag_rate", c.robots.bag_rate);
          read(p, "bag_full", c.robots.bag_full);
          read(p, "battery_depleted", c.robots.battery_depleted);
        } else if (id == "production-line") {
          read(p, "products", c.line.products);
        }
      }
    }
    if (root.contains("matrix")) {
      const json& m = root.at("matrix");
      read(m, "scenarios", c.matrix.scenarios);
      read(m, "modes", c.matrix.modes);
      read(m, "k", c.matrix.ks);
      read(m, "styles", c.matrix.styles);
      read(m, "cycles", c.matrix.cycles);
      read(m, "reps", c.matrix.reps);
      read(m, "warmup", c.matrix.warmup);
      read(m, "seed", c.matrix.seed);
      read(m, "out", c.matrix.out);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidMembership& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (c.scaler.initial_machines < 1 || c.scaler.gap_min < 1 || c.scaler.gap_max < c.scaler.gap_min) {
    throw ConfigError("config: invalid network-scaler params");
  }
  if (c.matrix.cycles < 1 || c.matrix.reps < 1) throw ConfigError("config: cycles and reps must be positive");
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace fbdi
