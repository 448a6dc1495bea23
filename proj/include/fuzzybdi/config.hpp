#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzybdi/fuzzy.hpp"

namespace fbdi {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScalerParams {
  int initial_machines = 10;
  int max_machines = 1000;
  /// Workload units one machine consumes per consumeWorkLoad.
  double machine_capacity = 10.0;
  double burst_min = 200.0;
  double burst_max = 1200.0;
  /// consumeWorkLoad calls between two arrivals.
  int gap_min = 3;
  int gap_max = 8;
};

struct RobotParams {
  double move_cost = 0.5;
  /// Battery spent by burnGarb(p) is p/100 * burn_cost.
  double burn_cost = 1.5;
  /// Bag fill added per unit of dirt removed.
  double bag_rate = 0.1;
  double bag_full = 80.0;
  double battery_depleted = 20.0;
};

struct LineParams {
  /// Products per episode.
  int products = 200;
};

struct MatrixConfig {
  std::vector<std::string> scenarios{"network-scaler", "cleaning-robots", "production-line"};
  std::vector<std::string> modes{"direct", "boolean", "fuzzy-loose", "fuzzy-tight"};
  std::vector<int> ks{1, 3, 10};
  std::vector<std::string> styles{"normal", "nested"};
  int cycles = 100;
  int reps = 3;
  int warmup = 50;
  std::uint64_t seed = 1;
  std::string out = "results";
};

struct ScenarioConfig {
  /// Linguistic variables per scenario id.
  std::map<std::string, std::vector<LinguisticVariable>> variables;
  ScalerParams scaler;
  RobotParams robots;
  LineParams line;
  MatrixConfig matrix;

  const std::vector<LinguisticVariable>& variables_for(const std::string& scenario) const;
};

ScenarioConfig default_config();

/// Values absent from the file keep their defaults. Throws ConfigError.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& json_text);

}  // namespace fbdi
