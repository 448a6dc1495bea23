#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuzzybdi/agent.hpp"
#include "fuzzybdi/config.hpp"
#include "fuzzybdi/direct.hpp"
#include "fuzzybdi/environments.hpp"
#include "fuzzybdi/generator.hpp"
#include "fuzzybdi/mas.hpp"

namespace fbdi {

/// Direct plus the three interpreter modes.
enum class Engine { Direct, Boolean, FuzzyLoose, FuzzyTight };

const char* to_string(Engine e);
/// Accepts direct, boolean, fuzzy-loose, fuzzy-tight.
Engine parse_engine(const std::string& s);
std::optional<Mode> mode_of(Engine e);

struct RunSpec {
  std::string scenario = "network-scaler";
  Engine engine = Engine::FuzzyTight;
  int k = 1;
  ChainStyle style = ChainStyle::Normal;
  std::uint64_t seed = 1;
};

/// Program of the measured controller of a scenario.
GeneratedProgram scenario_program(const std::string& scenario, Mode mode, int k = 1,
                                  ChainStyle style = ChainStyle::Normal);

/// One scenario episode: environment, controllers and the scheduler.
class ScenarioRun {
 public:
  ScenarioRun(ScenarioConfig config, RunSpec spec);
  ScenarioRun(const ScenarioRun&) = delete;
  ScenarioRun& operator=(const ScenarioRun&) = delete;

  const RunSpec& spec() const { return spec_; }
  /// Name of the controller whose cycles are timed.
  const std::string& measured_name() const { return measured_; }
  Controller& measured() const;

  /// One round of every controller; returns the measured controller's report.
  CycleReport step();
  const std::vector<CycleReport>& last_round() const { return last_round_; }
  /// Robots: both moveCount(.,2) at the coordinator. Line: all products
  /// labelled. The scaler never finishes.
  bool finished() const;
  void reset(std::uint64_t seed);

  /// Table rows chosen in the report; scaffolding plans are not counted.
  std::size_t rule_selections(const CycleReport& report) const;

  MultiAgentSystem& mas() { return mas_; }
  Environment& environment() { return *env_; }
  NetworkScalerEnv* scaler_env() const { return scaler_; }
  CleaningRobotsEnv* robots_env() const { return robots_; }
  ProductionLineEnv* line_env() const { return line_; }
  /// Null in Direct mode.
  const GeneratedProgram* measured_program() const { return program_ ? &*program_ : nullptr; }

 private:
  void build_scaler();
  void build_robots();
  void build_line();
  std::unique_ptr<Controller> bdi(const std::string& name, Program program, Mode mode,
                                  const std::vector<LinguisticVariable>& variables);
  RuleEvaluator evaluator() const;

  ScenarioConfig config_;
  RunSpec spec_;
  std::unique_ptr<Environment> env_;
  NetworkScalerEnv* scaler_ = nullptr;
  CleaningRobotsEnv* robots_ = nullptr;
  ProductionLineEnv* line_ = nullptr;
  MultiAgentSystem mas_;
  std::string measured_;
  std::optional<GeneratedProgram> program_;
  std::vector<CycleReport> last_round_;
};

/// Row and emitted value of a single decision.
struct Decision {
  int row = -1;
  std::optional<double> value;
  std::string label;
};

/// Runs one decision of a scenario's measured controller on fixed readings.
class DecisionProbe {
 public:
  DecisionProbe(const ScenarioConfig& config, const std::string& scenario, Engine engine);
  ~DecisionProbe();

  /// `values` follow the rule table's variable order.
  Decision decide(const std::vector<double>& values);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fbdi
