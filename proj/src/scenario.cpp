#include "fuzzybdi/scenario.hpp"

#include "fuzzybdi/parser.hpp"

namespace fbdi {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::Direct:
      return "direct";
    case Engine::Boolean:
      return "boolean";
    case Engine::FuzzyLoose:
      return "fuzzy-loose";
    case Engine::FuzzyTight:
      return "fuzzy-tight";
  }
  return "?";
}

Engine parse_engine(const std::string& s) {
  if (s == "direct") return Engine::Direct;
  if (s == "boolean") return Engine::Boolean;
  if (s == "fuzzy-loose") return Engine::FuzzyLoose;
  if (s == "fuzzy-tight") return Engine::FuzzyTight;
  throw std::invalid_argument("unknown mode " + s);
}

std::optional<Mode> mode_of(Engine e) {
  switch (e) {
    case Engine::Boolean:
      return Mode::Boolean;
    case Engine::FuzzyLoose:
      return Mode::FuzzyLoose;
    case Engine::FuzzyTight:
      return Mode::FuzzyTight;
    case Engine::Direct:
      break;
  }
  return std::nullopt;
}

namespace {

struct RobotSetup {
  const char* name;
  const char* partner;
  int id;
  Tile meeting;
};

constexpr RobotSetup kRobots[] = {{"r1", "r3", 1, {6, 7}}, {"r3", "r1", 3, {8, 7}}};
constexpr const char* kCoordinator = "r2";

Glue glue_for(const std::string& scenario, const RobotSetup& robot = kRobots[0]) {
  if (scenario == "network-scaler") return scaler_glue();
  if (scenario == "cleaning-robots") {
    return robot_glue(robot.name, robot.partner, kCoordinator, robot.id, robot.meeting.first, robot.meeting.second);
  }
  if (scenario == "production-line") return sorter_glue();
  throw UnknownScenario("unknown scenario " + scenario);
}

GeneratedProgram build_program(const RuleTable& table, const Glue& glue, Mode mode, int k, ChainStyle style) {
  return make_recursive_chain(multiply_rules(generate_program(table, mode, glue), k), style);
}

}  // namespace

GeneratedProgram scenario_program(const std::string& scenario, Mode mode, int k, ChainStyle style) {
  return build_program(load_ruleset(scenario), glue_for(scenario), mode, k, style);
}

ScenarioRun::ScenarioRun(ScenarioConfig config, RunSpec spec) : config_(std::move(config)), spec_(std::move(spec)) {
  if (spec_.k < 1) throw std::invalid_argument("multiplier must be at least 1");
  if (spec_.scenario == "network-scaler") {
    build_scaler();
  } else if (spec_.scenario == "cleaning-robots") {
    build_robots();
  } else if (spec_.scenario == "production-line") {
    build_line();
  } else {
    throw UnknownScenario("unknown scenario " + spec_.scenario);
  }
}

RuleEvaluator ScenarioRun::evaluator() const {
  return RuleEvaluator(load_ruleset(spec_.scenario), config_.variables_for(spec_.scenario), spec_.k, spec_.style);
}

std::unique_ptr<Controller> ScenarioRun::bdi(const std::string& name, Program program, Mode mode,
                                             const std::vector<LinguisticVariable>& variables) {
  return std::make_unique<Agent>(name, std::move(program), *env_, AgentOptions{mode, variables, {}});
}

void ScenarioRun::build_scaler() {
  auto env = std::make_unique<NetworkScalerEnv>(config_.scaler, spec_.seed);
  scaler_ = env.get();
  env_ = std::move(env);
  measured_ = "scaler";
  if (auto mode = mode_of(spec_.engine)) {
    program_ = scenario_program(spec_.scenario, *mode, spec_.k, spec_.style);
    mas_.add(bdi(measured_, program_->program, *mode, config_.variables_for(spec_.scenario)));
  } else {
    mas_.add(std::make_unique<DirectScaler>(measured_, *env_, evaluator()));
  }
}

void ScenarioRun::build_robots() {
  auto env = std::make_unique<CleaningRobotsEnv>(config_.robots, spec_.seed);
  robots_ = env.get();
  env_ = std::move(env);
  measured_ = kRobots[0].name;
  const RuleTable table = load_ruleset(spec_.scenario);
  for (const RobotSetup& r : kRobots) {
    if (auto mode = mode_of(spec_.engine)) {
      GeneratedProgram g = build_program(table, glue_for(spec_.scenario, r), *mode, spec_.k, spec_.style);
      if (measured_ == r.name) program_ = g;
      mas_.add(bdi(r.name, std::move(g.program), *mode, config_.variables_for(spec_.scenario)));
    } else {
      mas_.add(std::make_unique<DirectRobot>(r.name, r.partner, kCoordinator, r.id, r.meeting, *env_, evaluator()));
    }
  }
  mas_.add(bdi(kCoordinator, Program{}, Mode::Boolean, {}));
}

void ScenarioRun::build_line() {
  auto env = std::make_unique<ProductionLineEnv>(config_.line, spec_.seed);
  line_ = env.get();
  env_ = std::move(env);
  measured_ = "sortAgent";
  if (auto mode = mode_of(spec_.engine)) {
    program_ = scenario_program(spec_.scenario, *mode, spec_.k, spec_.style);
    mas_.add(bdi(measured_, program_->program, *mode, config_.variables_for(spec_.scenario)));
    mas_.add(bdi("pushAgent", parse_program(push_source()), Mode::Boolean, {}));
    mas_.add(bdi("buildAgent", parse_program(build_source()), Mode::Boolean, {}));
  } else {
    mas_.add(std::make_unique<DirectSorter>(measured_, *env_, evaluator()));
    mas_.add(std::make_unique<DirectPusher>("pushAgent", *env_));
    mas_.add(std::make_unique<DirectBuilder>("buildAgent", *env_));
  }
}

Controller& ScenarioRun::measured() const { return *mas_.find(measured_); }

CycleReport ScenarioRun::step() {
  last_round_ = mas_.round();
  for (std::size_t i = 0; i < mas_.size(); ++i) {
    if (mas_.at(i).name() == measured_) return last_round_[i];
  }
  return {};
}

bool ScenarioRun::finished() const {
  if (robots_) {
    const auto* coordinator = dynamic_cast<const Agent*>(mas_.find(kCoordinator));
    for (const RobotSetup& r : kRobots) {
      Term done = Term::compound("moveCount", {Term::atom(r.name), Term::num(2)});
      if (!coordinator->beliefs().contains(done)) return false;
    }
    return true;
  }
  if (line_) return line_->stream_done();
  return false;
}

void ScenarioRun::reset(std::uint64_t seed) {
  spec_.seed = seed;
  if (scaler_) scaler_->reset(seed);
  if (robots_) robots_->reset(seed);
  if (line_) line_->reset(seed);
  mas_.reset();
  last_round_.clear();
}

std::size_t ScenarioRun::rule_selections(const CycleReport& report) const {
  if (!program_) return report.selections.size();
  std::size_t n = 0;
  for (std::size_t plan : report.selections) n += program_->plan_rows.at(plan) >= 0;
  return n;
}

// Decision probe.

namespace {

class StaticEnv : public Environment {
 public:
  Percept percept;
  std::vector<Term> actions;

  Percept perceive(const std::string&) override { return percept; }
  void act(const std::string&, const Term& action) override { actions.push_back(action); }
  bool is_sensing(const std::string&, const std::string&) const override { return false; }
};

class NullRouter : public MessageRouter {
 public:
  void route(Message) override {}
};

}  // namespace

struct DecisionProbe::Impl {
  RuleTable table;
  StaticEnv env;
  NullRouter router;
  std::optional<RuleEvaluator> direct;
  std::optional<GeneratedProgram> program;
  std::unique_ptr<Agent> agent;
  bool fuzzy_trigger = false;
};

DecisionProbe::DecisionProbe(const ScenarioConfig& config, const std::string& scenario, Engine engine)
    : impl_(std::make_unique<Impl>()) {
  impl_->table = load_ruleset(scenario);
  const auto& variables = config.variables_for(scenario);
  if (auto mode = mode_of(engine)) {
    GeneratedProgram g = scenario_program(scenario, *mode);
    g.program.goals.clear();
    impl_->program = g;
    impl_->fuzzy_trigger = *mode == Mode::FuzzyTight;
    impl_->agent = std::make_unique<Agent>("probe", std::move(g.program), impl_->env,
                                           AgentOptions{*mode, variables, {}});
    impl_->agent->set_router(&impl_->router);
  } else {
    impl_->direct.emplace(impl_->table, variables);
  }
}

DecisionProbe::~DecisionProbe() = default;

Decision DecisionProbe::decide(const std::vector<double>& values) {
  Impl& m = *impl_;
  if (values.size() != m.table.variables.size()) throw std::invalid_argument("one value per variable expected");
  std::vector<Reading> readings;
  for (std::size_t i = 0; i < values.size(); ++i) readings.push_back({m.table.variables[i], values[i]});
  Decision d;
  if (m.direct) {
    std::vector<int> fired = m.direct->decide(readings);
    if (fired.empty()) return d;
    d.row = fired.front();
    const Consequent& c = m.table.rows[d.row].consequent;
    d.value = c.value;
    d.label = c.label;
    return d;
  }
  m.env.percept.readings = std::move(readings);
  m.env.actions.clear();
  m.agent->reset();
  m.agent->post(Event{Term::atom(m.program->trigger), m.fuzzy_trigger, "self"});
  CycleReport report = m.agent->cycle();
  for (std::size_t plan : report.selections) {
    if (m.program->plan_rows[plan] >= 0) {
      d.row = m.program->plan_rows[plan];
      break;
    }
  }
  if (!m.env.actions.empty()) {
    const Term& a = m.env.actions.front();
    for (const Term& arg : a.args()) {
      if (arg.is_num()) {
        d.value = arg.number();
        break;
      }
      if (arg.is_str()) {
        d.label = arg.name();
        break;
      }
    }
  }
  return d;
}

}  // namespace fbdi
