#include "fuzzybdi/environments.hpp"

#include <algorithm>
#include <cmath>

namespace fbdi {

namespace {

double number_arg(const Term& action, std::size_t i) {
  if (action.arity() <= i || !action.arg(i).is_num()) {
    throw InvalidAction("expected a number at argument " + std::to_string(i + 1) + " of " + to_string(action));
  }
  return action.arg(i).number();
}

const std::string& action_name(const Term& action) {
  if (!action.is_atom() && !action.is_compound()) throw InvalidAction("not an action: " + to_string(action));
  return action.functor();
}

}  // namespace

// Network scaler.

NetworkScalerEnv::NetworkScalerEnv(ScalerParams params, std::uint64_t seed) : params_(params) {
  if (params_.initial_machines < 1 || params_.max_machines < params_.initial_machines) {
    throw std::invalid_argument("invalid machine limits");
  }
  if (params_.burst_max < params_.burst_min || params_.gap_max < params_.gap_min || params_.gap_min < 0) {
    throw std::invalid_argument("invalid arrival schedule");
  }
  reset(seed);
}

void NetworkScalerEnv::reset(std::uint64_t seed) {
  rng_.seed(seed);
  workload_ = 0;
  machines_ = params_.initial_machines;
  arrival_turn_ = 0;
  arrivals_ = 0;
}

int NetworkScalerEnv::scaled_machines(int machines, double factor, int max_machines) {
  double target = std::round(machines * (1.0 + factor / 100.0));
  return static_cast<int>(std::clamp(target, 1.0, static_cast<double>(max_machines)));
}

Percept NetworkScalerEnv::perceive(const std::string&) {
  Percept p;
  p.readings = {{"workLoad", workload_}, {"responseTime", workload_ / machines_}};
  p.facts = {Term::compound("currentWorkLoad", {Term::num(workload_)}),
             Term::compound("arrivedTurn", {Term::num(arrival_turn_)})};
  return p;
}

void NetworkScalerEnv::act(const std::string&, const Term& action) {
  const std::string& name = action_name(action);
  if (name == "getWorkLoad") {
    workload_ += std::uniform_real_distribution<double>(params_.burst_min, params_.burst_max)(rng_);
    arrival_turn_ = std::uniform_int_distribution<int>(params_.gap_min, params_.gap_max)(rng_);
    ++arrivals_;
  } else if (name == "scaleFactor") {
    machines_ = scaled_machines(machines_, number_arg(action, 0), params_.max_machines);
  } else if (name == "consumeWorkLoad") {
    workload_ = std::max(0.0, workload_ - machines_ * params_.machine_capacity);
    arrival_turn_ = std::max(0, arrival_turn_ - 1);
  } else {
    throw InvalidAction("network scaler cannot " + to_string(action));
  }
}

bool NetworkScalerEnv::is_sensing(const std::string&, const std::string& action) const {
  return action == "checkWorkLoad";
}

// Cleaning robots.

namespace {

void sweep_row(std::vector<Tile>& path, int row, int from, int to) {
  int step = from <= to ? 1 : -1;
  for (int c = from; c != to + step; c += step) path.emplace_back(row, c);
}

std::vector<Tile> top_path() {
  std::vector<Tile> p;
  const int last = CleaningRobotsEnv::kSize - 1;
  for (int r = 0; r <= 5; ++r) r % 2 == 0 ? sweep_row(p, r, 0, last) : sweep_row(p, r, last, 0);
  sweep_row(p, 6, 0, 7);
  sweep_row(p, 6, 8, last);
  sweep_row(p, 7, last, 0);
  for (int r = 8; r <= last; ++r) r % 2 == 0 ? sweep_row(p, r, 0, last) : sweep_row(p, r, last, 0);
  return p;
}

std::vector<Tile> bottom_path() {
  std::vector<Tile> p;
  const int last = CleaningRobotsEnv::kSize - 1;
  for (int r = last; r >= 9; --r) r % 2 == 1 ? sweep_row(p, r, last, 0) : sweep_row(p, r, 0, last);
  sweep_row(p, 8, 0, 7);
  sweep_row(p, 8, 8, last);
  sweep_row(p, 7, last, 0);
  for (int r = 6; r >= 0; --r) r % 2 == 0 ? sweep_row(p, r, 0, last) : sweep_row(p, r, last, 0);
  return p;
}

}  // namespace

CleaningRobotsEnv::CleaningRobotsEnv(RobotParams params, std::uint64_t seed) : params_(params) { reset(seed); }

void CleaningRobotsEnv::reset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dirt(0.0, 100.0);
  for (auto& row : dirt_) {
    for (double& d : row) d = dirt(rng);
  }
  robots_.clear();
  robots_["r1"] = Robot{top_path(), {6, 7}};
  robots_["r3"] = Robot{bottom_path(), {8, 7}};
}

const CleaningRobotsEnv::Robot& CleaningRobotsEnv::robot(const std::string& name) const {
  auto it = robots_.find(name);
  if (it == robots_.end()) throw std::out_of_range("no robot named " + name);
  return it->second;
}

CleaningRobotsEnv::Robot& CleaningRobotsEnv::mutable_robot(const std::string& name) {
  auto it = robots_.find(name);
  if (it == robots_.end()) throw InvalidAction(name + " is not a cleaning robot");
  return it->second;
}

Tile CleaningRobotsEnv::position(const std::string& name) const {
  const Robot& r = robot(name);
  return r.path[std::max(r.index, 0)];
}

double CleaningRobotsEnv::total_dirt() const {
  double sum = 0;
  for (const auto& row : dirt_) {
    for (double d : row) sum += d;
  }
  return sum;
}

bool CleaningRobotsEnv::bag_full(const std::string& name) const { return robot(name).bag >= params_.bag_full; }

bool CleaningRobotsEnv::depleted(const std::string& name) const {
  return robot(name).battery <= params_.battery_depleted;
}

Percept CleaningRobotsEnv::perceive(const std::string& agent) {
  Percept p;
  auto it = robots_.find(agent);
  if (it == robots_.end()) return p;
  const Robot& r = it->second;
  Tile at = position(agent);
  Term self = Term::atom(agent);
  p.readings = {{"batteryPower", r.battery}, {"vacuumBag", r.bag}, {"dirtIntensity", dirt_[at.first][at.second]}};
  p.facts = {Term::compound("pos", {self, Term::num(at.first), Term::num(at.second)}),
             Term::compound("vacuumBagFull", {self, Term::atom(bag_full(agent) ? "full" : "empty")}),
             Term::compound("batteryCharge", {self, Term::atom(depleted(agent) ? "depleted" : "full")})};
  if (r.index == static_cast<int>(r.path.size()) - 1) p.facts.push_back(Term::compound("atEnd", {self}));
  return p;
}

void CleaningRobotsEnv::act(const std::string& agent, const Term& action) {
  const std::string& name = action_name(action);
  Robot& r = mutable_robot(agent);
  if (name == "next") {
    if (r.index + 1 >= static_cast<int>(r.path.size())) throw ActionFailure(agent + " has no tile left");
    ++r.index;
    r.battery = std::max(0.0, r.battery - params_.move_cost);
  } else if (name == "burnGarb") {
    double power = std::clamp(number_arg(action, 0), 0.0, 100.0);
    Tile at = position(agent);
    double& d = dirt_[at.first][at.second];
    double cleaned = d * power / 100.0;
    d -= cleaned;
    r.bag = std::min(100.0, r.bag + cleaned * params_.bag_rate);
    r.battery = std::max(0.0, r.battery - power / 100.0 * params_.burn_cost);
  } else {
    throw InvalidAction("cleaning robot cannot " + to_string(action));
  }
}

bool CleaningRobotsEnv::is_sensing(const std::string&, const std::string& action) const {
  return action == "checkStatus";
}

// Production line.

ProductionLineEnv::ProductionLineEnv(LineParams params, std::uint64_t seed) : params_(params) {
  if (params_.products < 1) throw std::invalid_argument("product stream must not be empty");
  reset(seed);
}

void ProductionLineEnv::reset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> channel(0.0, 255.0);
  products_.assign(params_.products, Product{});
  for (Product& p : products_) p.rgb = {channel(rng), channel(rng), channel(rng)};
  current_ = -1;
  labelled_ = pushed_ = built_ = press_count_ = 0;
  push_queue_.clear();
  build_queue_.clear();
  press_log_.clear();
}

Percept ProductionLineEnv::perceive(const std::string& agent) {
  Percept p;
  if (agent != "sortAgent") return p;
  if (current_ + 1 < static_cast<int>(products_.size())) ++current_;
  const auto& rgb = products_[std::max(current_, 0)].rgb;
  p.readings = {{"red", rgb[0]}, {"green", rgb[1]}, {"blue", rgb[2]}};
  return p;
}

void ProductionLineEnv::act(const std::string& agent, const Term& action) {
  const std::string& name = action_name(action);
  if (name == "saveResult" && agent == "sortAgent") {
    if (action.arity() != 1 || !action.arg(0).is_str()) throw InvalidAction("saveResult expects a label string");
    if (current_ < 0) throw ActionFailure("no product sampled");
    Product& p = products_[current_];
    if (!p.label.empty()) return;
    p.label = action.arg(0).name();
    ++labelled_;
    p.route = p.label == "Red" ? Route::Build : Route::Push;
    ++p.routed;
    (p.route == Route::Build ? build_queue_ : push_queue_).push_back(current_);
  } else if (name == "pushProduct" && agent == "pushAgent") {
    if (push_queue_.empty()) throw ActionFailure("nothing to push");
    push_queue_.erase(push_queue_.begin());
    ++pushed_;
  } else if (name == "pressOnce" && agent == "buildAgent") {
    if (press_count_ != 0 || build_queue_.empty()) throw ActionFailure("press is not ready for a first product");
    press_count_ = 1;
    press_log_.push_back(name);
  } else if (name == "pressTwice" && agent == "buildAgent") {
    if (press_count_ != 1 || build_queue_.size() < 2) throw ActionFailure("press needs two products");
    press_count_ = 2;
    press_log_.push_back(name);
  } else if (name == "ejectProduct" && agent == "buildAgent") {
    if (press_count_ != 2) throw ActionFailure("nothing pressed to eject");
    build_queue_.erase(build_queue_.begin(), build_queue_.begin() + 2);
    built_ += 2;
    press_count_ = 0;
    press_log_.push_back(name);
  } else {
    throw InvalidAction(agent + " cannot " + to_string(action));
  }
}

bool ProductionLineEnv::is_sensing(const std::string& agent, const std::string& action) const {
  return agent == "sortAgent" && action == "sampleColor";
}

}  // namespace fbdi
