#include "fuzzybdi/direct.hpp"

#include <stdexcept>

namespace fbdi {

RuleEvaluator::RuleEvaluator(RuleTable table, std::vector<LinguisticVariable> variables, int k, ChainStyle style)
    : table_(std::move(table)), variables_(std::move(variables)), k_(k), style_(style) {
  if (k_ < 1) throw std::invalid_argument("multiplier must be at least 1");
  if (table_.rows.empty() && style_ != ChainStyle::Normal) throw StyleUnsupported("no rows to chain");
  for (const std::string& name : table_.variables) {
    bool found = false;
    for (const auto& v : variables_) found = found || v.name == name;
    if (!found) throw std::invalid_argument("no linguistic variable for " + name);
  }
}

std::vector<std::string> RuleEvaluator::labels(const std::vector<Reading>& readings) const {
  std::vector<std::string> out;
  out.reserve(table_.variables.size());
  for (const std::string& name : table_.variables) {
    const LinguisticVariable* var = nullptr;
    for (const auto& v : variables_) {
      if (v.name == name) var = &v;
    }
    const Reading* r = nullptr;
    for (const auto& candidate : readings) {
      if (candidate.variable == name) r = &candidate;
    }
    if (!r) throw MissingPercept("no reading for " + name);
    out.push_back(dominant_label(fuzzify(*var, r->value)).label);
  }
  return out;
}

bool RuleEvaluator::matches(std::size_t row, const std::vector<std::string>& labels) const {
  const auto& ante = table_.rows[row].antecedent;
  for (std::size_t i = 0; i < ante.size(); ++i) {
    if (ante[i].second != labels[i]) return false;
  }
  ++matches_;
  return true;
}

std::vector<int> RuleEvaluator::decide(const std::vector<Reading>& readings) const {
  std::vector<std::string> l = labels(readings);
  std::vector<int> fired;
  const std::size_t n = table_.rows.size() * k_;
  auto row_at = [&](std::size_t i) { return i / k_; };
  auto chain = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      matches(row_at(i), l);
      fired.push_back(static_cast<int>(row_at(i)));
    }
  };
  auto flat = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) matches(row_at(i), l);
  };
  switch (style_) {
    case ChainStyle::Normal:
      for (std::size_t i = 0; i < n; ++i) {
        if (matches(row_at(i), l)) {
          fired.push_back(static_cast<int>(row_at(i)));
          break;
        }
      }
      break;
    case ChainStyle::FullyNested:
      chain(0, n);
      break;
    case ChainStyle::NestedFirst:
      chain(0, (n + 1) / 2);
      flat((n + 1) / 2, n);
      break;
    case ChainStyle::FlatFirst:
      flat(0, n / 2);
      chain(n / 2, n);
      break;
  }
  return fired;
}

Percept DirectController::sense(CycleReport& report) {
  report.idle = false;
  report.sense_start = now_ns();
  Percept p = env_.perceive(name_);
  report.perceived = true;
  return p;
}

void DirectController::act(CycleReport& report, Term action) {
  try {
    env_.act(name_, action);
  } catch (const ActionFailure& e) {
    report.failures.push_back(e.what());
    return;
  }
  report.actions.push_back(std::move(action));
  report.last_act_end = now_ns();
}

void DirectController::send(const std::string& receiver, Performative p, Term content) {
  if (!router_) throw UnknownReceiver(name_ + " has no router for " + receiver);
  router_->route(Message{name_, receiver, p, std::move(content)});
}

std::vector<Message> DirectController::take_mail() {
  std::vector<Message> mail;
  mail.swap(mailbox_);
  return mail;
}

namespace {

std::optional<double> fact_number(const Percept& p, const std::string& functor, std::size_t arg = 0) {
  for (const Term& f : p.facts) {
    if (f.is_compound() && f.functor() == functor && f.arity() > arg && f.arg(arg).is_num()) {
      return f.arg(arg).number();
    }
  }
  return std::nullopt;
}

bool has_fact(const Percept& p, const Term& fact) {
  for (const Term& f : p.facts) {
    if (f == fact) return true;
  }
  return false;
}

Term with_value(const Consequent& c, std::vector<Term> extra = {}) {
  if (!c.numeric()) return Term::compound(c.action, {Term::str(c.label)});
  std::vector<Term> args{Term::num(*c.value)};
  args.insert(args.end(), extra.begin(), extra.end());
  return Term::compound(c.action, std::move(args));
}

}  // namespace

DirectScaler::DirectScaler(std::string name, Environment& env, RuleEvaluator rules)
    : DirectController(std::move(name), env), rules_(std::move(rules)) {}

void DirectScaler::reset() {
  DirectController::reset();
  started_ = false;
}

CycleReport DirectScaler::cycle() {
  CycleReport report;
  take_mail();
  Percept p = sense(report);
  if (started_) {
    for (int row : rules_.decide(p.readings)) {
      report.selections.push_back(row);
      act(report, with_value(rules_.table().rows[row].consequent));
      act(report, Term::atom("consumeWorkLoad"));
    }
  }
  started_ = true;
  double workload = fact_number(p, "currentWorkLoad").value_or(0);
  double turn = fact_number(p, "arrivedTurn").value_or(0);
  if (workload == 0 || turn == 0) act(report, Term::atom("getWorkLoad"));
  return report;
}

DirectRobot::DirectRobot(std::string name, std::string partner, std::string coordinator, int id, Tile meeting,
                         Environment& env, RuleEvaluator rules)
    : DirectController(std::move(name), env),
      partner_(std::move(partner)),
      coordinator_(std::move(coordinator)),
      id_(id),
      meeting_(meeting),
      rules_(std::move(rules)) {}

void DirectRobot::reset() {
  DirectController::reset();
  started_ = waiting_ = done_ = continue_ = false;
}

bool DirectRobot::check(const Percept& p, CycleReport& report) {
  const Term self = Term::atom(name_);
  const bool at_meeting =
      has_fact(p, Term::compound("pos", {self, Term::num(meeting_.first), Term::num(meeting_.second)}));
  const bool full = has_fact(p, Term::compound("vacuumBagFull", {self, Term::atom("full")}));
  const bool depleted = has_fact(p, Term::compound("batteryCharge", {self, Term::atom("depleted")}));
  const bool at_end = has_fact(p, Term::compound("atEnd", {self}));
  auto release_partner = [&] {
    send(partner_, Performative::Tell, Term::compound("continue", {Term::atom(partner_), Term::atom("true")}));
  };
  auto count = [&](int n) {
    send(coordinator_, Performative::Tell, Term::compound("moveCount", {self, Term::num(n)}));
  };
  auto move_on = [&] { return (!at_meeting || continue_) && !full && !depleted && !at_end; };

  if (move_on()) {
    act(report, Term::compound("next", {Term::atom("slot")}));
    return true;
  }
  if (at_meeting && (full || depleted)) {
    release_partner();
    count(2);
  } else if (at_meeting) {
    release_partner();
    count(1);
    waiting_ = true;
    return true;
  } else if (full || depleted || at_end) {
    release_partner();
    count(2);
  }
  done_ = true;
  return false;
}

CycleReport DirectRobot::cycle() {
  CycleReport report;
  for (Message& m : take_mail()) {
    if (m.performative == Performative::Tell && m.content ==
        Term::compound("continue", {Term::atom(name_), Term::atom("true")})) {
      continue_ = true;
    }
  }
  if (done_) return report;
  Percept p = sense(report);
  if (waiting_) {
    if (continue_) {
      waiting_ = false;
      act(report, Term::compound("next", {Term::atom("slot")}));
    }
    return report;
  }
  if (started_) {
    for (int row : rules_.decide(p.readings)) {
      report.selections.push_back(row);
      act(report, with_value(rules_.table().rows[row].consequent, {Term::num(id_)}));
    }
  }
  started_ = true;
  check(p, report);
  return report;
}

DirectSorter::DirectSorter(std::string name, Environment& env, RuleEvaluator rules)
    : DirectController(std::move(name), env), rules_(std::move(rules)) {}

CycleReport DirectSorter::cycle() {
  CycleReport report;
  take_mail();
  Percept p = sense(report);
  std::vector<int> fired = rules_.decide(p.readings);
  if (rules_.style() != ChainStyle::Normal) {
    for (int row : fired) {
      report.selections.push_back(row);
      act(report, with_value(rules_.table().rows[row].consequent));
    }
    return report;
  }
  std::string label = "Unknown";
  if (!fired.empty()) {
    report.selections.push_back(fired.front());
    label = rules_.table().rows[fired.front()].consequent.label;
  }
  act(report, Term::compound("saveResult", {Term::str(label)}));
  if (label == "Red") {
    send("buildAgent", Performative::Achieve, Term::atom("build"));
  } else {
    send("pushAgent", Performative::Achieve, Term::atom("push"));
  }
  return report;
}

void DirectPusher::reset() {
  DirectController::reset();
  pending_ = 0;
}

CycleReport DirectPusher::cycle() {
  CycleReport report;
  for (Message& m : take_mail()) pending_ += m.performative == Performative::Achieve;
  if (pending_ == 0) return report;
  sense(report);
  --pending_;
  act(report, Term::atom("pushProduct"));
  return report;
}

void DirectBuilder::reset() {
  DirectController::reset();
  pending_ = status_ = 0;
}

CycleReport DirectBuilder::cycle() {
  CycleReport report;
  for (Message& m : take_mail()) pending_ += m.performative == Performative::Achieve;
  if (pending_ == 0) return report;
  sense(report);
  --pending_;
  ++status_;
  if (status_ == 1) {
    act(report, Term::atom("pressOnce"));
  } else {
    act(report, Term::atom("pressTwice"));
    status_ = 0;
    act(report, Term::atom("ejectProduct"));
  }
  return report;
}

}  // namespace fbdi
