#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzybdi/environments.hpp"
#include "fuzzybdi/fuzzy.hpp"
#include "fuzzybdi/generator.hpp"
#include "fuzzybdi/ruleset.hpp"
#include "fuzzybdi/runtime.hpp"

namespace fbdi {

/// Ordered-row evaluator over dominant labels, with no interpreter underneath.
class RuleEvaluator {
 public:
  RuleEvaluator(RuleTable table, std::vector<LinguisticVariable> variables, int k = 1,
                ChainStyle style = ChainStyle::Normal);

  /// Rows fired for the readings, in firing order. Normal style fires at
  /// most the first matching row; chain styles mirror make_recursive_chain.
  std::vector<int> decide(const std::vector<Reading>& readings) const;
  /// Dominant label of each variable, in table column order.
  std::vector<std::string> labels(const std::vector<Reading>& readings) const;

  const RuleTable& table() const { return table_; }
  ChainStyle style() const { return style_; }
  /// Antecedents that matched so far; keeps the never-firing checks observable.
  std::size_t matches() const { return matches_; }

 private:
  bool matches(std::size_t row, const std::vector<std::string>& labels) const;

  RuleTable table_;
  std::vector<LinguisticVariable> variables_;
  int k_;
  ChainStyle style_;
  mutable std::size_t matches_ = 0;
};

/// Shared mailbox and routing for the hand-written controllers.
class DirectController : public Controller {
 public:
  DirectController(std::string name, Environment& env) : name_(std::move(name)), env_(env) {}

  const std::string& name() const override { return name_; }
  void receive(Message m) override { mailbox_.push_back(std::move(m)); }
  void set_router(MessageRouter* router) override { router_ = router; }
  void reset() override { mailbox_.clear(); }

 protected:
  Percept sense(CycleReport& report);
  void act(CycleReport& report, Term action);
  void send(const std::string& receiver, Performative p, Term content);
  std::vector<Message> take_mail();

  std::string name_;
  Environment& env_;
  MessageRouter* router_ = nullptr;
  std::vector<Message> mailbox_;
};

class DirectScaler : public DirectController {
 public:
  DirectScaler(std::string name, Environment& env, RuleEvaluator rules);
  CycleReport cycle() override;
  bool idle() const override { return false; }
  void reset() override;

 private:
  RuleEvaluator rules_;
  bool started_ = false;
};

class DirectRobot : public DirectController {
 public:
  DirectRobot(std::string name, std::string partner, std::string coordinator, int id, Tile meeting,
              Environment& env, RuleEvaluator rules);
  CycleReport cycle() override;
  bool idle() const override { return done_ && mailbox_.empty(); }
  void reset() override;

 private:
  /// Movement decision on the percept of the cycle; returns true to keep going.
  bool check(const Percept& p, CycleReport& report);

  std::string partner_;
  std::string coordinator_;
  int id_;
  Tile meeting_;
  RuleEvaluator rules_;
  bool started_ = false;
  bool waiting_ = false;
  bool done_ = false;
  bool continue_ = false;
};

class DirectSorter : public DirectController {
 public:
  DirectSorter(std::string name, Environment& env, RuleEvaluator rules);
  CycleReport cycle() override;
  bool idle() const override { return false; }

 private:
  RuleEvaluator rules_;
};

class DirectPusher : public DirectController {
 public:
  using DirectController::DirectController;
  CycleReport cycle() override;
  bool idle() const override { return pending_ == 0 && mailbox_.empty(); }
  void reset() override;

 private:
  int pending_ = 0;
};

class DirectBuilder : public DirectController {
 public:
  using DirectController::DirectController;
  CycleReport cycle() override;
  bool idle() const override { return pending_ == 0 && mailbox_.empty(); }
  void reset() override;

 private:
  int pending_ = 0;
  int status_ = 0;
};

}  // namespace fbdi
