#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzybdi/program.hpp"
#include "fuzzybdi/term.hpp"

namespace fbdi {

enum class Mode { Boolean, FuzzyTight, FuzzyLoose };

const char* to_string(Mode m);

class MissingPercept : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by environments that reject an action.
class ActionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAction : public ActionFailure {
 public:
  using ActionFailure::ActionFailure;
};

class TestGoalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownReceiver : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Reading {
  std::string variable;
  double value = 0.0;
};

/// What an agent observes at the start of a cycle.
struct Percept {
  std::vector<Reading> readings;
  std::vector<Term> facts;
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual Percept perceive(const std::string& agent) = 0;
  /// Throws ActionFailure (or InvalidAction) to reject the action.
  virtual void act(const std::string& agent, const Term& action) = 0;
  /// Sensing actions are satisfied by the cycle's perceive step instead of
  /// being forwarded to act().
  virtual bool is_sensing(const std::string& agent, const std::string& action) const = 0;
};

struct Message {
  std::string sender;
  std::string receiver;
  Performative performative = Performative::Tell;
  Term content;
};

class MessageRouter {
 public:
  virtual ~MessageRouter() = default;
  /// Throws UnknownReceiver when the receiver does not exist.
  virtual void route(Message m) = 0;
};

using Nanos = std::int64_t;

Nanos now_ns();

struct CycleReport {
  /// Nothing to do: no event, no suspended intention.
  bool idle = true;
  bool perceived = false;
  std::optional<Term> event;
  /// Program plan indices chosen in this cycle, in selection order.
  std::vector<std::size_t> selections;
  /// Actions as handed to the environment (after degree scaling).
  std::vector<Term> actions;
  Nanos sense_start = 0;
  Nanos last_act_end = 0;
  std::size_t dropped = 0;
  std::vector<std::string> failures;

  bool acted() const { return !actions.empty(); }
  Nanos elapsed() const { return last_act_end - sense_start; }
};

/// Anything the multi-agent system can step: interpreted agents and the
/// hand-written direct engines.
class Controller {
 public:
  virtual ~Controller() = default;

  virtual const std::string& name() const = 0;
  virtual void receive(Message m) = 0;
  virtual CycleReport cycle() = 0;
  /// No pending events, suspended intentions or mail.
  virtual bool idle() const = 0;
  virtual void reset() = 0;
  virtual void set_router(MessageRouter* router) = 0;
};

}  // namespace fbdi
