#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzybdi/fuzzy.hpp"
#include "fuzzybdi/program.hpp"
#include "fuzzybdi/runtime.hpp"
#include "fuzzybdi/solver.hpp"

namespace fbdi {

/// Ordered belief store. Percept-sourced beliefs are replaced wholesale on
/// every perceive; beliefs from the program, messages or `-+` persist.
class BeliefBase {
 public:
  enum class Source { Program, Percept, Message, Self };

  /// Ignores exact duplicates.
  void add(Term t, Source s);
  void replace_percepts(std::vector<Term> facts);
  /// Removes every belief with the given functor and arity.
  std::size_t remove_like(const Term& t);
  bool contains(const Term& t) const;
  void clear();

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
  std::vector<Source> sources_;
};

struct Event {
  Term trigger;
  bool fuzzy = false;
  /// "self" for initial goals, otherwise the sending agent.
  std::string source = "self";
};

struct Candidate {
  std::size_t plan_index = 0;
  Substitution subst;
  /// Context membership degree (1 for crisp plans and non-tight modes).
  double degree = 1.0;
  /// Sorted (ascending) degrees of the fuzzy literals in the chosen proof.
  std::vector<double> profile;
};

struct AgentOptions {
  Mode mode = Mode::Boolean;
  /// Variables this agent fuzzifies on perceive.
  std::vector<LinguisticVariable> variables;
  SolveOptions solve;
};

/// AgentSpeak interpreter with run-to-completion reasoning cycles.
class Agent : public Controller {
 public:
  Agent(std::string name, Program program, Environment& env, AgentOptions options = {});

  const std::string& name() const override { return name_; }
  void receive(Message m) override { mailbox_.push_back(std::move(m)); }
  CycleReport cycle() override;
  bool idle() const override { return events_.empty() && suspended_.empty() && mailbox_.empty(); }
  void reset() override;
  void set_router(MessageRouter* router) override { router_ = router; }

  Mode mode() const { return options_.mode; }
  const Program& program() const { return program_; }
  const BeliefBase& beliefs() const { return beliefs_; }
  const std::deque<Event>& events() const { return events_; }
  std::size_t suspended() const { return suspended_.size(); }

  /// Refreshes percept beliefs from the environment.
  void perceive();
  /// Plans relevant to `trigger` whose context holds, in textual order.
  std::vector<Candidate> applicable_plans(const Term& trigger) const;
  /// Index into `candidates` of the plan to intend; nullopt when empty.
  std::optional<std::size_t> select_plan(const std::vector<Candidate>& candidates) const;
  void post(Event e) { events_.push_back(std::move(e)); }
  void add_belief(Term t) { beliefs_.add(std::move(t), BeliefBase::Source::Self); }

 private:
  struct Frame {
    std::size_t plan_index;
    std::size_t pc = 0;
    Substitution subst;
    double degree = 1.0;
  };
  using Intention = std::vector<Frame>;

  enum class Outcome { Completed, Suspended, Failed };

  struct CycleState {
    CycleReport* report;
    bool percept_fresh = true;
  };

  void deliver_mail();
  bool intend(Intention& it, const Term& trigger, CycleState& cs);
  Outcome run(Intention& it, CycleState& cs);
  Term prepare_action(const Term& action, bool fuzzy, double degree) const;
  std::optional<Candidate> best_solution(std::size_t plan_index, const Substitution& s) const;
  std::optional<double> degree_of(const Term& literal) const;
  bool is_fuzzy_variable(const std::string& functor) const;

  std::string name_;
  Program program_;
  Environment& env_;
  AgentOptions options_;
  MessageRouter* router_ = nullptr;

  BeliefBase beliefs_;
  std::deque<Event> events_;
  std::deque<Intention> suspended_;
  std::vector<Message> mailbox_;
};

/// Rewrites the first numeric argument of `action` to threshold * degree.
Term scale_first_numeric(const Term& action, double degree);

/// Loose-coupling action convention: `nameFuzzy(args..., D)` or
/// `nameFuzzy(args..., mu(D1,..,Dn))` becomes `name(args...)` with the first
/// numeric argument multiplied by D (or min Di). Other actions pass through.
Term expand_loose_action(const Term& action);

}  // namespace fbdi
