#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzybdi/formula.hpp"
#include "fuzzybdi/term.hpp"

namespace fbdi {

enum class Performative { Tell, Achieve };

const char* to_string(Performative p);

/// One instruction of a plan body.
struct BodyStep {
  enum class Kind { Action, Subgoal, TestGoal, BeliefReplace, Assign, InternalSend };

  Kind kind = Kind::Action;
  /// Action / goal / belief term; the assigned variable for Assign; the
  /// message content for InternalSend.
  Term term;
  /// Assign: right-hand side. InternalSend: receiver.
  Term aux;
  bool fuzzy = false;
  Performative performative = Performative::Tell;

  static BodyStep action(Term t, bool fuzzy = false) { return {Kind::Action, std::move(t), {}, fuzzy, {}}; }
  static BodyStep subgoal(Term t, bool fuzzy = false) { return {Kind::Subgoal, std::move(t), {}, fuzzy, {}}; }
  static BodyStep test_goal(Term t) { return {Kind::TestGoal, std::move(t), {}, false, {}}; }
  static BodyStep belief_replace(Term t) { return {Kind::BeliefReplace, std::move(t), {}, false, {}}; }
  static BodyStep assign(Term var, Term expr) { return {Kind::Assign, std::move(var), std::move(expr), false, {}}; }
  static BodyStep send(Term receiver, Performative p, Term content) {
    return {Kind::InternalSend, std::move(content), std::move(receiver), false, p};
  }

  friend bool operator==(const BodyStep& a, const BodyStep& b) {
    return a.kind == b.kind && a.term == b.term && a.aux == b.aux && a.fuzzy == b.fuzzy &&
           a.performative == b.performative;
  }
};

/// `+!trigger[fuzzy] : context <- body.`
struct Plan {
  Term trigger;
  bool trigger_fuzzy = false;
  Formula context;
  std::vector<BodyStep> body;

  friend bool operator==(const Plan& a, const Plan& b) {
    return a.trigger == b.trigger && a.trigger_fuzzy == b.trigger_fuzzy && a.context == b.context &&
           a.body == b.body;
  }
};

struct Program {
  std::vector<Term> beliefs;
  std::vector<BeliefRule> rules;
  std::vector<Term> goals;
  std::vector<Plan> plans;

  friend bool operator==(const Program& a, const Program& b) {
    return a.beliefs == b.beliefs && a.rules == b.rules && a.goals == b.goals && a.plans == b.plans;
  }
};

std::string to_string(const BodyStep& step);
std::string to_string(const Plan& plan);
/// Canonical source text; parse_program(pretty_print(p)) == p.
std::string pretty_print(const Program& p);

/// Number of `[fuzzy]` annotations carried by the program.
std::size_t count_fuzzy_annotations(const Program& p);

}  // namespace fbdi
