#include "fuzzybdi/program.hpp"

#include <sstream>

namespace fbdi {

const char* to_string(Performative p) { return p == Performative::Tell ? "tell" : "achieve"; }

std::string to_string(const BodyStep& step) {
  std::ostringstream os;
  switch (step.kind) {
    case BodyStep::Kind::Action:
      os << step.term;
      break;
    case BodyStep::Kind::Subgoal:
      os << '!' << step.term;
      break;
    case BodyStep::Kind::TestGoal:
      os << '?' << step.term;
      break;
    case BodyStep::Kind::BeliefReplace:
      os << "-+" << step.term;
      break;
    case BodyStep::Kind::Assign:
      os << step.term << " = " << step.aux;
      break;
    case BodyStep::Kind::InternalSend:
      os << ".send(" << step.aux << ',' << to_string(step.performative) << ',' << step.term << ')';
      break;
  }
  if (step.fuzzy) os << "[fuzzy]";
  return os.str();
}

std::string to_string(const Plan& plan) {
  std::ostringstream os;
  os << "+!" << plan.trigger;
  if (plan.trigger_fuzzy) os << "[fuzzy]";
  os << " : " << plan.context;
  if (!plan.body.empty()) {
    os << " <- ";
    for (std::size_t i = 0; i < plan.body.size(); ++i) {
      if (i) os << "; ";
      os << to_string(plan.body[i]);
    }
  }
  os << '.';
  return os.str();
}

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  for (const Term& b : p.beliefs) os << b << ".\n";
  for (const BeliefRule& r : p.rules) os << r.head << " :- " << r.body << ".\n";
  for (const Term& g : p.goals) os << '!' << g << ".\n";
  for (const Plan& plan : p.plans) os << to_string(plan) << '\n';
  return os.str();
}

std::size_t count_fuzzy_annotations(const Program& p) {
  std::size_t n = 0;
  for (const Plan& plan : p.plans) {
    if (plan.trigger_fuzzy) ++n;
    for (const BodyStep& s : plan.body) {
      if (s.fuzzy) ++n;
    }
  }
  return n;
}

}  // namespace fbdi
