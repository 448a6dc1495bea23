#include "fuzzybdi/agent.hpp"

#include <algorithm>

namespace fbdi {

void BeliefBase::add(Term t, Source s) {
  if (contains(t)) return;
  terms_.push_back(std::move(t));
  sources_.push_back(s);
}

void BeliefBase::replace_percepts(std::vector<Term> facts) {
  std::size_t keep = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (sources_[i] == Source::Percept) continue;
    if (keep != i) {
      terms_[keep] = std::move(terms_[i]);
      sources_[keep] = sources_[i];
    }
    ++keep;
  }
  terms_.resize(keep);
  sources_.resize(keep);
  for (Term& f : facts) {
    terms_.push_back(std::move(f));
    sources_.push_back(Source::Percept);
  }
}

std::size_t BeliefBase::remove_like(const Term& t) {
  std::size_t keep = 0;
  std::size_t removed = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].arity() == t.arity() && terms_[i].functor() == t.functor()) {
      ++removed;
      continue;
    }
    if (keep != i) {
      terms_[keep] = std::move(terms_[i]);
      sources_[keep] = sources_[i];
    }
    ++keep;
  }
  terms_.resize(keep);
  sources_.resize(keep);
  return removed;
}

bool BeliefBase::contains(const Term& t) const { return std::find(terms_.begin(), terms_.end(), t) != terms_.end(); }

void BeliefBase::clear() {
  terms_.clear();
  sources_.clear();
}

Term scale_first_numeric(const Term& action, double degree) {
  if (!action.is_compound()) return action;
  std::vector<Term> args = action.args();
  for (Term& a : args) {
    if (a.is_num()) {
      a = Term::num(scale_action(a.number(), degree));
      return Term::compound(action.functor(), std::move(args));
    }
  }
  return action;
}

Term expand_loose_action(const Term& action) {
  static const std::string kSuffix = "Fuzzy";
  const std::string& f = action.functor();
  if (action.arity() < 2 || f.size() <= kSuffix.size() ||
      f.compare(f.size() - kSuffix.size(), kSuffix.size(), kSuffix) != 0) {
    return action;
  }
  const Term& last = action.arg(action.arity() - 1);
  double degree;
  if (last.is_num()) {
    degree = last.number();
  } else if (last.is_compound() && last.functor() == "mu") {
    degree = 1.0;
    for (const Term& d : last.args()) {
      if (!d.is_num()) throw ActionFailure("unbound membership degree in " + to_string(action));
      degree = std::min(degree, d.number());
    }
  } else {
    throw ActionFailure("missing membership degree in " + to_string(action));
  }
  std::vector<Term> args(action.args().begin(), action.args().end() - 1);
  Term base = Term::compound(f.substr(0, f.size() - kSuffix.size()), std::move(args));
  return scale_first_numeric(base, degree);
}

Agent::Agent(std::string name, Program program, Environment& env, AgentOptions options)
    : name_(std::move(name)), program_(std::move(program)), env_(env), options_(std::move(options)) {
  for (const auto& v : options_.variables) v.validate();
  reset();
}

void Agent::reset() {
  beliefs_.clear();
  for (const Term& b : program_.beliefs) beliefs_.add(b, BeliefBase::Source::Program);
  events_.clear();
  for (const Term& g : program_.goals) events_.push_back({g, false, "self"});
  suspended_.clear();
  mailbox_.clear();
}

void Agent::deliver_mail() {
  for (Message& m : mailbox_) {
    if (m.performative == Performative::Tell) {
      beliefs_.add(std::move(m.content), BeliefBase::Source::Message);
    } else {
      events_.push_back({std::move(m.content), false, m.sender});
    }
  }
  mailbox_.clear();
}

void Agent::perceive() {
  Percept p = env_.perceive(name_);
  std::vector<Term> facts;
  for (const LinguisticVariable& v : options_.variables) {
    const Reading* r = nullptr;
    for (const Reading& candidate : p.readings) {
      if (candidate.variable == v.name) {
        r = &candidate;
        break;
      }
    }
    if (!r) throw MissingPercept(name_ + " received no reading for " + v.name);
    if (options_.mode == Mode::Boolean) {
      FuzzySlice slice = fuzzify(v, r->value);
      facts.push_back(Term::compound(v.name, {Term::atom(dominant_label(slice).label)}));
    } else {
      for (const auto& [label, mf] : v.labels) {
        facts.push_back(Term::compound(v.name, {Term::atom(label), Term::num(mf(r->value))}));
      }
    }
  }
  for (Term& f : p.facts) facts.push_back(std::move(f));
  beliefs_.replace_percepts(std::move(facts));
}

bool Agent::is_fuzzy_variable(const std::string& functor) const {
  for (const auto& v : options_.variables) {
    if (v.name == functor) return true;
  }
  return false;
}

std::optional<double> Agent::degree_of(const Term& literal) const {
  if (literal.arity() != 1 || !is_fuzzy_variable(literal.functor())) return std::nullopt;
  const Term& label = literal.arg(0);
  if (!label.is_atom()) return std::nullopt;
  for (const Term& b : beliefs_.terms()) {
    if (b.arity() == 2 && b.functor() == literal.functor() && b.arg(0) == label && b.arg(1).is_num()) {
      return b.arg(1).number();
    }
  }
  return std::nullopt;
}

namespace {

const std::vector<double>& profile_key(const std::vector<double>& profile) {
  static const std::vector<double> kCrisp{1.0};
  return profile.empty() ? kCrisp : profile;
}

/// Max-min order with leximin refinement: compares the sorted degree vectors.
bool better(const std::vector<double>& a, const std::vector<double>& b) {
  const auto& ka = profile_key(a);
  const auto& kb = profile_key(b);
  return std::lexicographical_compare(kb.begin(), kb.end(), ka.begin(), ka.end());
}

}  // namespace

std::optional<Candidate> Agent::best_solution(std::size_t plan_index, const Substitution& s) const {
  Solver solver(beliefs_.terms(), program_.rules, options_.solve);
  solver.set_degree_lookup([this](const Term& literal) { return degree_of(literal); });
  std::optional<Candidate> best;
  solver.solve(program_.plans[plan_index].context, s, [&](const Substitution& out, std::span<const double> degrees) {
    std::vector<double> profile(degrees.begin(), degrees.end());
    std::sort(profile.begin(), profile.end());
    if (!best || better(profile, best->profile)) {
      best = Candidate{plan_index, out, profile.empty() ? 1.0 : profile.front(), std::move(profile)};
    }
    return true;
  });
  return best;
}

std::vector<Candidate> Agent::applicable_plans(const Term& trigger) const {
  std::vector<Candidate> out;
  const bool tight = options_.mode == Mode::FuzzyTight;
  for (std::size_t i = 0; i < program_.plans.size(); ++i) {
    const Plan& p = program_.plans[i];
    if (p.trigger.arity() != trigger.arity() || p.trigger.functor() != trigger.functor()) continue;
    Substitution s;
    if (!unify_into(p.trigger, trigger, s)) continue;
    if (tight && p.trigger_fuzzy) {
      if (auto c = best_solution(i, s)) out.push_back(std::move(*c));
      continue;
    }
    Solver solver(beliefs_.terms(), program_.rules, options_.solve);
    if (auto sol = solver.solve_first(p.context, s)) out.push_back(Candidate{i, std::move(*sol), 1.0, {}});
  }
  return out;
}

std::optional<std::size_t> Agent::select_plan(const std::vector<Candidate>& candidates) const {
  if (candidates.empty()) return std::nullopt;
  if (options_.mode != Mode::FuzzyTight) return 0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (better(candidates[i].profile, candidates[best].profile)) best = i;
  }
  return best;
}

bool Agent::intend(Intention& it, const Term& trigger, CycleState& cs) {
  std::vector<Candidate> candidates = applicable_plans(trigger);
  auto chosen = select_plan(candidates);
  if (!chosen) {
    ++cs.report->dropped;
    cs.report->failures.push_back("no applicable plan for +!" + to_string(trigger));
    return false;
  }
  Candidate& c = candidates[*chosen];
  cs.report->selections.push_back(c.plan_index);
  it.push_back(Frame{c.plan_index, 0, std::move(c.subst), c.degree});
  return true;
}

Term Agent::prepare_action(const Term& action, bool fuzzy, double degree) const {
  if (fuzzy && options_.mode == Mode::FuzzyTight) return expand_loose_action(scale_first_numeric(action, degree));
  return expand_loose_action(action);
}

namespace {

bool is_arith_operator(const Term& t) {
  if (t.is_num()) return true;
  if (!t.is_compound()) return false;
  const std::string& f = t.functor();
  return (t.arity() == 2 && (f == "+" || f == "-" || f == "*" || f == "/")) || (t.arity() == 1 && f == "-");
}

}  // namespace

Agent::Outcome Agent::run(Intention& it, CycleState& cs) {
  while (!it.empty()) {
    Frame& f = it.back();
    const Plan& plan = program_.plans[f.plan_index];
    if (f.pc >= plan.body.size()) {
      it.pop_back();
      continue;
    }
    const BodyStep& step = plan.body[f.pc];
    try {
      switch (step.kind) {
        case BodyStep::Kind::Action: {
          Term t = f.subst.apply(step.term);
          if (!t.is_atom() && !t.is_compound()) throw ActionFailure("not an action: " + to_string(t));
          if (env_.is_sensing(name_, t.functor())) {
            if (!cs.percept_fresh) return Outcome::Suspended;
            cs.percept_fresh = false;
            ++f.pc;
            break;
          }
          Term out = prepare_action(t, step.fuzzy, f.degree);
          ++f.pc;
          env_.act(name_, out);
          cs.report->actions.push_back(std::move(out));
          cs.report->last_act_end = now_ns();
          cs.percept_fresh = false;
          break;
        }
        case BodyStep::Kind::Subgoal: {
          Term goal = f.subst.apply(step.term);
          ++f.pc;
          if (f.pc >= plan.body.size()) it.pop_back();
          if (!intend(it, goal, cs)) return Outcome::Failed;
          break;
        }
        case BodyStep::Kind::TestGoal: {
          Solver solver(beliefs_.terms(), program_.rules, options_.solve);
          auto sol = solver.solve_first(Formula::literal(step.term), f.subst);
          if (!sol) throw TestGoalFailure("test goal failed: ?" + to_string(f.subst.apply(step.term)));
          f.subst = std::move(*sol);
          ++f.pc;
          break;
        }
        case BodyStep::Kind::BeliefReplace: {
          Term b = f.subst.apply(step.term);
          beliefs_.remove_like(b);
          beliefs_.add(std::move(b), BeliefBase::Source::Self);
          ++f.pc;
          break;
        }
        case BodyStep::Kind::Assign: {
          Term rhs = f.subst.apply(step.aux);
          Term value = is_arith_operator(rhs) ? Term::num(eval_arith(rhs)) : rhs;
          if (!unify_into(step.term, value, f.subst)) {
            throw TestGoalFailure("assignment failed: " + to_string(step.term) + " = " + to_string(value));
          }
          ++f.pc;
          break;
        }
        case BodyStep::Kind::InternalSend: {
          Term to = f.subst.apply(step.aux);
          if (!to.is_atom()) throw UnknownReceiver("receiver is not an agent name: " + to_string(to));
          if (!router_) throw UnknownReceiver("no route to " + to.name());
          router_->route(Message{name_, to.name(), step.performative, f.subst.apply(step.term)});
          ++f.pc;
          break;
        }
      }
    } catch (const ActionFailure& e) {
      cs.report->failures.push_back(e.what());
      return Outcome::Failed;
    } catch (const TestGoalFailure& e) {
      cs.report->failures.push_back(e.what());
      return Outcome::Failed;
    }
  }
  return Outcome::Completed;
}

CycleReport Agent::cycle() {
  CycleReport report;
  deliver_mail();
  if (events_.empty() && suspended_.empty()) return report;
  report.idle = false;
  report.sense_start = now_ns();
  perceive();
  report.perceived = true;
  CycleState cs{&report, true};
  Intention it;
  if (!suspended_.empty()) {
    it = std::move(suspended_.front());
    suspended_.pop_front();
  } else {
    Event ev = std::move(events_.front());
    events_.pop_front();
    report.event = ev.trigger;
    if (!intend(it, ev.trigger, cs)) return report;
  }
  if (run(it, cs) == Outcome::Suspended) suspended_.push_back(std::move(it));
  return report;
}

}  // namespace fbdi
