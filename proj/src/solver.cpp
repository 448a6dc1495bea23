#include "fuzzybdi/solver.hpp"

namespace fbdi {

Solver::Solver(std::span<const Term> beliefs, std::span<const BeliefRule> rules, SolveOptions options)
    : beliefs_(beliefs), rules_(rules), options_(options) {}

bool Solver::solve(const Formula& f, const Substitution& s, const Callback& cb) const {
  degrees_.clear();
  return solve_goal(f, s, 0, [&](const Substitution& out) { return cb(out, std::span<const double>(degrees_)); });
}

std::vector<Substitution> Solver::solve_all(const Formula& f, const Substitution& s) const {
  std::vector<Substitution> out;
  solve(f, s, [&](const Substitution& r, std::span<const double>) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::optional<Substitution> Solver::solve_first(const Formula& f, const Substitution& s) const {
  std::optional<Substitution> out;
  solve(f, s, [&](const Substitution& r, std::span<const double>) {
    out = r;
    return false;
  });
  return out;
}

bool Solver::solve_goal(const Formula& f, const Substitution& s, int depth, const Cont& k) const {
  switch (f.kind()) {
    case Formula::Kind::True:
      return k(s);
    case Formula::Kind::Literal:
      return solve_literal(f.term(), s, depth, k);
    case Formula::Kind::Relational:
      return relational(f, s) ? k(s) : true;
    case Formula::Kind::Not: {
      std::size_t mark = degrees_.size();
      bool found = false;
      solve_goal(f.child(), s, depth, [&](const Substitution&) {
        found = true;
        return false;
      });
      degrees_.resize(mark);
      return found ? true : k(s);
    }
    case Formula::Kind::And:
      return solve_goal(f.left(), s, depth,
                        [&](const Substitution& s1) { return solve_goal(f.right(), s1, depth, k); });
    case Formula::Kind::Or:
      if (!solve_goal(f.left(), s, depth, k)) return false;
      return solve_goal(f.right(), s, depth, k);
  }
  return true;
}

bool Solver::solve_literal(const Term& raw, const Substitution& s, int depth, const Cont& k) const {
  const Term& goal = s.walk(raw);
  if (goal.is_atom()) {
    if (goal.name() == "true") return k(s);
    if (goal.name() == "false") return true;
  }
  if (goal.is_var()) throw NonGroundError("unbound variable used as a literal: " + goal.name());

  if (lookup_ && goal.arity() == 1) {
    if (auto degree = lookup_(s.apply(goal))) {
      degrees_.push_back(*degree);
      bool go_on = k(s);
      degrees_.pop_back();
      return go_on;
    }
  }

  const std::string& functor = goal.functor();
  const std::size_t arity = goal.arity();
  for (const Term& belief : beliefs_) {
    if (belief.arity() != arity || belief.functor() != functor) continue;
    Substitution next = s;
    if (!unify_into(goal, belief, next)) continue;
    if (!k(next)) return false;
  }

  for (const BeliefRule& rule : rules_) {
    if (rule.head.arity() != arity || rule.head.functor() != functor) continue;
    if (depth + 1 > options_.max_depth) {
      throw DepthExceeded("rule recursion deeper than " + std::to_string(options_.max_depth) + " while solving " +
                          to_string(s.apply(goal)));
    }
    std::string suffix = "#" + std::to_string(++rename_counter_);
    Term head = rename(rule.head, suffix);
    Substitution next = s;
    if (!unify_into(goal, head, next)) continue;
    Formula body = rename(rule.body, suffix);
    if (!solve_goal(body, next, depth + 1, k)) return false;
  }
  return true;
}

namespace {

bool same_value(const Term& a, const Term& b) {
  if (is_arith_expr(a) && is_arith_expr(b)) return eval_arith(a) == eval_arith(b);
  return a == b;
}

}  // namespace

bool Solver::relational(const Formula& f, const Substitution& s) const {
  Term lhs = s.apply(f.lhs());
  Term rhs = s.apply(f.rhs());
  if (!lhs.is_ground() || !rhs.is_ground()) {
    throw NonGroundComparison("non-ground operand in " + to_string(lhs) + " " + to_string(f.op()) + " " +
                              to_string(rhs));
  }
  switch (f.op()) {
    case RelOp::Eq:
      return same_value(lhs, rhs);
    case RelOp::Neq:
      return !same_value(lhs, rhs);
    default:
      break;
  }
  double l = eval_arith(lhs);
  double r = eval_arith(rhs);
  switch (f.op()) {
    case RelOp::Gt:
      return l > r;
    case RelOp::Lt:
      return l < r;
    case RelOp::Ge:
      return l >= r;
    case RelOp::Le:
      return l <= r;
    default:
      return false;
  }
}

Term Solver::rename(const Term& t, const std::string& suffix) const {
  if (t.is_var()) return t.is_anonymous() ? t : Term::var(t.name() + suffix);
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(rename(a, suffix));
  return Term::compound(t.functor(), std::move(args));
}

Formula Solver::rename(const Formula& f, const std::string& suffix) const {
  switch (f.kind()) {
    case Formula::Kind::True:
      return f;
    case Formula::Kind::Literal:
      return Formula::literal(rename(f.term(), suffix));
    case Formula::Kind::Relational:
      return Formula::relational(f.op(), rename(f.lhs(), suffix), rename(f.rhs(), suffix));
    case Formula::Kind::Not:
      return Formula::negation(rename(f.child(), suffix));
    case Formula::Kind::And:
      return Formula::conj(rename(f.left(), suffix), rename(f.right(), suffix));
    case Formula::Kind::Or:
      return Formula::disj(rename(f.left(), suffix), rename(f.right(), suffix));
  }
  return f;
}

std::vector<Substitution> solve(const Formula& f, std::span<const Term> beliefs, std::span<const BeliefRule> rules,
                                const Substitution& s, SolveOptions options) {
  return Solver(beliefs, rules, options).solve_all(f, s);
}

}  // namespace fbdi
