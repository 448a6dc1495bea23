#include "fuzzybdi/generator.hpp"

#include "fuzzybdi/parser.hpp"

namespace fbdi {

const char* to_string(ChainStyle s) {
  switch (s) {
    case ChainStyle::Normal:
      return "normal";
    case ChainStyle::FullyNested:
      return "nested";
    case ChainStyle::FlatFirst:
      return "flat-first";
    case ChainStyle::NestedFirst:
      return "nested-first";
  }
  return "?";
}

ChainStyle parse_chain_style(const std::string& s) {
  if (s == "normal") return ChainStyle::Normal;
  if (s == "nested" || s == "fully-nested") return ChainStyle::FullyNested;
  if (s == "flat-first") return ChainStyle::FlatFirst;
  if (s == "nested-first") return ChainStyle::NestedFirst;
  throw StyleUnsupported("unknown call style " + s);
}

std::size_t GeneratedProgram::rule_plans() const {
  std::size_t n = 0;
  for (int r : plan_rows) n += r >= 0;
  return n;
}

namespace {

std::string strip_fuzzy(std::string src) {
  static const std::string kTag = "[fuzzy]";
  for (auto pos = src.find(kTag); pos != std::string::npos; pos = src.find(kTag, pos)) src.erase(pos, kTag.size());
  return src;
}

void append(GeneratedProgram& g, const std::string& source, bool tight) {
  if (source.empty()) return;
  Program p = parse_program(tight ? source : strip_fuzzy(source));
  for (Term& b : p.beliefs) g.program.beliefs.push_back(std::move(b));
  for (BeliefRule& r : p.rules) g.program.rules.push_back(std::move(r));
  for (Term& t : p.goals) g.program.goals.push_back(std::move(t));
  for (Plan& plan : p.plans) {
    g.program.plans.push_back(std::move(plan));
    g.plan_rows.push_back(-1);
  }
}

Plan row_plan(const RuleRow& row, Mode mode, const Glue& glue) {
  Plan plan;
  plan.trigger = Term::atom(glue.trigger);
  plan.trigger_fuzzy = mode == Mode::FuzzyTight;
  std::vector<Formula> lits;
  for (const auto& [var, label] : row.antecedent) {
    std::string functor = mode == Mode::FuzzyLoose ? "isit" + var : var;
    lits.push_back(Formula::literal(Term::compound(functor, {Term::atom(label)})));
  }
  plan.context = lits.front();
  for (std::size_t i = 1; i < lits.size(); ++i) plan.context = Formula::conj(plan.context, lits[i]);

  const Consequent& c = row.consequent;
  if (c.numeric()) {
    std::vector<Term> args{Term::num(*c.value)};
    args.insert(args.end(), glue.extra_args.begin(), glue.extra_args.end());
    if (mode == Mode::FuzzyLoose) {
      std::vector<Term> degrees;
      for (std::size_t i = 0; i < row.antecedent.size(); ++i) {
        Term d = Term::var("D" + std::to_string(i + 1));
        const auto& [var, label] = row.antecedent[i];
        plan.body.push_back(BodyStep::test_goal(Term::compound(var, {Term::atom(label), d})));
        degrees.push_back(d);
      }
      args.push_back(Term::compound("mu", std::move(degrees)));
      plan.body.push_back(BodyStep::action(Term::compound(c.action + "Fuzzy", std::move(args))));
    } else {
      plan.body.push_back(BodyStep::action(Term::compound(c.action, std::move(args)), mode == Mode::FuzzyTight));
    }
  } else {
    plan.body.push_back(BodyStep::action(Term::compound(c.action, {Term::str(c.label)})));
  }
  plan.body.insert(plan.body.end(), glue.after.begin(), glue.after.end());
  if (glue.route) {
    auto steps = glue.route(row);
    plan.body.insert(plan.body.end(), steps.begin(), steps.end());
  }
  return plan;
}

}  // namespace

std::string loose_rule_source(const std::string& v) {
  return "isit" + v + "(Is) :- " + v + "(Is,S1) & not(" + v + "(_,S2) & S2>S1).";
}

GeneratedProgram generate_program(const RuleTable& table, Mode mode, const Glue& glue) {
  GeneratedProgram g;
  g.trigger = glue.trigger;
  const bool tight = mode == Mode::FuzzyTight;
  if (mode == Mode::FuzzyLoose) {
    for (const auto& v : table.variables) g.program.rules.push_back(parse_program(loose_rule_source(v)).rules.at(0));
  }
  append(g, glue.scaffold, tight);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    g.program.plans.push_back(row_plan(table.rows[r], mode, glue));
    g.plan_rows.push_back(static_cast<int>(r));
  }
  if (!tight) append(g, glue.fallback, false);
  append(g, glue.tail, tight);
  return g;
}

GeneratedProgram multiply_rules(const GeneratedProgram& g, int k) {
  if (k < 1) throw std::invalid_argument("multiplier must be at least 1");
  GeneratedProgram out;
  out.trigger = g.trigger;
  out.program.beliefs = g.program.beliefs;
  out.program.rules = g.program.rules;
  out.program.goals = g.program.goals;
  for (std::size_t i = 0; i < g.program.plans.size(); ++i) {
    int copies = g.plan_rows[i] >= 0 ? k : 1;
    for (int c = 0; c < copies; ++c) {
      out.program.plans.push_back(g.program.plans[i]);
      out.plan_rows.push_back(g.plan_rows[i]);
    }
  }
  return out;
}

GeneratedProgram make_recursive_chain(const GeneratedProgram& g, ChainStyle style) {
  if (style == ChainStyle::Normal) return g;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < g.plan_rows.size(); ++i) {
    if (g.plan_rows[i] >= 0) rows.push_back(i);
  }
  if (rows.empty()) throw StyleUnsupported("program has no rule plans to chain");
  const std::size_t n = rows.size();
  const bool fuzzy = g.program.plans[rows.front()].trigger_fuzzy;
  auto link_name = [&](std::size_t i) { return Term::atom(g.trigger + std::to_string(i + 1)); };
  const Term flat_name = Term::atom(g.trigger + "Flat");

  auto decision_steps = [&](const Plan& p) {
    std::vector<BodyStep> steps;
    for (const BodyStep& s : p.body) {
      if (s.kind != BodyStep::Kind::Subgoal && s.kind != BodyStep::Kind::InternalSend) steps.push_back(s);
    }
    return steps;
  };

  std::vector<Plan> chain;
  std::vector<int> chain_rows;
  auto add = [&](Plan p, int row) {
    chain.push_back(std::move(p));
    chain_rows.push_back(row);
  };
  auto link = [&](std::size_t i, std::optional<Term> next) {
    const Plan& orig = g.program.plans[rows[i]];
    Plan p{link_name(i), fuzzy, Formula::disj(orig.context, Formula::truth()), decision_steps(orig)};
    if (next) p.body.push_back(BodyStep::subgoal(*next, fuzzy));
    add(std::move(p), g.plan_rows[rows[i]]);
  };
  auto flat = [&](std::size_t i, const Term& trigger) {
    const Plan& orig = g.program.plans[rows[i]];
    add(Plan{trigger, fuzzy, Formula::conj(orig.context, Formula::literal(Term::atom("false"))), decision_steps(orig)},
        g.plan_rows[rows[i]]);
  };
  auto entry = [&](const Term& trigger, std::optional<Term> next) {
    Plan p{trigger, fuzzy, Formula::truth(), {}};
    if (next) p.body.push_back(BodyStep::subgoal(*next, fuzzy));
    add(std::move(p), -1);
  };
  const Term trigger = Term::atom(g.trigger);

  switch (style) {
    case ChainStyle::FullyNested:
      entry(trigger, link_name(0));
      for (std::size_t i = 0; i < n; ++i) link(i, i + 1 < n ? std::optional<Term>(link_name(i + 1)) : std::nullopt);
      break;
    case ChainStyle::NestedFirst: {
      const std::size_t h = (n + 1) / 2;
      entry(trigger, link_name(0));
      for (std::size_t i = 0; i < h; ++i) link(i, i + 1 < h ? link_name(i + 1) : flat_name);
      for (std::size_t i = h; i < n; ++i) flat(i, flat_name);
      entry(flat_name, std::nullopt);
      break;
    }
    case ChainStyle::FlatFirst: {
      const std::size_t f = n / 2;
      for (std::size_t i = 0; i < f; ++i) flat(i, trigger);
      entry(trigger, link_name(f));
      for (std::size_t i = f; i < n; ++i) link(i, i + 1 < n ? std::optional<Term>(link_name(i + 1)) : std::nullopt);
      break;
    }
    case ChainStyle::Normal:
      break;
  }

  GeneratedProgram out;
  out.trigger = g.trigger;
  out.program.beliefs = g.program.beliefs;
  out.program.rules = g.program.rules;
  out.program.goals = g.program.goals;
  bool placed = false;
  for (std::size_t i = 0; i < g.program.plans.size(); ++i) {
    const Plan& p = g.program.plans[i];
    bool decision = p.trigger.is_atom() && p.trigger.name() == g.trigger;
    if (!decision) {
      out.program.plans.push_back(p);
      out.plan_rows.push_back(g.plan_rows[i]);
      continue;
    }
    if (placed) continue;
    placed = true;
    for (std::size_t c = 0; c < chain.size(); ++c) {
      out.program.plans.push_back(chain[c]);
      out.plan_rows.push_back(chain_rows[c]);
    }
  }
  return out;
}

Glue scaler_glue() {
  Glue g;
  g.trigger = "scale";
  g.scaffold =
      "!start.\n"
      "+!start : (currentWorkLoad(CWL) & CWL==0) | (arrivedTurn(AVV) & AVV==0) <- "
      "getWorkLoad; checkWorkLoad; !scale[fuzzy]; !start.\n"
      "+!start : currentWorkLoad(CWL) & CWL\\==0 <- checkWorkLoad; !scale[fuzzy]; !start.\n";
  g.after = {BodyStep::action(Term::atom("consumeWorkLoad"))};
  return g;
}

Glue robot_glue(const std::string& r, const std::string& p, const std::string& c, int id, int mr, int mc) {
  const std::string pos = "pos(" + r + "," + std::to_string(mr) + "," + std::to_string(mc) + ")";
  const std::string cont = ".send(" + p + ",tell,continue(" + p + ",true))";
  auto count = [&](int n) { return ".send(" + c + ",tell,moveCount(" + r + "," + std::to_string(n) + "))"; };
  Glue g;
  g.trigger = "arrangeVacuumPower";
  g.scaffold = "!check(slots).\n"
               "+!check(slots) : ((not " + pos + ") | continue(" + r + ",true)) & vacuumBagFull(" + r +
               ",M) & M==empty & batteryCharge(" + r + ",BR) & BR==full & not atEnd(" + r +
               ") <- next(slot); checkStatus; !arrangeVacuumPower[fuzzy]; !check(slots).\n"
               "+!check(slots) : " + pos + " & ((vacuumBagFull(" + r + ",ML) & ML==full) | (batteryCharge(" + r +
               ",BR) & BR==depleted)) <- " + cont + "; " + count(2) + ".\n"
               "+!check(slots) : " + pos + " & ((vacuumBagFull(" + r + ",MM) & MM==empty) | (batteryCharge(" + r +
               ",BR) & BR==full)) <- " + cont + "; " + count(1) + "; !wait.\n"
               "+!check(slots) : (vacuumBagFull(" + r + ",MK) & MK==full) | (batteryCharge(" + r +
               ",BR) & BR==depleted) <- " + cont + "; " + count(2) + ".\n"
               "+!check(slots) : atEnd(" + r + ") <- " + cont + "; " + count(2) + ".\n"
               "+!wait : continue(" + r + ",true) <- !check(slots).\n"
               "+!wait : true <- checkStatus; !wait.\n";
  g.extra_args = {Term::num(id)};
  return g;
}

Glue sorter_glue() {
  Glue g;
  g.trigger = "decidecolorF";
  g.scaffold =
      "!samplecolor.\n"
      "+!samplecolor : true <- sampleColor; !decidecolorF[fuzzy]; !samplecolor.\n";
  g.fallback = "+!decidecolorF : true <- saveResult(\"Unknown\"); !toPush.\n";
  g.tail =
      "+!toPush : true <- .send(pushAgent,achieve,push).\n"
      "+!toBuild : true <- .send(buildAgent,achieve,build).\n";
  g.route = [](const RuleRow& row) {
    return std::vector<BodyStep>{
        BodyStep::subgoal(Term::atom(row.consequent.label == "Red" ? "toBuild" : "toPush"))};
  };
  return g;
}

std::string push_source() { return "+!push : true <- pushProduct.\n"; }

std::string build_source() {
  return "buildStatus(0).\n"
         "+!build : true <- -+buildFree(false); ?buildStatus(M); K = M+1; -+buildStatus(K); !state.\n"
         "+!state : buildStatus(1) <- pressOnce.\n"
         "+!state : buildStatus(2) <- pressTwice; !eject.\n"
         "+!eject : true <- -+buildStatus(0); ejectProduct.\n";
}

}  // namespace fbdi
