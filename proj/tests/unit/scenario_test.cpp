#include <gtest/gtest.h>

#include <set>

#include "fuzzybdi/config.hpp"
#include "fuzzybdi/generator.hpp"
#include "fuzzybdi/parser.hpp"
#include "fuzzybdi/ruleset.hpp"
#include "fuzzybdi/scenario.hpp"
#include "test_support.hpp"

using namespace fbdi;

namespace {

std::size_t count_rules_for(const GeneratedProgram& g, const std::string& trigger) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.program.plans.size(); ++i) {
    n += g.plan_rows[i] >= 0 && g.program.plans[i].trigger == Term::atom(trigger);
  }
  return n;
}

void expect_same_variables(const std::vector<LinguisticVariable>& a, const std::vector<LinguisticVariable>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].lo, b[i].lo);
    EXPECT_EQ(a[i].hi, b[i].hi);
    ASSERT_EQ(a[i].labels.size(), b[i].labels.size());
    for (std::size_t j = 0; j < a[i].labels.size(); ++j) {
      EXPECT_EQ(a[i].labels[j].first, b[i].labels[j].first);
      EXPECT_EQ(a[i].labels[j].second.points(), b[i].labels[j].second.points()) << a[i].name;
    }
  }
}

}  // namespace

TEST(Ruleset, RowCountsAndExamples) {
  RuleTable scaler = load_ruleset("network-scaler");
  ASSERT_EQ(scaler.rows.size(), 9u);
  EXPECT_EQ(scaler.rows[0].antecedent, (std::vector<std::pair<std::string, std::string>>{
                                           {"workLoad", "low"}, {"responseTime", "good"}}));
  EXPECT_EQ(scaler.rows[0].consequent, (Consequent{"scaleFactor", -15.0, ""}));

  RuleTable robots = load_ruleset("cleaning-robots");
  ASSERT_EQ(robots.rows.size(), 27u);
  int row = first_matching_row(robots, {"max", "mid", "mid"});
  ASSERT_GE(row, 0);
  EXPECT_EQ(robots.rows[row].consequent.value, 100.0);
  EXPECT_EQ(robots.rows[first_matching_row(robots, {"min", "min", "min"})].consequent.value, 50.0);

  RuleTable line = load_ruleset("production-line");
  ASSERT_EQ(line.rows.size(), 36u);
  int dark = first_matching_row(line, {"low", "high", "low"});
  ASSERT_GE(dark, 0);
  EXPECT_EQ(line.rows[dark].consequent.label, "DarkGreen");
  EXPECT_FALSE(line.rows[dark].consequent.numeric());
  EXPECT_EQ(first_matching_row(line, {"low", "ultrahigh", "high"}), -1);

  EXPECT_THROW(load_ruleset("warehouse"), UnknownScenario);
  EXPECT_EQ(scenario_ids().size(), 3u);
}

TEST(Ruleset, RobotTableCoversEveryLabelTuple) {
  RuleTable t = load_ruleset("cleaning-robots");
  std::set<std::vector<std::string>> seen;
  for (const RuleRow& r : t.rows) {
    std::vector<std::string> labels;
    for (const auto& [v, l] : r.antecedent) labels.push_back(l);
    seen.insert(labels);
  }
  EXPECT_EQ(seen.size(), 27u);
}

TEST(Config, DefaultFileMatchesBuiltInDefaults) {
  ScenarioConfig file = load_config(FBDI_CONFIG_DIR "/default.json");
  ScenarioConfig def = default_config();
  for (const std::string& id : scenario_ids()) expect_same_variables(file.variables_for(id), def.variables_for(id));
  EXPECT_EQ(file.scaler.max_machines, def.scaler.max_machines);
  EXPECT_EQ(file.robots.burn_cost, def.robots.burn_cost);
  EXPECT_EQ(file.line.products, def.line.products);
  EXPECT_EQ(file.matrix.ks, def.matrix.ks);
  EXPECT_EQ(file.matrix.modes, def.matrix.modes);
}

TEST(Config, OverridesAndErrors) {
  ScenarioConfig c = parse_config(R"({"scenarios": {"cleaning-robots": {"params": {"bag_rate": 0.02}}},
                                      "matrix": {"cycles": 7, "k": [1]}})");
  EXPECT_EQ(c.robots.bag_rate, 0.02);
  EXPECT_EQ(c.robots.move_cost, 0.5);
  EXPECT_EQ(c.matrix.cycles, 7);
  EXPECT_EQ(c.matrix.ks, std::vector<int>{1});
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"matrix": {"cycles": 0}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"scenarios": {"x": {"variables": [{"name": "v", "universe": [0, 1],
      "labels": [{"label": "a", "points": [1, 0, 2]}, {"label": "b", "points": [0, 1, 1]}]}]}}})"),
               ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
  EXPECT_THROW(default_config().variables_for("warehouse"), ConfigError);
}

TEST(Generator, LooseScalerHasArgmaxRulesAndDegreeTests) {
  GeneratedProgram g = scenario_program("network-scaler", Mode::FuzzyLoose);
  ASSERT_EQ(g.program.rules.size(), 2u);
  EXPECT_EQ(g.program.rules[0], parse_program(loose_rule_source("workLoad")).rules[0]);
  EXPECT_EQ(g.rule_plans(), 9u);
  EXPECT_EQ(count_rules_for(g, "scale"), 9u);
  EXPECT_EQ(count_fuzzy_annotations(g.program), 0u);
  const Plan& first = g.program.plans[2];
  EXPECT_EQ(first.context, parse_formula("isitworkLoad(low) & isitresponseTime(good)"));
  ASSERT_EQ(first.body.size(), 4u);
  EXPECT_EQ(first.body[0], BodyStep::test_goal(parse_term("workLoad(low,D1)")));
  EXPECT_EQ(first.body[2], BodyStep::action(parse_term("scaleFactorFuzzy(-15,mu(D1,D2))")));
  EXPECT_EQ(first.body[3], BodyStep::action(Term::atom("consumeWorkLoad")));
}

TEST(Generator, TightScalerMatchesPlanPerRowShape) {
  GeneratedProgram g = scenario_program("network-scaler", Mode::FuzzyTight);
  EXPECT_TRUE(g.program.rules.empty());
  ASSERT_EQ(g.program.plans.size(), 11u);
  const Plan& first = g.program.plans[2];
  EXPECT_TRUE(first.trigger_fuzzy);
  EXPECT_EQ(first.context, parse_formula("workLoad(low) & responseTime(good)"));
  EXPECT_EQ(first.body[0], BodyStep::action(parse_term("scaleFactor(-15)"), true));
  EXPECT_EQ(g.program.plans[0].body[2], BodyStep::subgoal(Term::atom("scale"), true));
  // Boolean strips every annotation from the same scaffold.
  EXPECT_EQ(count_fuzzy_annotations(scenario_program("network-scaler", Mode::Boolean).program), 0u);
}

TEST(Generator, BooleanSorterRoutesRedToBuild) {
  GeneratedProgram g = scenario_program("production-line", Mode::Boolean);
  EXPECT_EQ(count_rules_for(g, "decidecolorF"), 36u);
  RuleTable t = load_ruleset("production-line");
  for (std::size_t i = 0; i < g.program.plans.size(); ++i) {
    if (g.plan_rows[i] < 0) continue;
    const Plan& p = g.program.plans[i];
    const std::string& label = t.rows[g.plan_rows[i]].consequent.label;
    EXPECT_EQ(p.body.front(), BodyStep::action(Term::compound("saveResult", {Term::str(label)})));
    EXPECT_EQ(p.body.back(), BodyStep::subgoal(Term::atom(label == "Red" ? "toBuild" : "toPush")));
  }
  bool has_build_route = false;
  for (const Plan& p : g.program.plans) {
    if (p.trigger == Term::atom("toBuild")) {
      has_build_route = true;
      EXPECT_EQ(p.body[0], BodyStep::send(Term::atom("buildAgent"), Performative::Achieve, Term::atom("build")));
    }
  }
  EXPECT_TRUE(has_build_route);
  // Uncovered label tuples fall through to an explicit plan outside tight mode.
  EXPECT_EQ(g.program.plans.size(), 1u + 36u + 1u + 2u);
  EXPECT_EQ(scenario_program("production-line", Mode::FuzzyTight).program.plans.size(), 1u + 36u + 2u);
}

TEST(Generator, MultiplyKeepsOrderAndRoundTrips) {
  GeneratedProgram base = scenario_program("network-scaler", Mode::FuzzyTight);
  GeneratedProgram times10 = multiply_rules(base, 10);
  EXPECT_EQ(times10.rule_plans(), 90u);
  EXPECT_EQ(times10.program.plans.size(), 92u);
  for (int i = 0; i < 90; ++i) EXPECT_EQ(times10.plan_rows[2 + i], i / 10);
  Program again = parse_program(pretty_print(times10.program));
  EXPECT_EQ(again, times10.program);
  EXPECT_EQ(multiply_rules(base, 1).program, base.program);
  EXPECT_EQ(scenario_program("production-line", Mode::Boolean, 10).rule_plans(), 360u);
  EXPECT_EQ(scenario_program("cleaning-robots", Mode::Boolean, 10).rule_plans(), 270u);
  EXPECT_THROW(multiply_rules(base, 0), std::invalid_argument);
}

TEST(Generator, ChainShapes) {
  GeneratedProgram nested = scenario_program("production-line", Mode::FuzzyTight, 1, ChainStyle::FullyNested);
  EXPECT_EQ(nested.rule_plans(), 36u);
  std::size_t links = 0;
  for (std::size_t i = 0; i < nested.program.plans.size(); ++i) {
    const Plan& p = nested.program.plans[i];
    if (nested.plan_rows[i] < 0) continue;
    ++links;
    EXPECT_EQ(p.trigger, Term::atom("decidecolorF" + std::to_string(links)));
    EXPECT_EQ(p.context.kind(), Formula::Kind::Or);
    bool last = links == 36;
    EXPECT_EQ(p.body.back().kind == BodyStep::Kind::Subgoal, !last);
  }
  Program again = parse_program(pretty_print(nested.program));
  EXPECT_EQ(again, nested.program);

  GeneratedProgram nf = scenario_program("production-line", Mode::Boolean, 1, ChainStyle::NestedFirst);
  std::size_t flat = 0;
  for (std::size_t i = 0; i < nf.program.plans.size(); ++i) {
    flat += nf.plan_rows[i] >= 0 && nf.program.plans[i].trigger == Term::atom("decidecolorFFlat");
  }
  EXPECT_EQ(flat, 18u);
  EXPECT_EQ(parse_chain_style("flat-first"), ChainStyle::FlatFirst);
  EXPECT_EQ(parse_chain_style("fully-nested"), ChainStyle::FullyNested);
  EXPECT_THROW(parse_chain_style("zigzag"), StyleUnsupported);
  GeneratedProgram empty;
  empty.trigger = "x";
  EXPECT_THROW(make_recursive_chain(empty, ChainStyle::FullyNested), StyleUnsupported);
}

TEST(Generator, RobotProgramsAreSymmetric) {
  Glue r1 = robot_glue("r1", "r3", "r2", 1, 6, 7);
  Glue r3 = robot_glue("r3", "r1", "r2", 3, 8, 7);
  Program p1 = parse_program(r1.scaffold);
  Program p3 = parse_program(r3.scaffold);
  ASSERT_EQ(p1.plans.size(), 7u);
  ASSERT_EQ(p3.plans.size(), 7u);
  EXPECT_EQ(to_string(r1.extra_args[0]), "1");
  GeneratedProgram g = generate_program(load_ruleset("cleaning-robots"), Mode::FuzzyTight, r3);
  EXPECT_EQ(g.program.plans[7].body[0], BodyStep::action(parse_term("burnGarb(50,3)"), true));
}
