#include <gtest/gtest.h>

#include <set>

#include "fuzzybdi/agent.hpp"
#include "fuzzybdi/mas.hpp"
#include "fuzzybdi/parser.hpp"
#include "test_support.hpp"

using namespace fbdi;

namespace {

LinguisticVariable temp_variable() {
  return {"temp",
          0,
          40,
          {{"cold", MembershipFunction::triangular(0, 0, 20)},
           {"warm", MembershipFunction::triangular(10, 22, 34)},
           {"hot", MembershipFunction::triangular(25, 40, 40)}}};
}

/// Thermometer plus fan; records every action.
class FanEnv : public Environment {
 public:
  explicit FanEnv(double temp) : temp_(temp) {}

  Percept perceive(const std::string&) override { return {{{"temp", temp_}}, {}}; }
  void act(const std::string&, const Term& action) override {
    if (action.functor() != "fanAction") throw InvalidAction("unknown action " + to_string(action));
    actions.push_back(action);
  }
  bool is_sensing(const std::string&, const std::string& name) const override {
    return name == "senseEnv" || name == "sampleSensorData";
  }

  std::vector<Term> actions;

 private:
  double temp_;
};

/// Environment without readings; accepts any action.
class NullEnv : public Environment {
 public:
  Percept perceive(const std::string&) override { return {}; }
  void act(const std::string&, const Term& action) override { actions.push_back(action); }
  bool is_sensing(const std::string&, const std::string&) const override { return false; }

  std::vector<Term> actions;
};

/// The tight fan program with the threshold per label used by the loose and
/// Boolean variants (cold 450, warm 650, hot 750).
const char* kTightFan =
    "!sense.\n"
    "+!sense: true <- senseEnv; !keepCool[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(warm) <- fanAction(650)[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(cold) <- fanAction(450)[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(hot)  <- fanAction(750)[fuzzy].\n";

double fan_value(const std::string& source, Mode mode, double temp) {
  FanEnv env(temp);
  Agent agent("fan", parse_program(source), env, {mode, {temp_variable()}, {}});
  CycleReport r = agent.cycle();
  for (int i = 0; i < 3 && env.actions.empty(); ++i) r = agent.cycle();
  EXPECT_EQ(env.actions.size(), 1u);
  if (env.actions.empty()) return -1;
  return env.actions[0].arg(0).number();
}

}  // namespace

TEST(Perceive, FuzzyModesStoreEveryDegree) {
  FanEnv env(18);
  Agent agent("fan", parse_program("!a."), env, {Mode::FuzzyLoose, {temp_variable()}, {}});
  agent.perceive();
  auto terms = agent.beliefs().terms();
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0].arg(0), Term::atom("cold"));
  EXPECT_NEAR(terms[0].arg(1).number(), 0.1, 1e-12);
  EXPECT_NEAR(terms[1].arg(1).number(), 8.0 / 12.0, 1e-12);
  EXPECT_EQ(terms[2], parse_term("temp(hot,0)"));
  agent.perceive();
  EXPECT_EQ(agent.beliefs().size(), 3u);
}

TEST(Perceive, BooleanStoresDominantLabel) {
  FanEnv env(18);
  Agent agent("fan", parse_program("!a."), env, {Mode::Boolean, {temp_variable()}, {}});
  agent.perceive();
  ASSERT_EQ(agent.beliefs().size(), 1u);
  EXPECT_EQ(agent.beliefs().terms()[0], parse_term("temp(warm)"));
  FanEnv peak(0);
  Agent cold("fan", parse_program("!a."), peak, {Mode::Boolean, {temp_variable()}, {}});
  cold.perceive();
  EXPECT_EQ(cold.beliefs().terms()[0], parse_term("temp(cold)"));
}

TEST(Perceive, MissingReading) {
  NullEnv env;
  Agent agent("fan", parse_program("!a."), env, {Mode::Boolean, {temp_variable()}, {}});
  EXPECT_THROW(agent.perceive(), MissingPercept);
}

TEST(ApplicablePlans, TightDegreesInListingOrder) {
  FanEnv env(18);
  Agent agent("fan", parse_program(testing_support::read_listing("fan_tight.asl")), env,
              {Mode::FuzzyTight, {temp_variable()}, {}});
  agent.perceive();
  auto cands = agent.applicable_plans(Term::atom("keepCool"));
  ASSERT_EQ(cands.size(), 3u);
  EXPECT_EQ(cands[0].plan_index, 1u);
  EXPECT_NEAR(cands[0].degree, 0.667, 1e-3);
  EXPECT_NEAR(cands[1].degree, 0.1, 1e-12);
  EXPECT_EQ(cands[2].degree, 0.0);
  EXPECT_EQ(agent.select_plan(cands), 0u);
  EXPECT_TRUE(agent.applicable_plans(Term::atom("unknown")).empty());
}

TEST(ApplicablePlans, BooleanContextFilters) {
  FanEnv env(0);
  Agent agent("fan", parse_program(testing_support::read_listing("fan_boolean.asl")), env,
              {Mode::Boolean, {temp_variable()}, {}});
  agent.perceive();
  auto cands = agent.applicable_plans(Term::atom("keepCool"));
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(to_string(agent.program().plans[cands[0].plan_index].context), "temp(cold)");
}

TEST(SelectPlan, TightTiesGoToFirstListed) {
  FanEnv env(16);  // cold 0.2, warm 0.5
  Agent agent("fan",
              parse_program("+!g[fuzzy] : temp(hot) | temp(warm) <- a. +!g[fuzzy] : temp(warm) <- b."), env,
              {Mode::FuzzyTight, {temp_variable()}, {}});
  agent.perceive();
  auto cands = agent.applicable_plans(Term::atom("g"));
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0].degree, 0.5);
  EXPECT_EQ(cands[1].degree, 0.5);
  EXPECT_EQ(agent.select_plan(cands), 0u);
}

TEST(SelectPlan, TightConjunctionUsesMinimum) {
  FanEnv env(18);
  Agent agent("fan",
              parse_program("+!g[fuzzy] : temp(warm) & temp(cold) <- a. +!g[fuzzy] : temp(cold) <- b."), env,
              {Mode::FuzzyTight, {temp_variable()}, {}});
  agent.perceive();
  auto cands = agent.applicable_plans(Term::atom("g"));
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_NEAR(cands[0].degree, 0.1, 1e-12);
  // Equal minimum; the leximin refinement prefers the plan whose other
  // literals are stronger.
  EXPECT_EQ(agent.select_plan(cands), 0u);
}

TEST(FanGolden, TightScalesByWarmDegree) {
  EXPECT_NEAR(fan_value(kTightFan, Mode::FuzzyTight, 18), 650.0 * 2.0 / 3.0, 1e-6);
}

TEST(FanGolden, LooseMatchesTight) {
  double loose = fan_value(testing_support::read_listing("fan_loose.asl"), Mode::FuzzyLoose, 18);
  EXPECT_NEAR(loose, 650.0 * 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(loose, fan_value(kTightFan, Mode::FuzzyTight, 18), 1e-9);
}

TEST(FanGolden, BooleanEmitsThreshold) {
  EXPECT_EQ(fan_value(testing_support::read_listing("fan_boolean.asl"), Mode::Boolean, 18), 650.0);
}

TEST(FanGolden, OneActionPerCycle) {
  FanEnv env(38);
  Agent agent("fan", parse_program(testing_support::read_listing("fan_boolean.asl")), env,
              {Mode::Boolean, {temp_variable()}, {}});
  for (int i = 1; i <= 5; ++i) {
    CycleReport r = agent.cycle();
    EXPECT_TRUE(r.perceived);
    ASSERT_EQ(r.actions.size(), 1u);
    EXPECT_EQ(r.actions[0], parse_term("fanAction(750)"));
    EXPECT_GE(r.elapsed(), 0);
  }
  EXPECT_EQ(agent.suspended(), 1u);
}

TEST(Cycle, NoEventsIsIdle) {
  FanEnv env(18);
  Agent agent("fan", parse_program("+!a <- fanAction(1)."), env, {Mode::Boolean, {temp_variable()}, {}});
  CycleReport r = agent.cycle();
  EXPECT_TRUE(r.idle);
  EXPECT_FALSE(r.perceived);
  EXPECT_TRUE(env.actions.empty());
}

TEST(Cycle, NoApplicablePlanIsDropped) {
  NullEnv env;
  Agent agent("a", parse_program("!g. +!g : missing <- act."), env);
  CycleReport r = agent.cycle();
  EXPECT_EQ(r.dropped, 1u);
  EXPECT_EQ(r.failures.size(), 1u);
  EXPECT_TRUE(env.actions.empty());
}

TEST(Cycle, ChainedSubgoalsRunInOneCycle) {
  NullEnv env;
  std::string src = "!decidecolorF1.\n";
  for (int i = 1; i <= 18; ++i) {
    src += "+!decidecolorF" + std::to_string(i) + " : red(high) | true <- saveResult(\"Red\"); !decidecolorF" +
           std::to_string(i + 1) + ".\n";
  }
  src += "+!decidecolorF19 : true <- done.\n";
  Agent agent("sort", parse_program(src), env);
  CycleReport r = agent.cycle();
  EXPECT_EQ(r.selections.size(), 19u);
  EXPECT_EQ(env.actions.size(), 19u);
  EXPECT_EQ(env.actions.back(), Term::atom("done"));
}

TEST(BodySteps, BeliefReplaceAssignAndTest) {
  NullEnv env;
  Agent agent("build",
              parse_program("buildStatus(2). !eject. !bump.\n"
                            "+!eject : true <- -+buildStatus(0); ejectProduct.\n"
                            "+!bump : true <- ?buildStatus(M); K = M+1; -+buildStatus(K); report(K)."),
              env);
  agent.cycle();
  ASSERT_EQ(agent.beliefs().size(), 1u);
  EXPECT_EQ(agent.beliefs().terms()[0], parse_term("buildStatus(0)"));
  agent.cycle();
  EXPECT_EQ(agent.beliefs().terms()[0], parse_term("buildStatus(1)"));
  ASSERT_EQ(env.actions.size(), 2u);
  EXPECT_EQ(env.actions[1], parse_term("report(1)"));
}

TEST(BodySteps, FailedTestGoalDropsIntention) {
  NullEnv env;
  Agent agent("a", parse_program("!g. +!g <- ?missing(X); act(X)."), env);
  CycleReport r = agent.cycle();
  EXPECT_EQ(r.failures.size(), 1u);
  EXPECT_TRUE(env.actions.empty());
  EXPECT_TRUE(agent.idle());
}

TEST(BodySteps, LooseActionConvention) {
  EXPECT_EQ(expand_loose_action(parse_term("fanActionFuzzy(450,0.5)")), parse_term("fanAction(225)"));
  EXPECT_EQ(expand_loose_action(parse_term("burnGarbFuzzy(100,1,mu(0.5,0.25,0.75))")), parse_term("burnGarb(25,1)"));
  EXPECT_EQ(expand_loose_action(parse_term("fanAction(450)")), parse_term("fanAction(450)"));
  EXPECT_THROW(expand_loose_action(parse_term("fanActionFuzzy(450,X)")), ActionFailure);
  EXPECT_EQ(scale_first_numeric(parse_term("burnGarb(r1,100)"), 0.5), parse_term("burnGarb(r1,50)"));
}

TEST(Messaging, TellAddsBeliefNextCycle) {
  NullEnv env;
  MultiAgentSystem mas;
  auto& r1 = mas.add(std::make_unique<Agent>("r1", parse_program("!go. +!go <- .send(r2,tell,moveCount(r1,2))."), env));
  auto& r2 = static_cast<Agent&>(mas.add(std::make_unique<Agent>("r2", Program{}, env)));
  r1.cycle();
  EXPECT_FALSE(r2.idle());
  EXPECT_TRUE(r2.beliefs().terms().empty());
  r2.cycle();
  ASSERT_EQ(r2.beliefs().size(), 1u);
  EXPECT_EQ(r2.beliefs().terms()[0], parse_term("moveCount(r1,2)"));
  EXPECT_TRUE(r2.events().empty());
}

TEST(Messaging, AchievePostsEventAtReceiver) {
  NullEnv env;
  MultiAgentSystem mas;
  mas.add(std::make_unique<Agent>("sort", parse_program("!go. +!go <- .send(push,achieve,push)."), env));
  mas.add(std::make_unique<Agent>("push", parse_program("+!push : true <- pushProduct."), env));
  mas.round();
  mas.round();
  ASSERT_EQ(env.actions.size(), 1u);
  EXPECT_EQ(env.actions[0], Term::atom("pushProduct"));
  auto& sort = static_cast<Agent&>(*mas.find("sort"));
  EXPECT_EQ(sort.beliefs().size(), 0u);
  EXPECT_TRUE(mas.all_idle());
}

TEST(Messaging, UnknownReceiver) {
  NullEnv env;
  MultiAgentSystem mas;
  mas.add(std::make_unique<Agent>("a", parse_program("!go. +!go <- .send(nobody,tell,x)."), env));
  EXPECT_THROW(mas.round(), UnknownReceiver);
  EXPECT_THROW(mas.add(std::make_unique<Agent>("a", Program{}, env)), std::invalid_argument);
}

TEST(Determinism, SameInputsSameTrace) {
  auto trace = [] {
    FanEnv env(27);
    Agent agent("fan", parse_program(kTightFan), env, {Mode::FuzzyTight, {temp_variable()}, {}});
    std::vector<std::string> out;
    for (int i = 0; i < 4; ++i) {
      CycleReport r = agent.cycle();
      for (const auto& a : r.actions) out.push_back(to_string(a));
      for (auto s : r.selections) out.push_back(std::to_string(s));
    }
    return out;
  };
  EXPECT_EQ(trace(), trace());
}
