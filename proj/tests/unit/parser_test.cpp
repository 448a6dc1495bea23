#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "fuzzybdi/parser.hpp"
#include "test_support.hpp"

using namespace fbdi;

namespace {

std::size_t count_token(const std::string& text, const std::string& token) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(token); pos != std::string::npos; pos = text.find(token, pos + 1)) ++n;
  return n;
}

std::size_t count_plan_lines(const std::string& text) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(' ');
    if (first != std::string::npos && line.compare(first, 2, "+!") == 0) ++n;
  }
  return n;
}

}  // namespace

TEST(Parser, TightFanController) {
  Program p = parse_program(testing_support::read_listing("fan_tight.asl"));
  ASSERT_EQ(p.goals.size(), 1u);
  EXPECT_EQ(p.goals[0], Term::atom("sense"));
  ASSERT_EQ(p.plans.size(), 4u);
  EXPECT_FALSE(p.plans[0].trigger_fuzzy);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_TRUE(p.plans[i].trigger_fuzzy);
    ASSERT_EQ(p.plans[i].body.size(), 1u);
    EXPECT_EQ(p.plans[i].body[0].kind, BodyStep::Kind::Action);
    EXPECT_EQ(p.plans[i].body[0].term.functor(), "fanAction");
    EXPECT_TRUE(p.plans[i].body[0].fuzzy);
  }
  EXPECT_EQ(p.plans[1].context, Formula::literal(parse_term("temp(warm)")));
  EXPECT_EQ(p.plans[0].body[1], BodyStep::subgoal(Term::atom("keepCool"), true));
}

TEST(Parser, InitialGoalOnly) {
  Program p = parse_program("!init.");
  ASSERT_EQ(p.goals.size(), 1u);
  EXPECT_EQ(p.goals[0], Term::atom("init"));
  EXPECT_TRUE(p.plans.empty());
  EXPECT_TRUE(p.rules.empty());
  EXPECT_TRUE(p.beliefs.empty());
}

TEST(Parser, ArgmaxRuleStructure) {
  Program p = parse_program("isit(T) :- temp(T,D1) & not(temp(_,D2) & D2>D1).");
  ASSERT_EQ(p.rules.size(), 1u);
  Term T = Term::var("T"), D1 = Term::var("D1"), D2 = Term::var("D2"), any = Term::var("_");
  Formula expected = Formula::conj(
      Formula::literal(Term::compound("temp", {T, D1})),
      Formula::negation(Formula::conj(Formula::literal(Term::compound("temp", {any, D2})),
                                      Formula::relational(RelOp::Gt, D2, D1))));
  EXPECT_EQ(p.rules[0].head, Term::compound("isit", {T}));
  EXPECT_EQ(p.rules[0].body, expected);
}

TEST(Parser, AndBindsTighterThanOr) {
  Formula a = Formula::literal(Term::atom("a"));
  Formula b = Formula::literal(Term::atom("b"));
  Formula c = Formula::literal(Term::atom("c"));
  EXPECT_EQ(parse_formula("a | b & c"), Formula::disj(a, Formula::conj(b, c)));
  EXPECT_EQ(parse_formula("a & b | c"), Formula::disj(Formula::conj(a, b), c));
  EXPECT_EQ(parse_formula("(a | b) & c"), Formula::conj(Formula::disj(a, b), c));
  EXPECT_EQ(parse_formula("not a | b"), Formula::disj(Formula::negation(a), b));
  EXPECT_EQ(parse_formula("not a & b"), Formula::conj(Formula::negation(a), b));
  EXPECT_EQ(parse_formula("true"), Formula::truth());
}

TEST(Parser, BodyStepKinds) {
  Program p = parse_program(
      "+!build : true <- -+buildFree(false); ?buildStatus(M); K = M+1; .send(r2,tell,moveCount(r1,2)); "
      "!state[fuzzy]; act(1)[fuzzy]; PressOnce.");
  ASSERT_EQ(p.plans.size(), 1u);
  const auto& body = p.plans[0].body;
  ASSERT_EQ(body.size(), 7u);
  EXPECT_EQ(body[0], BodyStep::belief_replace(parse_term("buildFree(false)")));
  EXPECT_EQ(body[1], BodyStep::test_goal(parse_term("buildStatus(M)")));
  EXPECT_EQ(body[2], BodyStep::assign(Term::var("K"), parse_term("M+1")));
  EXPECT_EQ(body[3], BodyStep::send(Term::atom("r2"), Performative::Tell, parse_term("moveCount(r1,2)")));
  EXPECT_EQ(body[4], BodyStep::subgoal(Term::atom("state"), true));
  EXPECT_EQ(body[5], BodyStep::action(parse_term("act(1)"), true));
  EXPECT_EQ(body[6], BodyStep::action(Term::var("PressOnce")));
}

TEST(Parser, PlanWithoutContextOrBody) {
  Program p = parse_program("+!a <- b. +!c : d. +!e : true <- true.");
  ASSERT_EQ(p.plans.size(), 3u);
  EXPECT_EQ(p.plans[0].context, Formula::truth());
  EXPECT_TRUE(p.plans[1].body.empty());
  EXPECT_TRUE(p.plans[2].body.empty());
}

TEST(Parser, CommentsAndStrings) {
  Program p = parse_program("// header\nb(\"Light Green\"). /* block\ncomment */ !g. // trailing\n");
  ASSERT_EQ(p.beliefs.size(), 1u);
  EXPECT_EQ(p.beliefs[0].arg(0), Term::str("Light Green"));
  EXPECT_EQ(p.goals.size(), 1u);
}

TEST(Parser, SyntaxErrorPosition) {
  try {
    parse_program("!a.\n+!b : c <- d\n+!e.");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 1);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "'.'"), e.expected().end());
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "';'"), e.expected().end());
  }
  EXPECT_THROW(parse_program("+!a : b &."), SyntaxError);
  EXPECT_THROW(parse_program("+!a[lazy]."), SyntaxError);
  EXPECT_THROW(parse_program("b(\"open"), SyntaxError);
  EXPECT_THROW(parse_program("+!a <- .print(x)."), SyntaxError);
  EXPECT_THROW(parse_formula("X + 1"), SyntaxError);
}

TEST(Parser, VerbatimDefectsAreReported) {
  // A stray '&' opens one context.
  try {
    parse_program(testing_support::read_listing("robots_fuzzy_verbatim.asl"));
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 8);
    EXPECT_EQ(e.column(), 22);
    EXPECT_EQ(e.found(), "'&'");
  }
  // A plan missing its closing period.
  try {
    parse_program(testing_support::read_listing("line_fuzzy_verbatim.asl"));
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 10);
    EXPECT_EQ(e.column(), 1);
    EXPECT_EQ(e.found(), "'+'");
  }
}

class Corpus : public ::testing::TestWithParam<const char*> {};

TEST_P(Corpus, ParsesAndRoundTrips) {
  std::string text = testing_support::read_listing(GetParam());
  Program p = parse_program(text);
  EXPECT_EQ(count_fuzzy_annotations(p), count_token(text, "[fuzzy]"));
  EXPECT_EQ(p.plans.size(), count_plan_lines(text));
  std::string printed = pretty_print(p);
  Program again = parse_program(printed);
  EXPECT_EQ(again, p) << printed;
  EXPECT_EQ(pretty_print(again), printed);
}

INSTANTIATE_TEST_SUITE_P(Listings, Corpus,
                         ::testing::Values("fan_tight.asl", "fan_loose.asl", "fan_boolean.asl", "scaler_isit_rule.asl",
                                           "scaler_fuzzy.asl", "scaler_boolean.asl", "robots_fuzzy.asl",
                                           "robots_boolean.asl", "line_fuzzy.asl", "line_wcet_chain.asl"));

TEST(Parser, OrderPreserved) {
  Program p = parse_program(testing_support::read_listing("scaler_boolean.asl"));
  ASSERT_EQ(p.plans.size(), 11u);
  const double factors[] = {-15, -10, 10, -10, 0, 10, 0, 10, 15};
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(p.plans[i + 2].body[0].term.arg(0), Term::num(factors[i])) << i;
  }
}
