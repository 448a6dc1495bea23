#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzybdi/program.hpp"
#include "fuzzybdi/ruleset.hpp"
#include "fuzzybdi/runtime.hpp"

namespace fbdi {

class StyleUnsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How the rule plans are called. Normal is one selection among all rows;
/// the others chain rows through subgoals whose contexts are forced true.
enum class ChainStyle { Normal, FullyNested, FlatFirst, NestedFirst };

const char* to_string(ChainStyle s);
/// Accepts normal, nested (or fully-nested), flat-first, nested-first.
ChainStyle parse_chain_style(const std::string& s);

/// Scenario-specific scaffolding around the generated rule plans.
struct Glue {
  /// Goal the rule plans respond to.
  std::string trigger;
  /// Source placed before the rule plans. `[fuzzy]` is kept only in tight mode.
  std::string scaffold;
  /// Source placed after the rule plans.
  std::string tail;
  /// Fallback plans for Boolean and loose modes when no row applies.
  std::string fallback;
  /// Extra arguments after the threshold, e.g. the robot id of burnGarb.
  std::vector<Term> extra_args;
  /// Steps after the decision action.
  std::vector<BodyStep> after;
  /// Optional routing steps per row.
  std::function<std::vector<BodyStep>(const RuleRow&)> route;
};

struct GeneratedProgram {
  Program program;
  /// Table row of each plan, -1 for scaffolding.
  std::vector<int> plan_rows;
  std::string trigger;

  std::size_t rule_plans() const;
  int row_of(std::size_t plan_index) const { return plan_rows.at(plan_index); }
};

/// One plan per table row in the given mode. FuzzyTight rows carry `[fuzzy]`;
/// FuzzyLoose adds one `isitV` argmax rule per variable and passes explicit
/// degrees via `nameFuzzy(threshold, ..., mu(D1,..,Dn))`.
GeneratedProgram generate_program(const RuleTable& table, Mode mode, const Glue& glue);

/// Repeats every rule plan k times in place.
GeneratedProgram multiply_rules(const GeneratedProgram& g, int k);

/// Rewrites the rule plans into a chain of subgoals whose contexts are
/// disjoined with `true`; the flat part is conjoined with `false` so it never
/// fires. Links keep the decision steps and drop routing.
GeneratedProgram make_recursive_chain(const GeneratedProgram& g, ChainStyle style);

std::string loose_rule_source(const std::string& variable);

Glue scaler_glue();
Glue robot_glue(const std::string& self, const std::string& partner, const std::string& coordinator, int id,
                int meet_row, int meet_col);
Glue sorter_glue();
std::string push_source();
std::string build_source();

}  // namespace fbdi
