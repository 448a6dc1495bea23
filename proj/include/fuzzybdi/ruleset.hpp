#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbdi {

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Right-hand side of a rule: a thresholded action such as scaleFactor(-15),
/// or a colour label for the sorting table.
struct Consequent {
  std::string action;
  std::optional<double> value;
  std::string label;

  bool numeric() const { return value.has_value(); }
  friend bool operator==(const Consequent&, const Consequent&) = default;
};

struct RuleRow {
  /// (variable, label) pairs joined by AND, in table column order.
  std::vector<std::pair<std::string, std::string>> antecedent;
  Consequent consequent;

  friend bool operator==(const RuleRow&, const RuleRow&) = default;
};

struct RuleTable {
  std::string scenario;
  std::vector<std::string> variables;
  std::vector<RuleRow> rows;
};

const std::vector<std::string>& scenario_ids();

/// Rows in table order. Throws UnknownScenario.
RuleTable load_ruleset(const std::string& scenario);

/// First row whose labels equal `labels` (one per variable, same order);
/// -1 when no row matches.
int first_matching_row(const RuleTable& table, const std::vector<std::string>& labels);

}  // namespace fbdi
