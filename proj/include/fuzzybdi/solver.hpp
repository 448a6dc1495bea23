#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzybdi/formula.hpp"
#include "fuzzybdi/term.hpp"

namespace fbdi {

class DepthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  int max_depth = 64;
};

/// Resolves arity-1 literals `pred(label)` of fuzzified predicates to a
/// membership degree. Returns nullopt when the literal is not fuzzy, in which
/// case it is solved crisply.
using DegreeLookup = std::function<std::optional<double>(const Term& literal)>;

/// Logical-consequence search over a belief base and belief rules.
///
/// Solutions are produced depth-first: beliefs in insertion order, then rules
/// in textual order. `not(g)` succeeds iff `g` has no solution. When a degree
/// lookup is installed, every fuzzy literal met along a proof contributes its
/// degree to the `degrees` span handed to the callback (degrees under `not`
/// are not recorded).
class Solver {
 public:
  /// Return false to stop the enumeration.
  using Callback = std::function<bool(const Substitution&, std::span<const double> degrees)>;

  Solver(std::span<const Term> beliefs, std::span<const BeliefRule> rules, SolveOptions options = {});

  void set_degree_lookup(DegreeLookup lookup) { lookup_ = std::move(lookup); }

  /// Returns false iff the callback stopped the enumeration.
  bool solve(const Formula& f, const Substitution& s, const Callback& cb) const;

  std::vector<Substitution> solve_all(const Formula& f, const Substitution& s = {}) const;
  std::optional<Substitution> solve_first(const Formula& f, const Substitution& s = {}) const;
  bool holds(const Formula& f, const Substitution& s = {}) const { return solve_first(f, s).has_value(); }

 private:
  using Cont = std::function<bool(const Substitution&)>;

  bool solve_goal(const Formula& f, const Substitution& s, int depth, const Cont& k) const;
  bool solve_literal(const Term& goal, const Substitution& s, int depth, const Cont& k) const;
  bool relational(const Formula& f, const Substitution& s) const;
  Term rename(const Term& t, const std::string& suffix) const;
  Formula rename(const Formula& f, const std::string& suffix) const;

  std::span<const Term> beliefs_;
  std::span<const BeliefRule> rules_;
  SolveOptions options_;
  DegreeLookup lookup_;
  mutable std::size_t rename_counter_ = 0;
  mutable std::vector<double> degrees_;
};

/// Convenience wrapper over Solver::solve_all.
std::vector<Substitution> solve(const Formula& f, std::span<const Term> beliefs, std::span<const BeliefRule> rules,
                                const Substitution& s = {}, SolveOptions options = {});

}  // namespace fbdi
