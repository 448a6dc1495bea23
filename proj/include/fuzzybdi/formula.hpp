#pragma once

#include <memory>
#include <ostream>
#include <string>

#include "fuzzybdi/term.hpp"

namespace fbdi {

enum class RelOp { Eq, Neq, Gt, Lt, Ge, Le };

const char* to_string(RelOp op);

/// Context / rule-body formula. `Not` is negation as failure and may wrap
/// any sub-formula (`not(temp(_,D2) & D2>D1)`).
class Formula {
 public:
  enum class Kind { True, Literal, Not, And, Or, Relational };

  Formula();  // True

  static Formula truth() { return Formula(); }
  static Formula literal(Term t);
  static Formula negation(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula relational(RelOp op, Term lhs, Term rhs);

  Kind kind() const;
  const Term& term() const;  // Literal
  const Formula& child() const;  // Not
  const Formula& left() const;  // And, Or
  const Formula& right() const;  // And, Or
  RelOp op() const;
  const Term& lhs() const;
  const Term& rhs() const;

  void collect_vars(std::vector<std::string>& out) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  static const std::shared_ptr<const Node>& true_node();
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  explicit Formula(std::nullptr_t) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// `head :- body.`
struct BeliefRule {
  Term head;
  Formula body;

  friend bool operator==(const BeliefRule& a, const BeliefRule& b) {
    return a.head == b.head && a.body == b.body;
  }
};

}  // namespace fbdi
