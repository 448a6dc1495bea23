#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbdi {

/// Raised when an arithmetic expression or comparison operand is still
/// unbound after substitution.
class NonGroundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonGroundComparison : public NonGroundError {
 public:
  using NonGroundError::NonGroundError;
};

class DivisionByZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotArithmetic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prolog-style term. Immutable; compound arguments are shared between copies.
class Term {
 public:
  enum class Kind { Atom, Var, Num, Str, Compound };

  Term() : Term(Kind::Atom, "true", 0.0) {}

  static Term atom(std::string name) { return Term(Kind::Atom, std::move(name), 0.0); }
  static Term var(std::string name) { return Term(Kind::Var, std::move(name), 0.0); }
  static Term num(double value) { return Term(Kind::Num, {}, value); }
  static Term str(std::string value) { return Term(Kind::Str, std::move(value), 0.0); }
  /// An empty argument list yields an atom; compounds always have arity >= 1.
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_num() const { return kind_ == Kind::Num; }
  bool is_str() const { return kind_ == Kind::Str; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  bool is_anonymous() const { return kind_ == Kind::Var && text_ == "_"; }

  /// Atom name, variable name, string contents or compound functor.
  const std::string& name() const { return text_; }
  double number() const { return value_; }
  const std::vector<Term>& args() const;
  std::size_t arity() const { return args_ ? args_->size() : 0; }
  const Term& arg(std::size_t i) const { return (*args_)[i]; }

  /// Functor name for atoms and compounds; empty otherwise.
  const std::string& functor() const;
  bool is_ground() const;
  bool contains_var(const std::string& name) const;
  void collect_vars(std::vector<std::string>& out) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Term(Kind kind, std::string text, double value) : kind_(kind), text_(std::move(text)), value_(value) {}

  Kind kind_;
  std::string text_;
  double value_ = 0.0;
  std::shared_ptr<const std::vector<Term>> args_;
};

std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Variable bindings. Bindings may be triangular (a bound value can itself
/// contain bound variables); apply() resolves them fully.
class Substitution {
 public:
  Substitution() = default;

  const Term* lookup(const std::string& var) const;
  /// Follows variable chains until an unbound variable or non-variable term.
  const Term& walk(const Term& t) const;
  Term apply(const Term& t) const;
  void bind(std::string var, Term value) { bindings_.emplace_back(std::move(var), std::move(value)); }

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::vector<std::pair<std::string, Term>>& bindings() const { return bindings_; }
  /// Fully-resolved view restricted to the given variables, in that order.
  std::vector<std::pair<std::string, Term>> project(const std::vector<std::string>& vars) const;

 private:
  std::vector<std::pair<std::string, Term>> bindings_;
};

/// Robinson unification with occurs check. Extends `s` in place; on failure
/// `s` may hold partial bindings and must be discarded.
bool unify_into(const Term& a, const Term& b, Substitution& s);

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s = {});

/// Evaluates +, -, *, / (and unary minus) over numbers after substitution.
double eval_arith(const Term& t, const Substitution& s = {});

/// True when the term (after substitution) is a number or arithmetic expression.
bool is_arith_expr(const Term& t);

}  // namespace fbdi
