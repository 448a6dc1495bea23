#include "fuzzybdi/term.hpp"

#include <cmath>
#include <sstream>

namespace fbdi {

namespace {

const std::vector<Term>& empty_args() {
  static const std::vector<Term> kEmpty;
  return kEmpty;
}

const std::string& empty_name() {
  static const std::string kEmpty;
  return kEmpty;
}

bool is_operator_functor(const std::string& f) {
  return f == "+" || f == "-" || f == "*" || f == "/";
}

bool needs_quotes(const std::string& atom) {
  if (atom.empty()) return true;
  if (!(atom[0] >= 'a' && atom[0] <= 'z')) return true;
  for (char c : atom) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return true;
  }
  return false;
}

void write_number(std::ostream& os, double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << v;
    os << tmp.str();
  }
}

void write_escaped(std::ostream& os, const std::string& s, char quote) {
  os << quote;
  for (char c : s) {
    if (c == quote || c == '\\') os << '\\';
    os << c;
  }
  os << quote;
}

int precedence(const std::string& op) { return (op == "*" || op == "/") ? 2 : 1; }

void write_term(std::ostream& os, const Term& t);

void write_operand(std::ostream& os, const Term& t, int parent_prec, bool right_side) {
  bool paren = false;
  if (t.is_compound() && t.arity() == 2 && is_operator_functor(t.functor())) {
    int p = precedence(t.functor());
    paren = p < parent_prec || (right_side && p == parent_prec);
  }
  if (paren) os << '(';
  write_term(os, t);
  if (paren) os << ')';
}

void write_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      if (needs_quotes(t.name())) {
        write_escaped(os, t.name(), '\'');
      } else {
        os << t.name();
      }
      return;
    case Term::Kind::Var:
      os << t.name();
      return;
    case Term::Kind::Num:
      write_number(os, t.number());
      return;
    case Term::Kind::Str:
      write_escaped(os, t.name(), '"');
      return;
    case Term::Kind::Compound:
      break;
  }
  const std::string& f = t.functor();
  if (t.arity() == 2 && is_operator_functor(f)) {
    int p = precedence(f);
    write_operand(os, t.arg(0), p, false);
    os << f;
    write_operand(os, t.arg(1), p, true);
    return;
  }
  if (t.arity() == 1 && f == "-") {
    os << "-(";
    write_term(os, t.arg(0));
    os << ')';
    return;
  }
  if (needs_quotes(f)) {
    write_escaped(os, f, '\'');
  } else {
    os << f;
  }
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    write_term(os, t.arg(i));
  }
  os << ')';
}

}  // namespace

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(functor));
  Term t(Kind::Compound, std::move(functor), 0.0);
  t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
  return t;
}

const std::vector<Term>& Term::args() const { return args_ ? *args_ : empty_args(); }

const std::string& Term::functor() const {
  return (kind_ == Kind::Atom || kind_ == Kind::Compound) ? text_ : empty_name();
}

bool Term::is_ground() const {
  if (kind_ == Kind::Var) return false;
  if (kind_ != Kind::Compound) return true;
  for (const Term& a : *args_) {
    if (!a.is_ground()) return false;
  }
  return true;
}

bool Term::contains_var(const std::string& name) const {
  if (kind_ == Kind::Var) return text_ == name;
  if (kind_ != Kind::Compound) return false;
  for (const Term& a : *args_) {
    if (a.contains_var(name)) return true;
  }
  return false;
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (kind_ == Kind::Var) {
    if (text_ == "_") return;
    for (const auto& v : out) {
      if (v == text_) return;
    }
    out.push_back(text_);
    return;
  }
  if (kind_ != Kind::Compound) return;
  for (const Term& a : *args_) a.collect_vars(out);
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Term::Kind::Num:
      return a.value_ == b.value_;
    case Term::Kind::Atom:
    case Term::Kind::Var:
    case Term::Kind::Str:
      return a.text_ == b.text_;
    case Term::Kind::Compound:
      if (a.text_ != b.text_ || a.arity() != b.arity()) return false;
      if (a.args_ == b.args_) return true;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!(a.arg(i) == b.arg(i))) return false;
      }
      return true;
  }
  return false;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  write_term(os, t);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  write_term(os, t);
  return os;
}

const Term* Substitution::lookup(const std::string& var) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->first == var) return &it->second;
  }
  return nullptr;
}

const Term& Substitution::walk(const Term& t) const {
  const Term* cur = &t;
  while (cur->is_var() && !cur->is_anonymous()) {
    const Term* next = lookup(cur->name());
    if (!next) break;
    cur = next;
  }
  return *cur;
}

Term Substitution::apply(const Term& t) const {
  const Term& w = walk(t);
  if (!w.is_compound()) return w;
  std::vector<Term> args;
  args.reserve(w.arity());
  bool changed = false;
  for (const Term& a : w.args()) {
    args.push_back(apply(a));
    changed = changed || !(args.back() == a);
  }
  if (!changed) return w;
  return Term::compound(w.functor(), std::move(args));
}

std::vector<std::pair<std::string, Term>> Substitution::project(const std::vector<std::string>& vars) const {
  std::vector<std::pair<std::string, Term>> out;
  for (const auto& v : vars) {
    Term value = apply(Term::var(v));
    if (!(value.is_var() && value.name() == v)) out.emplace_back(v, std::move(value));
  }
  return out;
}

namespace {

bool occurs(const std::string& var, const Term& t, const Substitution& s) {
  const Term& w = s.walk(t);
  if (w.is_var()) return w.name() == var;
  if (!w.is_compound()) return false;
  for (const Term& a : w.args()) {
    if (occurs(var, a, s)) return true;
  }
  return false;
}

}  // namespace

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  if (a.is_anonymous() || b.is_anonymous()) return true;
  const Term& x = s.walk(a);
  const Term& y = s.walk(b);
  if (x.is_anonymous() || y.is_anonymous()) return true;
  if (x.is_var() && y.is_var() && x.name() == y.name()) return true;
  if (x.is_var()) {
    if (occurs(x.name(), y, s)) return false;
    s.bind(x.name(), y);
    return true;
  }
  if (y.is_var()) {
    if (occurs(y.name(), x, s)) return false;
    s.bind(y.name(), x);
    return true;
  }
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::Num:
      return x.number() == y.number();
    case Term::Kind::Atom:
    case Term::Kind::Str:
      return x.name() == y.name();
    case Term::Kind::Compound: {
      if (x.functor() != y.functor() || x.arity() != y.arity()) return false;
      // Copies keep the argument vectors alive while `s` grows.
      Term xs = x;
      Term ys = y;
      for (std::size_t i = 0; i < xs.arity(); ++i) {
        if (!unify_into(xs.arg(i), ys.arg(i), s)) return false;
      }
      return true;
    }
    case Term::Kind::Var:
      break;
  }
  return false;
}

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& s) {
  Substitution out = s;
  if (!unify_into(a, b, out)) return std::nullopt;
  return out;
}

bool is_arith_expr(const Term& t) {
  if (t.is_num()) return true;
  if (!t.is_compound()) return false;
  const std::string& f = t.functor();
  if (t.arity() == 2 && is_operator_functor(f)) return is_arith_expr(t.arg(0)) && is_arith_expr(t.arg(1));
  if (t.arity() == 1 && f == "-") return is_arith_expr(t.arg(0));
  return false;
}

double eval_arith(const Term& t, const Substitution& s) {
  const Term& w = s.walk(t);
  switch (w.kind()) {
    case Term::Kind::Num:
      return w.number();
    case Term::Kind::Var:
      throw NonGroundError("unbound variable " + w.name() + " in arithmetic expression");
    case Term::Kind::Compound: {
      const std::string& f = w.functor();
      if (w.arity() == 1 && f == "-") return -eval_arith(w.arg(0), s);
      if (w.arity() == 2 && is_operator_functor(f)) {
        double l = eval_arith(w.arg(0), s);
        double r = eval_arith(w.arg(1), s);
        if (f == "+") return l + r;
        if (f == "-") return l - r;
        if (f == "*") return l * r;
        if (r == 0.0) throw DivisionByZero("division by zero in " + to_string(s.apply(w)));
        return l / r;
      }
      break;
    }
    default:
      break;
  }
  throw NotArithmetic("not an arithmetic expression: " + to_string(w));
}

}  // namespace fbdi
