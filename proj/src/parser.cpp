#include "fuzzybdi/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace fbdi {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::ostringstream os;
  if (expected.size() == 1) {
    os << expected.front();
  } else {
    os << "one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << ", ";
      os << expected[i];
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::vector<std::string> expected, std::string found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                         describe_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  End,
  Atom,
  Var,
  Num,
  Str,
  Internal,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Period,
  Colon,
  Neck,
  Arrow,
  Semi,
  Bang,
  Query,
  Plus,
  Minus,
  MinusPlus,
  Star,
  Slash,
  Amp,
  Bar,
  Eq,
  Neq,
  Gt,
  Lt,
  Ge,
  Le,
  Assign,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  bool quoted = false;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Str:
      return "string \"" + t.text + "\"";
    case Tok::Num:
      return "number " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int line = line_;
        int column = column_;
        advance();
        advance();
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) throw SyntaxError(line, column, {"'*/'"}, "end of input");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    std::string s;
    while (pos_ < src_.size() && ident_char(peek())) s += advance();
    return s;
  }

  void quoted(Token& t, char q) {
    advance();
    std::string s;
    for (;;) {
      if (pos_ >= src_.size()) throw SyntaxError(t.line, t.column, {std::string("closing ") + q}, "end of input");
      char c = advance();
      if (c == q) break;
      if (c == '\\' && pos_ < src_.size()) c = advance();
      s += c;
    }
    t.text = std::move(s);
    t.quoted = true;
  }

  void number(Token& t) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '-' || peek(1) == '+') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      advance();
      if (peek() == '-' || peek() == '+') advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    t.kind = Tok::Num;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.number = std::strtod(t.text.c_str(), nullptr);
  }

  void symbol(Token& t, Tok kind, int length) {
    t.kind = kind;
    t.text = std::string(src_.substr(pos_, length));
    for (int i = 0; i < length; ++i) advance();
  }

  void lex_one(Token& t) {
    char c = peek();
    char n = peek(1);
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::Atom;
      t.text = ident();
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Var;
      t.text = ident();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      number(t);
      return;
    }
    switch (c) {
      case '"':
        t.kind = Tok::Str;
        quoted(t, '"');
        return;
      case '\'':
        t.kind = Tok::Atom;
        quoted(t, '\'');
        return;
      case '.':
        if (std::islower(static_cast<unsigned char>(n))) {
          advance();
          t.kind = Tok::Internal;
          t.text = "." + ident();
          return;
        }
        return symbol(t, Tok::Period, 1);
      case '(':
        return symbol(t, Tok::LParen, 1);
      case ')':
        return symbol(t, Tok::RParen, 1);
      case '[':
        return symbol(t, Tok::LBrack, 1);
      case ']':
        return symbol(t, Tok::RBrack, 1);
      case ',':
        return symbol(t, Tok::Comma, 1);
      case ':':
        return n == '-' ? symbol(t, Tok::Neck, 2) : symbol(t, Tok::Colon, 1);
      case ';':
        return symbol(t, Tok::Semi, 1);
      case '!':
        return symbol(t, Tok::Bang, 1);
      case '?':
        return symbol(t, Tok::Query, 1);
      case '+':
        return symbol(t, Tok::Plus, 1);
      case '-':
        return n == '+' ? symbol(t, Tok::MinusPlus, 2) : symbol(t, Tok::Minus, 1);
      case '*':
        return symbol(t, Tok::Star, 1);
      case '/':
        return symbol(t, Tok::Slash, 1);
      case '&':
        return symbol(t, Tok::Amp, 1);
      case '|':
        return symbol(t, Tok::Bar, 1);
      case '=':
        return n == '=' ? symbol(t, Tok::Eq, 2) : symbol(t, Tok::Assign, 1);
      case '\\':
        if (n == '=' && peek(2) == '=') return symbol(t, Tok::Neq, 3);
        break;
      case '>':
        return n == '=' ? symbol(t, Tok::Ge, 2) : symbol(t, Tok::Gt, 1);
      case '<':
        if (n == '-') return symbol(t, Tok::Arrow, 2);
        return n == '=' ? symbol(t, Tok::Le, 2) : symbol(t, Tok::Lt, 1);
      default:
        break;
    }
    throw SyntaxError(t.line, t.column, {"token"}, std::string("character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Program program() {
    Program p;
    while (!at(Tok::End)) {
      if (at(Tok::Bang)) {
        next();
        p.goals.push_back(literal());
        expect(Tok::Period, "'.'");
      } else if (at(Tok::Plus)) {
        p.plans.push_back(plan());
      } else if (at(Tok::Atom)) {
        Term head = literal();
        if (accept(Tok::Neck)) {
          Formula body = formula();
          expect(Tok::Period, "'.'");
          p.rules.push_back({std::move(head), std::move(body)});
        } else {
          if (!at(Tok::Period)) fail({"':-'", "'.'"});
          next();
          p.beliefs.push_back(std::move(head));
        }
      } else {
        fail({"'!'", "'+'", "atom"});
      }
    }
    return p;
  }

  Term whole_term() {
    Term t = expr();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  bool at(Tok k) const { return cur().kind == k; }
  const Token& next() {
    const Token& t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(cur().line, cur().column, std::move(expected), describe(cur()));
  }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail({what});
    return next();
  }
  bool at_keyword(const char* word) const { return at(Tok::Atom) && !cur().quoted && cur().text == word; }

  Plan plan() {
    expect(Tok::Plus, "'+'");
    expect(Tok::Bang, "'!'");
    Plan p;
    p.trigger = literal();
    p.trigger_fuzzy = annotation();
    if (accept(Tok::Colon)) p.context = formula();
    if (accept(Tok::Arrow)) p.body = body();
    if (!at(Tok::Period)) fail({"':'", "'<-'", "';'", "'.'"});
    next();
    return p;
  }

  bool annotation() {
    if (!accept(Tok::LBrack)) return false;
    if (!at_keyword("fuzzy")) fail({"'fuzzy'"});
    next();
    expect(Tok::RBrack, "']'");
    return true;
  }

  /// atom or compound
  Term literal() {
    if (!at(Tok::Atom)) fail({"atom"});
    return functor_term();
  }

  Term functor_term() {
    std::string name = next().text;
    if (!accept(Tok::LParen)) return Term::atom(std::move(name));
    std::vector<Term> args;
    args.push_back(expr());
    while (accept(Tok::Comma)) args.push_back(expr());
    expect(Tok::RParen, "')'");
    return Term::compound(std::move(name), std::move(args));
  }

  Term expr() {
    Term left = product();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      std::string op = next().text;
      left = Term::compound(op, {std::move(left), product()});
    }
    return left;
  }

  Term product() {
    Term left = unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      std::string op = next().text;
      left = Term::compound(op, {std::move(left), unary()});
    }
    return left;
  }

  Term unary() {
    if (accept(Tok::Minus)) {
      if (at(Tok::Num)) return Term::num(-next().number);
      return Term::compound("-", {unary()});
    }
    return primary();
  }

  Term primary() {
    switch (cur().kind) {
      case Tok::Num:
        return Term::num(next().number);
      case Tok::Str:
        return Term::str(next().text);
      case Tok::Var:
        return Term::var(next().text);
      case Tok::Atom:
        return functor_term();
      case Tok::LParen: {
        next();
        Term t = expr();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail({"term"});
    }
  }

  static bool relational_op(Tok k, RelOp& op) {
    switch (k) {
      case Tok::Eq:
        op = RelOp::Eq;
        return true;
      case Tok::Neq:
        op = RelOp::Neq;
        return true;
      case Tok::Gt:
        op = RelOp::Gt;
        return true;
      case Tok::Lt:
        op = RelOp::Lt;
        return true;
      case Tok::Ge:
        op = RelOp::Ge;
        return true;
      case Tok::Le:
        op = RelOp::Le;
        return true;
      default:
        return false;
    }
  }

  Formula formula() {
    Formula left = conjunction();
    while (accept(Tok::Bar)) left = Formula::disj(std::move(left), conjunction());
    return left;
  }

  Formula conjunction() {
    Formula left = negation();
    while (accept(Tok::Amp)) left = Formula::conj(std::move(left), negation());
    return left;
  }

  Formula negation() {
    if (at_keyword("not")) {
      next();
      return Formula::negation(negation());
    }
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    switch (cur().kind) {
      case Tok::Num:
      case Tok::Str:
      case Tok::Var:
      case Tok::Atom:
      case Tok::Minus:
        break;
      default:
        fail({"'not'", "'('", "term"});
    }
    Term lhs = expr();
    RelOp op;
    if (relational_op(cur().kind, op)) {
      next();
      return Formula::relational(op, std::move(lhs), expr());
    }
    if (lhs.is_atom() && lhs.name() == "true") return Formula::truth();
    const std::string& f = lhs.is_compound() ? lhs.functor() : std::string();
    bool arith = f == "+" || f == "-" || f == "*" || f == "/";
    if ((lhs.is_atom() || lhs.is_compound()) && !arith) return Formula::literal(std::move(lhs));
    fail({"relational operator"});
  }

  std::vector<BodyStep> body() {
    std::vector<BodyStep> steps;
    do {
      if (auto s = step()) steps.push_back(std::move(*s));
    } while (accept(Tok::Semi));
    return steps;
  }

  std::optional<BodyStep> step() {
    switch (cur().kind) {
      case Tok::Bang: {
        next();
        Term t = literal();
        bool fuzzy = annotation();
        return BodyStep::subgoal(std::move(t), fuzzy);
      }
      case Tok::Query:
        next();
        return BodyStep::test_goal(literal());
      case Tok::MinusPlus:
        next();
        return BodyStep::belief_replace(literal());
      case Tok::Internal:
        return send();
      case Tok::Var:
        if (toks_[i_ + 1].kind == Tok::Assign) {
          Term var = Term::var(next().text);
          next();
          return BodyStep::assign(std::move(var), expr());
        }
        {
          Term var = Term::var(next().text);
          bool fuzzy = annotation();
          return BodyStep::action(std::move(var), fuzzy);
        }
      case Tok::Atom: {
        Term t = functor_term();
        bool fuzzy = annotation();
        if (!fuzzy && t.is_atom() && t.name() == "true") return std::nullopt;
        return BodyStep::action(std::move(t), fuzzy);
      }
      default:
        fail({"'!'", "'?'", "'-+'", "'.send'", "variable", "atom"});
    }
  }

  BodyStep send() {
    if (cur().text != ".send") fail({"'.send'"});
    next();
    expect(Tok::LParen, "'('");
    Term receiver = expr();
    expect(Tok::Comma, "','");
    Performative p;
    if (at_keyword("tell")) {
      p = Performative::Tell;
    } else if (at_keyword("achieve")) {
      p = Performative::Achieve;
    } else {
      fail({"'tell'", "'achieve'"});
    }
    next();
    expect(Tok::Comma, "','");
    Term content = expr();
    expect(Tok::RParen, "')'");
    return BodyStep::send(std::move(receiver), p, std::move(content));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Program parse_program(std::string_view source) { return Parser(source).program(); }

Term parse_term(std::string_view source) { return Parser(source).whole_term(); }

Formula parse_formula(std::string_view source) { return Parser(source).whole_formula(); }

}  // namespace fbdi
