#include "falg/expr.hpp"

#include <cctype>
#include <variant>

namespace falg {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.args.size() != b.args.size()) return false;
  for (std::size_t n = 0; n < a.args.size(); ++n)
    if (!(*a.args[n] == *b.args[n])) return false;
  return true;
}

namespace {

struct Token {
  enum class Kind { Number, Label, Ident, Punct, End };
  Kind kind;
  std::string text;
  int line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", l, c});
        return out;
      }
      char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = digits();
        if (pos_ < src_.size() && src_[pos_] == '/') {
          advance();
          if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(line_, col_, "expected denominator after '/'");
          int dl = line_, dc = col_;
          auto den = digits();
          if (den.find_first_not_of('0') == std::string::npos) throw ParseError(dl, dc, "zero denominator");
          num += "/" + den;
        }
        out.push_back({Token::Kind::Number, num, l, c});
      } else if (ch == '`') {
        advance();
        std::string label;
        while (pos_ < src_.size() && src_[pos_] != '`') {
          label += src_[pos_];
          advance();
        }
        if (pos_ >= src_.size()) throw ParseError(l, c, "unterminated label");
        advance();
        if (label.empty()) throw ParseError(l, c, "empty label");
        out.push_back({Token::Kind::Label, label, l, c});
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string id;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          id += src_[pos_];
          advance();
        }
        out.push_back({Token::Kind::Ident, id, l, c});
      } else if (std::string_view("+-*()[]<>,").find(ch) != std::string_view::npos) {
        advance();
        out.push_back({Token::Kind::Punct, std::string(1, ch), l, c});
      } else {
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      advance();
    }
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    auto e = expr();
    if (peek().kind != Token::Kind::End) unexpected();
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }

  [[noreturn]] void unexpected() const {
    const auto& t = peek();
    if (t.kind == Token::Kind::End) throw ParseError(t.line, t.column, "unexpected end of input");
    throw ParseError(t.line, t.column, "unexpected '" + t.text + "'");
  }

  void expect(const char* p) {
    if (!at(p)) {
      const auto& t = peek();
      throw ParseError(t.line, t.column, std::string("expected '") + p + "'");
    }
    ++pos_;
  }

  static ExprPtr node(Expr::Kind k, const Token& at, std::vector<ExprPtr> args, std::string text = {}) {
    return std::make_shared<Expr>(Expr{k, std::move(text), std::move(args), at.line, at.column});
  }

  ExprPtr expr() {
    auto lhs = term();
    while (at("+") || at("-")) {
      const auto& op = toks_[pos_++];
      auto rhs = term();
      lhs = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    while (at("*")) {
      const auto& op = toks_[pos_++];
      lhs = node(Expr::Kind::Mul, op, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at("-")) {
      const auto& op = toks_[pos_++];
      return node(Expr::Kind::Neg, op, {unary()});
    }
    return primary();
  }

  ExprPtr primary() {
    const auto& t = peek();
    switch (t.kind) {
      case Token::Kind::Number: ++pos_; return node(Expr::Kind::Number, t, {}, t.text);
      case Token::Kind::Label: ++pos_; return node(Expr::Kind::Label, t, {}, t.text);
      case Token::Kind::Ident: ++pos_; return node(Expr::Kind::Ident, t, {}, t.text);
      case Token::Kind::End: unexpected();
      case Token::Kind::Punct: break;
    }
    if (at("(")) {
      ++pos_;
      auto e = expr();
      expect(")");
      return e;
    }
    if (at("[")) {
      ++pos_;
      auto a = expr();
      expect(",");
      auto b = expr();
      expect("]");
      return node(Expr::Kind::Commutator, t, {a, b});
    }
    if (at("<")) {
      ++pos_;
      auto a = expr();
      expect(",");
      auto b = expr();
      expect(",");
      auto c = expr();
      expect(">");
      return node(Expr::Kind::Associator, t, {a, b, c});
    }
    unexpected();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

std::string wrap(const Expr& e, bool parens) {
  auto s = print_expr(e);
  return parens ? "(" + s + ")" : s;
}

using Value = std::variant<Scalar, Vector>;

Vector as_vector(const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return scale(*s, Vector::basis(s->backend(), 0));
  return std::get<Vector>(v);
}

Value evaluate(const Expr& e, const EvalEnv& env) {
  const auto& table = env.fixture.table;
  const Backend b = table.backend();
  auto where = [&] { return " at " + std::to_string(e.line) + ":" + std::to_string(e.column); };
  switch (e.kind) {
    case Expr::Kind::Number:
      try {
        return Scalar::parse(b, e.text);
      } catch (const DomainError& err) {
        throw EvalError(std::string(err.what()) + where());
      }
    case Expr::Kind::Label:
      try {
        return Vector::basis(b, env.fixture.codec->encode(e.text));
      } catch (const LabelError& err) {
        throw EvalError(std::string(err.what()) + where());
      }
    case Expr::Kind::Ident: {
      if (auto it = env.bindings.find(e.text); it != env.bindings.end()) {
        if (it->second.backend() != b) throw EvalError("binding '" + e.text + "' has the wrong backend");
        return it->second;
      }
      if (e.text.size() >= 2 && e.text[0] == 'e' &&
          e.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        try {
          return Vector::basis(b, generic_codec()->encode(e.text));
        } catch (const LabelError& err) {
          throw EvalError(std::string(err.what()) + where());
        }
      }
      throw EvalError("unbound identifier '" + e.text + "'" + where());
    }
    case Expr::Kind::Neg: {
      auto v = evaluate(*e.args[0], env);
      if (auto* s = std::get_if<Scalar>(&v)) return -*s;
      return negate(std::get<Vector>(v));
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      auto l = evaluate(*e.args[0], env), r = evaluate(*e.args[1], env);
      bool plus = e.kind == Expr::Kind::Add;
      if (std::holds_alternative<Scalar>(l) && std::holds_alternative<Scalar>(r)) {
        const auto& x = std::get<Scalar>(l);
        const auto& y = std::get<Scalar>(r);
        return plus ? x + y : x - y;
      }
      return plus ? as_vector(l) + as_vector(r) : as_vector(l) - as_vector(r);
    }
    case Expr::Kind::Mul: {
      auto l = evaluate(*e.args[0], env), r = evaluate(*e.args[1], env);
      const auto* ls = std::get_if<Scalar>(&l);
      const auto* rs = std::get_if<Scalar>(&r);
      if (ls && rs) return *ls * *rs;
      if (ls) return scale(*ls, std::get<Vector>(r));
      if (rs) return scale(*rs, std::get<Vector>(l));
      return alg_mul(table, std::get<Vector>(l), std::get<Vector>(r));
    }
    case Expr::Kind::Commutator:
      return commutator(table, as_vector(evaluate(*e.args[0], env)), as_vector(evaluate(*e.args[1], env)));
    case Expr::Kind::Associator:
      return associator(table, as_vector(evaluate(*e.args[0], env)), as_vector(evaluate(*e.args[1], env)),
                        as_vector(evaluate(*e.args[2], env)));
  }
  throw EvalError("unknown expression node");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Ident: return e.text;
    case Expr::Kind::Label: return "`" + e.text + "`";
    case Expr::Kind::Neg: return "-" + wrap(*e.args[0], precedence(*e.args[0]) < 3);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const char* op = e.kind == Expr::Kind::Add ? " + " : " - ";
      return wrap(*e.args[0], false) + op + wrap(*e.args[1], precedence(*e.args[1]) <= 1);
    }
    case Expr::Kind::Mul:
      return wrap(*e.args[0], precedence(*e.args[0]) < 2) + "*" +
             wrap(*e.args[1], precedence(*e.args[1]) <= 2);
    case Expr::Kind::Commutator:
      return "[" + print_expr(*e.args[0]) + ", " + print_expr(*e.args[1]) + "]";
    case Expr::Kind::Associator:
      return "<" + print_expr(*e.args[0]) + ", " + print_expr(*e.args[1]) + ", " +
             print_expr(*e.args[2]) + ">";
  }
  return {};
}

Vector eval(const Expr& e, const EvalEnv& env) {
  try {
    return as_vector(evaluate(e, env));
  } catch (const BackendMismatch& err) {
    throw EvalError(err.what());
  }
}

}  // namespace falg
