#include "abducer/formula.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "abducer/errors.hpp"

namespace abducer {

Formula atom(const std::string& name) {
  return Formula(Formula::Node{Kind::Atom, name, nullptr, nullptr});
}

Formula make_unary(Kind k, Formula f) {
  return Formula(
      Formula::Node{k, "", std::make_shared<const Formula>(std::move(f)), nullptr});
}

Formula make_binary(Kind k, Formula a, Formula b) {
  return Formula(Formula::Node{k, "", std::make_shared<const Formula>(std::move(a)),
                               std::make_shared<const Formula>(std::move(b))});
}

Formula f_not(Formula f) { return make_unary(Kind::Not, std::move(f)); }
Formula f_or(Formula a, Formula b) { return make_binary(Kind::Or, std::move(a), std::move(b)); }
Formula f_and(Formula a, Formula b) { return make_binary(Kind::And, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
  return make_binary(Kind::Implies, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) { return make_binary(Kind::Iff, std::move(a), std::move(b)); }
Formula dia_pl(Formula f) { return make_unary(Kind::DiaPl, std::move(f)); }
Formula box_pl(Formula f) { return make_unary(Kind::BoxPl, std::move(f)); }
Formula dia_ep(Formula f) { return make_unary(Kind::DiaEp, std::move(f)); }
Formula box_ep(Formula f) { return make_unary(Kind::BoxEp, std::move(f)); }

Formula knowledge(Formula f) { return box_ep(std::move(f)); }
Formula belief(Formula f) { return dia_pl(box_pl(std::move(f))); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom:
      return atom_name() == other.atom_name();
    case Kind::Or:
    case Kind::And:
    case Kind::Implies:
    case Kind::Iff:
      return left() == other.left() && right() == other.right();
    default:
      return left() == other.left();
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  DiaPl,
  BoxPl,
  DiaEp,
  BoxEp,
  Know,
  Believe,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::End) break;
    }
    return out;
  }

 private:
  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) return {Tok::End, "", start};
    char c = text_[i_];
    switch (c) {
      case '(': ++i_; return {Tok::LParen, "(", start};
      case ')': ++i_; return {Tok::RParen, ")", start};
      case '!': ++i_; return {Tok::Not, "!", start};
      case '&': ++i_; return {Tok::And, "&", start};
      case '|': ++i_; return {Tok::Or, "|", start};
      case '-':
        if (match("->")) return {Tok::Implies, "->", start};
        throw UnknownOperator(std::string(1, c), start);
      case '<':
        if (match("<->")) return {Tok::Iff, "<->", start};
        if (match("<pl>")) return {Tok::DiaPl, "<pl>", start};
        if (match("<ep>")) return {Tok::DiaEp, "<ep>", start};
        throw UnknownOperator(angle_token('>'), start);
      case '[':
        if (match("[pl]")) return {Tok::BoxPl, "[pl]", start};
        if (match("[ep]")) return {Tok::BoxEp, "[ep]", start};
        throw UnknownOperator(angle_token(']'), start);
      default:
        break;
    }
    if (c == 'K' && boundary(i_ + 1)) { ++i_; return {Tok::Know, "K", start}; }
    if (c == 'B' && boundary(i_ + 1)) { ++i_; return {Tok::Believe, "B", start}; }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < text_.size() && (std::islower(static_cast<unsigned char>(text_[j])) ||
                                  std::isdigit(static_cast<unsigned char>(text_[j])) ||
                                  text_[j] == '_'))
        ++j;
      std::string name = text_.substr(i_, j - i_);
      i_ = j;
      return {Tok::Atom, name, start};
    }
    throw UnknownOperator(std::string(1, c), start);
  }

  bool match(const std::string& s) {
    if (text_.compare(i_, s.size(), s) == 0) {
      i_ += s.size();
      return true;
    }
    return false;
  }

  // Recover something readable for a bad bracketed token like `<foo>`.
  std::string angle_token(char close) {
    std::size_t j = text_.find(close, i_);
    if (j == std::string::npos || j - i_ > 8) return std::string(1, text_[i_]);
    return text_.substr(i_, j - i_ + 1);
  }

  bool boundary(std::size_t j) const {
    if (j >= text_.size()) return true;
    char c = text_[j];
    return !(std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  }

  const std::string& text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = iff_expr();
    if (peek().kind != Tok::End)
      throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token take() { return tokens_[i_++]; }

  Formula iff_expr() {
    Formula f = implies_expr();
    while (peek().kind == Tok::Iff) {
      take();
      f = iff(std::move(f), implies_expr());
    }
    return f;
  }

  Formula implies_expr() {
    Formula f = or_expr();
    if (peek().kind == Tok::Implies) {
      take();
      return implies(std::move(f), implies_expr());  // right-associative
    }
    return f;
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (peek().kind == Tok::Or) {
      take();
      f = f_or(std::move(f), and_expr());
    }
    return f;
  }

  Formula and_expr() {
    Formula f = unary_expr();
    while (peek().kind == Tok::And) {
      take();
      f = f_and(std::move(f), unary_expr());
    }
    return f;
  }

  Formula unary_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: take(); return f_not(unary_expr());
      case Tok::DiaPl: take(); return dia_pl(unary_expr());
      case Tok::BoxPl: take(); return box_pl(unary_expr());
      case Tok::DiaEp: take(); return dia_ep(unary_expr());
      case Tok::BoxEp: take(); return box_ep(unary_expr());
      case Tok::Know: take(); return knowledge(unary_expr());
      case Tok::Believe: take(); return belief(unary_expr());
      case Tok::Atom: return atom(take().text);
      case Tok::LParen: {
        Token open = take();
        Formula f = iff_expr();
        if (peek().kind != Tok::RParen)
          throw SyntaxError("unbalanced '(' opened", open.pos);
        take();
        return f;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  if (text.empty()) throw SyntaxError("empty input", 0);
  return Parser(Lexer(text).run()).run();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength; parent passes the minimum level a child may have
// before needing parentheses.
int prec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Iff: return 0;
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Atom: return 5;
    default: return 4;  // prefix operators
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  bool paren = prec(f) < min_prec;
  if (paren) out += '(';
  switch (f.kind()) {
    case Kind::Atom:
      out += f.atom_name();
      break;
    case Kind::Iff:
      render(f.left(), 0, out);
      out += " <-> ";
      render(f.right(), 1, out);
      break;
    case Kind::Implies:
      render(f.left(), 2, out);
      out += " -> ";
      render(f.right(), 1, out);
      break;
    case Kind::Or:
      render(f.left(), 2, out);
      out += " | ";
      render(f.right(), 3, out);
      break;
    case Kind::And:
      render(f.left(), 3, out);
      out += " & ";
      render(f.right(), 4, out);
      break;
    case Kind::Not:
      out += '!';
      render(f.left(), 4, out);
      break;
    case Kind::DiaPl:
      if (f.left().kind() == Kind::BoxPl) {
        out += "B ";
        render(f.left().left(), 4, out);
      } else {
        out += "<pl> ";
        render(f.left(), 4, out);
      }
      break;
    case Kind::BoxPl:
      out += "[pl] ";
      render(f.left(), 4, out);
      break;
    case Kind::DiaEp:
      out += "<ep> ";
      render(f.left(), 4, out);
      break;
    case Kind::BoxEp:
      out += "K ";
      render(f.left(), 4, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return f;
    case Kind::Not:
      return f_not(desugar(f.left()));
    case Kind::Or:
      return f_or(desugar(f.left()), desugar(f.right()));
    case Kind::And:
      return f_not(f_or(f_not(desugar(f.left())), f_not(desugar(f.right()))));
    case Kind::Implies:
      return f_or(f_not(desugar(f.left())), desugar(f.right()));
    case Kind::Iff:
      return desugar(f_and(implies(f.left(), f.right()), implies(f.right(), f.left())));
    case Kind::DiaPl:
      return dia_pl(desugar(f.left()));
    case Kind::BoxPl:
      return f_not(dia_pl(f_not(desugar(f.left()))));
    case Kind::DiaEp:
      return dia_ep(desugar(f.left()));
    case Kind::BoxEp:
      return f_not(dia_ep(f_not(desugar(f.left()))));
  }
  return f;  // unreachable
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  auto walk = [&out](const Formula& g, auto&& self) -> void {
    if (g.kind() == Kind::Atom) {
      out.insert(g.atom_name());
      return;
    }
    self(g.left(), self);
    if (g.is_binary()) self(g.right(), self);
  };
  walk(f, walk);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return true;
    case Kind::DiaPl:
    case Kind::BoxPl:
    case Kind::DiaEp:
    case Kind::BoxEp:
      return false;
    default:
      return is_propositional(f.left()) && (!f.is_binary() || is_propositional(f.right()));
  }
}

}  // namespace abducer
