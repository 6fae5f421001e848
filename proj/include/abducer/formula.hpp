#pragma once

#include <memory>
#include <set>
#include <string>

namespace abducer {

// Node kinds of the formula language. Atom, Not, Or, DiaPl and DiaEp are the
// primitive connectives the evaluator works with; the rest are derived forms
// kept in the AST so they print back in their input spelling:
//
//   phi & psi     == !(!phi | !psi)
//   phi -> psi    == !phi | psi
//   phi <-> psi   == (phi -> psi) & (psi -> phi)
//   [pl] phi      == !<pl> !phi
//   [ep] phi      == !<ep> !phi
//   K phi         == [ep] phi
//   B phi         == <pl> [pl] phi
//
// K and B have no node kind of their own: the factory functions expand them,
// and the parser does the same, so desugar() only ever meets the kinds below.
enum class Kind {
  Atom,
  Not,
  Or,
  And,
  Implies,
  Iff,
  DiaPl,   // <pl>
  BoxPl,   // [pl]
  DiaEp,   // <ep>
  BoxEp,   // [ep], printed as K
};

// Immutable formula value. Copies share nodes; structural equality.
class Formula {
 public:
  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  bool is_binary() const {
    return kind() == Kind::Or || kind() == Kind::And || kind() == Kind::Implies ||
           kind() == Kind::Iff;
  }
  bool is_unary() const { return kind() != Kind::Atom && !is_binary(); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom only
    std::shared_ptr<const Formula> left, right;
  };

  explicit Formula(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;

  friend Formula atom(const std::string&);
  friend Formula make_unary(Kind, Formula);
  friend Formula make_binary(Kind, Formula, Formula);
};

Formula atom(const std::string& name);
Formula f_not(Formula f);
Formula f_or(Formula a, Formula b);
Formula f_and(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula dia_pl(Formula f);
Formula box_pl(Formula f);
Formula dia_ep(Formula f);
Formula box_ep(Formula f);

// Knowledge and belief, expanded at construction: K phi == [ep] phi,
// B phi == <pl> [pl] phi.
Formula knowledge(Formula f);
Formula belief(Formula f);

// Recursive-descent parser for the concrete syntax. Precedence, low to high:
// <->, ->, |, &, then the prefix operators ! <pl> [pl] <ep> [ep] K B.
// `->` is right-associative, `|`, `&` and `<->` left-associative. K and B are
// expanded while parsing, so the result never contains them as such.
// Throws SyntaxError / UnknownOperator.
Formula parse(const std::string& text);

// Canonical text; parse(print(f)) == f for every formula f, hence
// parse(print(desugar(f))) == desugar(f). BoxEp prints as `K`, and the
// pattern <pl>[pl]phi prints as `B phi`.
std::string print(const Formula& f);

// Rewrites every derived connective away, leaving only Atom, Not, Or,
// DiaPl and DiaEp. Idempotent; the evaluator runs on this form.
Formula desugar(const Formula& f);

std::set<std::string> atoms(const Formula& f);

// True iff f contains no modal operator.
bool is_propositional(const Formula& f);

}  // namespace abducer
