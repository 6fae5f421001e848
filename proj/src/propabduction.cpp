#include "abducer/propabduction.hpp"

#include <algorithm>
#include <map>

#include "abducer/errors.hpp"

namespace abducer {

namespace {

using Assignment = std::map<std::string, bool>;

bool eval_prop(const Formula& f, const Assignment& v) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.atom_name());
      return it != v.end() && it->second;
    }
    case Kind::Not:
      return !eval_prop(f.left(), v);
    case Kind::Or:
      return eval_prop(f.left(), v) || eval_prop(f.right(), v);
    case Kind::And:
      return eval_prop(f.left(), v) && eval_prop(f.right(), v);
    case Kind::Implies:
      return !eval_prop(f.left(), v) || eval_prop(f.right(), v);
    case Kind::Iff:
      return eval_prop(f.left(), v) == eval_prop(f.right(), v);
    default:
      throw NotPropositional(print(f));
  }
}

std::vector<std::string> collect_atoms(const std::vector<Formula>& theta,
                                       const Formula* extra1 = nullptr,
                                       const Formula* extra2 = nullptr) {
  std::set<std::string> names;
  auto add = [&names](const Formula& f) {
    if (!is_propositional(f)) throw NotPropositional(print(f));
    auto a = atoms(f);
    names.insert(a.begin(), a.end());
  };
  for (const Formula& f : theta) add(f);
  if (extra1) add(*extra1);
  if (extra2) add(*extra2);
  if (names.size() > kMaxTruthTableAtoms)
    throw TooManyAtoms(names.size(), kMaxTruthTableAtoms);
  return {names.begin(), names.end()};
}

// Calls fn for every valuation over `names`; stops early when fn returns false.
template <typename Fn>
void for_each_valuation(const std::vector<std::string>& names, Fn&& fn) {
  const std::size_t count = std::size_t{1} << names.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Assignment v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (mask >> i) & 1;
    if (!fn(v)) return;
  }
}

bool entails_over(const std::vector<std::string>& names, const std::vector<Formula>& theta,
                  const Formula& phi) {
  bool holds = true;
  for_each_valuation(names, [&](const Assignment& v) {
    for (const Formula& f : theta)
      if (!eval_prop(f, v)) return true;  // valuation does not model theta
    if (!eval_prop(phi, v)) {
      holds = false;
      return false;
    }
    return true;
  });
  return holds;
}

bool satisfiable_over(const std::vector<std::string>& names,
                      const std::vector<Formula>& theta) {
  bool sat = false;
  for_each_valuation(names, [&](const Assignment& v) {
    for (const Formula& f : theta)
      if (!eval_prop(f, v)) return true;
    sat = true;
    return false;
  });
  return sat;
}

}  // namespace

bool entails(const std::vector<Formula>& theta, const Formula& phi) {
  return entails_over(collect_atoms(theta, &phi), theta, phi);
}

ClassicalKind classify_problem(const std::vector<Formula>& theta, const Formula& phi) {
  auto names = collect_atoms(theta, &phi);
  if (entails_over(names, theta, phi)) return ClassicalKind::NotAProblem;
  if (entails_over(names, theta, f_not(phi))) return ClassicalKind::Anomalous;
  return ClassicalKind::Novel;
}

SolutionFlags check_solution(const std::vector<Formula>& theta, const Formula& phi,
                             const Formula& alpha) {
  auto names = collect_atoms(theta, &phi, &alpha);
  std::vector<Formula> with_alpha = theta;
  with_alpha.push_back(alpha);
  SolutionFlags flags;
  flags.plain = entails_over(names, with_alpha, phi);
  flags.consistent = satisfiable_over(names, with_alpha);
  flags.explanatory = !entails_over(names, {alpha}, phi);
  return flags;
}

// ---------------------------------------------------------------------------
// Clausal normalization

namespace {

// Negation normal form over And/Or/literals; sugar expanded on the way.
Formula nnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Kind::Atom:
      return negated ? f_not(f) : f;
    case Kind::Not:
      return nnf(f.left(), !negated);
    case Kind::Or:
      return negated ? f_and(nnf(f.left(), true), nnf(f.right(), true))
                     : f_or(nnf(f.left(), false), nnf(f.right(), false));
    case Kind::And:
      return negated ? f_or(nnf(f.left(), true), nnf(f.right(), true))
                     : f_and(nnf(f.left(), false), nnf(f.right(), false));
    case Kind::Implies:
      return nnf(f_or(f_not(f.left()), f.right()), negated);
    case Kind::Iff:
      return nnf(f_and(implies(f.left(), f.right()), implies(f.right(), f.left())), negated);
    default:
      throw NotPropositional(print(f));
  }
}

std::set<Clause> cnf_clauses(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return {Clause{{f.atom_name(), true}}};
    case Kind::Not:  // NNF guarantees the child is an atom
      return {Clause{{f.left().atom_name(), false}}};
    case Kind::And: {
      auto left = cnf_clauses(f.left());
      auto right = cnf_clauses(f.right());
      left.insert(right.begin(), right.end());
      return left;
    }
    case Kind::Or: {
      auto left = cnf_clauses(f.left());
      auto right = cnf_clauses(f.right());
      std::set<Clause> out;
      for (const Clause& a : left)
        for (const Clause& b : right) {
          Clause c = a;
          c.insert(b.begin(), b.end());
          out.insert(std::move(c));
        }
      return out;
    }
    default:
      throw NotPropositional(print(f));
  }
}

bool tautological(const Clause& c) {
  for (const PropLiteral& l : c)
    if (c.count({l.atom, !l.positive})) return true;
  return false;
}

}  // namespace

ClausalTheory to_minimal_clausal(const std::vector<Formula>& theta) {
  collect_atoms(theta);  // propositional + bound check

  std::set<Clause> all;
  for (const Formula& f : theta) {
    auto clauses = cnf_clauses(nnf(f, false));
    all.insert(clauses.begin(), clauses.end());
  }

  std::set<Clause> kept;
  for (const Clause& c : all) {
    if (tautological(c)) continue;
    bool subsumed = false;
    for (const Clause& d : all) {
      if (d == c || tautological(d)) continue;
      if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        subsumed = true;  // c is a strict superset of d
        break;
      }
    }
    if (!subsumed) kept.insert(c);
  }
  return {kept};
}

std::string clausal_bits(const ClausalTheory& t, const std::vector<std::string>& atom_order) {
  std::string out;
  for (const Clause& c : t.clauses) {
    std::map<std::string, bool> polarity;
    for (const PropLiteral& l : c) {
      if (std::find(atom_order.begin(), atom_order.end(), l.atom) == atom_order.end())
        throw UnknownAtom(l.atom);
      polarity[l.atom] = l.positive;
    }
    for (const std::string& a : atom_order) {
      auto it = polarity.find(a);
      if (it == polarity.end())
        out += "00";
      else
        out += it->second ? "01" : "10";
    }
  }
  return out;
}

std::string print_clausal(const ClausalTheory& t) {
  std::string out = "{";
  bool first_clause = true;
  for (const Clause& c : t.clauses) {
    if (!first_clause) out += ", ";
    first_clause = false;
    out += "{";
    bool first = true;
    for (const PropLiteral& l : c) {
      if (!first) out += ", ";
      first = false;
      if (!l.positive) out += "!";
      out += l.atom;
    }
    out += "}";
  }
  out += "}";
  return out;
}

}  // namespace abducer
