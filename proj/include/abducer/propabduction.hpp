#pragma once

#include <set>
#include <string>
#include <vector>

#include "abducer/formula.hpp"

namespace abducer {

// Truth-table bound: consequence checks enumerate 2^n valuations.
constexpr std::size_t kMaxTruthTableAtoms = 16;

struct PropLiteral {
  std::string atom;
  bool positive = true;

  auto operator<=>(const PropLiteral&) const = default;
};

using Clause = std::set<PropLiteral>;

// A conjunction of disjunctions of literals, kept in minimal form:
// tautological clauses removed, subsumed clauses removed, canonical
// set ordering throughout.
struct ClausalTheory {
  std::set<Clause> clauses;

  bool operator==(const ClausalTheory&) const = default;
};

// True iff every valuation satisfying all of theta satisfies phi.
// Throws TooManyAtoms past the bound, NotPropositional on modal input.
bool entails(const std::vector<Formula>& theta, const Formula& phi);

enum class ClassicalKind { Novel, Anomalous, NotAProblem };

// NotAProblem if theta entails phi; Anomalous if theta entails !phi;
// Novel otherwise.
ClassicalKind classify_problem(const std::vector<Formula>& theta, const Formula& phi);

struct SolutionFlags {
  bool plain = false;        // theta, alpha |= phi
  bool consistent = false;   // theta + alpha satisfiable
  bool explanatory = false;  // alpha alone does not entail phi
};

SolutionFlags check_solution(const std::vector<Formula>& theta, const Formula& phi,
                             const Formula& alpha);

// CNF by distribution, then tautology removal, subsumption reduction and
// canonical sorting. Logically equivalent to the input conjunction.
ClausalTheory to_minimal_clausal(const std::vector<Formula>& theta);

// Fixed-width serialization: per clause (in canonical order), 2 bits per
// atom of atom_order — 00 absent, 01 positive, 10 negative. Throws
// UnknownAtom when a clause mentions an atom outside atom_order.
std::string clausal_bits(const ClausalTheory& t, const std::vector<std::string>& atom_order);

// "{{!p, q}, {r}}"-style rendering in canonical order.
std::string print_clausal(const ClausalTheory& t);

}  // namespace abducer
