// Shared fixtures and independent oracles for the test suites. Everything in
// here deliberately avoids the library's own evaluation paths so tests stay
// differential: extension-set semantics instead of the recursive evaluator,
// bitmask truth tables instead of the propositional engine, a substring-based
// LZ76 parser instead of the copy-extension one.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abducer/formula.hpp"
#include "abducer/model.hpp"

namespace testsupport {

using namespace abducer;

// Fig. 1: w2 more plausible than w1; p everywhere, q only at w2.
inline PlausibilityModel fig1() {
  PlausibilityModel m;
  m.worlds = {{"w1", {"p"}}, {"w2", {"p", "q"}}};
  m.leq = {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w2"}};
  m.point = "w1";
  return m;
}

// Fig. 2 left: three equi-plausible worlds {p,q}, {q}, {}.
inline PlausibilityModel fig2_left() {
  PlausibilityModel m;
  m.worlds = {{"w1", {"p", "q"}}, {"w2", {"q"}}, {"w3", {}}};
  for (const char* a : {"w1", "w2", "w3"})
    for (const char* b : {"w1", "w2", "w3"}) m.leq.insert({a, b});
  m.point = "w1";
  return m;
}

// ---------------------------------------------------------------------------
// Random generation

// Valid by construction: worlds are split into epistemic classes and ordered
// inside each class by an integer plausibility level, which yields a
// reflexive, transitive, locally connected relation.
inline PlausibilityModel random_valid_model(std::mt19937& rng, int max_worlds = 6,
                                            int max_atoms = 3) {
  std::uniform_int_distribution<int> nw(1, max_worlds);
  const int n = nw(rng);
  std::uniform_int_distribution<int> cls(0, std::max(0, n / 2));
  std::uniform_int_distribution<int> lvl(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  static const std::vector<std::string> pool = {"p", "q", "r"};

  PlausibilityModel m;
  std::vector<int> klass(n), level(n);
  for (int i = 0; i < n; ++i) {
    World w;
    w.id = "w" + std::to_string(i + 1);
    for (int a = 0; a < max_atoms; ++a)
      if (coin(rng)) w.atoms.insert(pool[a]);
    m.worlds.push_back(std::move(w));
    klass[i] = cls(rng);
    level[i] = lvl(rng);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (klass[i] == klass[j] && level[i] <= level[j])
        m.leq.insert({m.worlds[i].id, m.worlds[j].id});
  m.point = m.worlds[0].id;
  return m;
}

inline Formula random_formula(std::mt19937& rng, int depth, bool allow_modal = true,
                              const std::vector<std::string>& pool = {"p", "q", "r"}) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(pool.size()) - 1);
  if (depth <= 0) return atom(pool[pick_atom(rng)]);
  std::uniform_int_distribution<int> pick(0, allow_modal ? 11 : 5);
  switch (pick(rng)) {
    case 0: return atom(pool[pick_atom(rng)]);
    case 1: return f_not(random_formula(rng, depth - 1, allow_modal, pool));
    case 2:
      return f_or(random_formula(rng, depth - 1, allow_modal, pool),
                  random_formula(rng, depth - 1, allow_modal, pool));
    case 3:
      return f_and(random_formula(rng, depth - 1, allow_modal, pool),
                   random_formula(rng, depth - 1, allow_modal, pool));
    case 4:
      return implies(random_formula(rng, depth - 1, allow_modal, pool),
                     random_formula(rng, depth - 1, allow_modal, pool));
    case 5:
      return iff(random_formula(rng, depth - 1, allow_modal, pool),
                 random_formula(rng, depth - 1, allow_modal, pool));
    case 6: return dia_pl(random_formula(rng, depth - 1, allow_modal, pool));
    case 7: return box_pl(random_formula(rng, depth - 1, allow_modal, pool));
    case 8: return dia_ep(random_formula(rng, depth - 1, allow_modal, pool));
    case 9: return box_ep(random_formula(rng, depth - 1, allow_modal, pool));
    case 10: return knowledge(random_formula(rng, depth - 1, allow_modal, pool));
    default: return belief(random_formula(rng, depth - 1, allow_modal, pool));
  }
}

inline std::string random_bits(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::string s(n, '0');
  for (char& c : s) c = coin(rng) ? '1' : '0';
  return s;
}

// ---------------------------------------------------------------------------
// Reference evaluator: bottom-up extension sets over world indices.

inline std::set<std::size_t> extension(const PlausibilityModel& m, const Formula& f) {
  const std::size_t n = m.worlds.size();
  auto index_ok = [&](std::size_t i, std::size_t j, bool epistemic) {
    bool fwd = m.leq_holds(m.worlds[i].id, m.worlds[j].id);
    bool bwd = m.leq_holds(m.worlds[j].id, m.worlds[i].id);
    return epistemic ? (fwd || bwd) : fwd;
  };
  Formula d = desugar(f);
  auto go = [&](const Formula& g, auto&& self) -> std::set<std::size_t> {
    std::set<std::size_t> out;
    switch (g.kind()) {
      case Kind::Atom:
        for (std::size_t i = 0; i < n; ++i)
          if (m.worlds[i].atoms.count(g.atom_name())) out.insert(i);
        return out;
      case Kind::Not: {
        auto sub = self(g.left(), self);
        for (std::size_t i = 0; i < n; ++i)
          if (!sub.count(i)) out.insert(i);
        return out;
      }
      case Kind::Or: {
        out = self(g.left(), self);
        auto r = self(g.right(), self);
        out.insert(r.begin(), r.end());
        return out;
      }
      case Kind::DiaPl:
      case Kind::DiaEp: {
        auto sub = self(g.left(), self);
        bool ep = g.kind() == Kind::DiaEp;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j : sub)
            if (index_ok(i, j, ep)) {
              out.insert(i);
              break;
            }
        return out;
      }
      default:
        return self(desugar(g), self);
    }
  };
  return go(d, go);
}

inline bool ref_eval(const PlausibilityModel& m, const std::string& w, const Formula& f) {
  auto ext = extension(m, f);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    if (m.worlds[i].id == w) return ext.count(i) > 0;
  return false;
}

// Belief oracle: f holds at every leq-maximal world of w's epistemic class.
inline bool oracle_believes(const PlausibilityModel& m, const std::string& w,
                            const Formula& f) {
  std::vector<std::string> cls;
  for (const World& u : m.worlds)
    if (m.leq_holds(w, u.id) || m.leq_holds(u.id, w)) cls.push_back(u.id);
  std::vector<std::string> maximal;
  for (const std::string& u : cls) {
    bool is_max = true;
    for (const std::string& v : cls)
      if (m.leq_holds(u, v) && !m.leq_holds(v, u)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(u);
  }
  if (maximal.empty()) return false;  // cannot happen on valid finite models
  auto ext = extension(m, f);
  for (const std::string& u : maximal) {
    bool in = false;
    for (std::size_t i = 0; i < m.worlds.size(); ++i)
      if (m.worlds[i].id == u && ext.count(i)) in = true;
    if (!in) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Independent truth-table oracle for propositional formulas.

inline bool tt_eval(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.atom_name());
      return it != v.end() && it->second;
    }
    case Kind::Not: return !tt_eval(f.left(), v);
    case Kind::Or: return tt_eval(f.left(), v) || tt_eval(f.right(), v);
    case Kind::And: return tt_eval(f.left(), v) && tt_eval(f.right(), v);
    case Kind::Implies: return !tt_eval(f.left(), v) || tt_eval(f.right(), v);
    case Kind::Iff: return tt_eval(f.left(), v) == tt_eval(f.right(), v);
    default: throw std::logic_error("oracle applied to modal formula");
  }
}

// Every valuation over `names` satisfying theta satisfies phi.
inline bool oracle_entails(const std::vector<Formula>& theta, const Formula& phi,
                           const std::vector<std::string>& names) {
  for (std::uint32_t mask = 0; mask < (1u << names.size()); ++mask) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (mask >> i) & 1;
    bool all = true;
    for (const Formula& f : theta)
      if (!tt_eval(f, v)) {
        all = false;
        break;
      }
    if (all && !tt_eval(phi, v)) return false;
  }
  return true;
}

inline bool oracle_satisfiable(const std::vector<Formula>& theta,
                               const std::vector<std::string>& names) {
  for (std::uint32_t mask = 0; mask < (1u << names.size()); ++mask) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (mask >> i) & 1;
    bool all = true;
    for (const Formula& f : theta)
      if (!tt_eval(f, v)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Reference LZ76 parser: phrase ends at the first position where the current
// word stops occurring in the preceding text.

inline std::size_t ref_lz76(const std::string& s) {
  std::size_t i = 0, c = 0;
  const std::size_t n = s.size();
  while (i < n) {
    std::size_t j = i;
    while (j < n && s.substr(0, j).find(s.substr(i, j - i + 1)) != std::string::npos) ++j;
    ++c;
    i = j + 1;
  }
  return c;
}

}  // namespace testsupport
