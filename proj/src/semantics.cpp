#include "abducer/semantics.hpp"

#include "abducer/errors.hpp"

namespace abducer {

namespace {

// Works on desugared formulas: Atom, Not, Or, DiaPl, DiaEp only.
bool eval_primitive(const PlausibilityModel& m, const World& w, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return w.atoms.count(f.atom_name()) > 0;
    case Kind::Not:
      return !eval_primitive(m, w, f.left());
    case Kind::Or:
      return eval_primitive(m, w, f.left()) || eval_primitive(m, w, f.right());
    case Kind::DiaPl:
      for (const World& u : m.worlds)
        if (m.leq_holds(w.id, u.id) && eval_primitive(m, u, f.left())) return true;
      return false;
    case Kind::DiaEp:
      for (const World& u : m.worlds)
        if ((m.leq_holds(w.id, u.id) || m.leq_holds(u.id, w.id)) &&
            eval_primitive(m, u, f.left()))
          return true;
      return false;
    default:
      // desugar() removed these
      return eval_primitive(m, w, desugar(f));
  }
}

}  // namespace

bool eval(const PlausibilityModel& m, const std::string& w, const Formula& f) {
  return eval_primitive(m, m.world(w), desugar(f));
}

bool valid_in_model(const PlausibilityModel& m, const Formula& f) {
  Formula d = desugar(f);
  for (const World& w : m.worlds)
    if (!eval_primitive(m, w, d)) return false;
  return true;
}

bool knows(const PlausibilityModel& m, const std::string& w, const Formula& f) {
  return eval(m, w, knowledge(f));
}

bool believes(const PlausibilityModel& m, const std::string& w, const Formula& f) {
  return eval(m, w, belief(f));
}

}  // namespace abducer
