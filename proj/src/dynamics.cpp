#include "abducer/dynamics.hpp"

#include <unordered_map>

#include "abducer/errors.hpp"
#include "abducer/semantics.hpp"

namespace abducer {

PlausibilityModel observe(const PlausibilityModel& m, const Formula& psi) {
  PlausibilityModel out;
  std::unordered_map<std::string, bool> survives;
  for (const World& w : m.worlds) {
    bool keep = eval(m, w.id, psi);
    survives[w.id] = keep;
    if (keep) out.worlds.push_back(w);
  }
  if (out.worlds.empty()) throw EmptyObservation(print(psi));

  for (const auto& [a, b] : m.leq)
    if (survives[a] && survives[b]) out.leq.insert({a, b});
  if (m.point && survives[*m.point]) out.point = m.point;
  return out;
}

PlausibilityModel conjecture(const PlausibilityModel& m, const Formula& psi) {
  std::unordered_map<std::string, bool> sat;
  for (const World& w : m.worlds) sat[w.id] = eval(m, w.id, psi);

  PlausibilityModel out{m.worlds, {}, m.point};
  for (const auto& [a, b] : m.leq) {
    if (sat[b]) out.leq.insert({a, b});         // w <= u and psi at u
    if (!sat[a]) out.leq.insert({a, b});        // w <= u and not psi at w
  }
  // w ~ u, not psi at w, psi at u
  for (const auto& [a, b] : m.leq) {
    if (!sat[a] && sat[b]) out.leq.insert({a, b});
    if (!sat[b] && sat[a]) out.leq.insert({b, a});
  }
  return out;
}

}  // namespace abducer
