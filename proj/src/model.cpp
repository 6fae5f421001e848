#include "abducer/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "abducer/errors.hpp"

namespace abducer {

bool PlausibilityModel::has_world(const std::string& id) const {
  return std::any_of(worlds.begin(), worlds.end(),
                     [&](const World& w) { return w.id == id; });
}

const World& PlausibilityModel::world(const std::string& id) const {
  for (const World& w : worlds)
    if (w.id == id) return w;
  throw UnknownWorld(id);
}

std::vector<Violation> validate(const PlausibilityModel& m) {
  std::vector<Violation> out;
  if (m.worlds.empty()) {
    out.push_back({"nonempty", {}});
    return out;
  }

  std::unordered_set<std::string> ids;
  for (const World& w : m.worlds) {
    if (w.id.empty()) out.push_back({"empty_id", {}});
    if (!ids.insert(w.id).second) out.push_back({"duplicate_world", {w.id}});
  }

  bool refs_ok = true;
  for (const auto& [a, b] : m.leq) {
    if (!ids.count(a) || !ids.count(b)) {
      out.push_back({"unknown_world", {a, b}});
      refs_ok = false;
    }
  }
  if (m.point && !ids.count(*m.point)) out.push_back({"unknown_point", {*m.point}});
  if (!refs_ok) return out;  // order properties are meaningless with stray ids

  for (const World& w : m.worlds)
    if (!m.leq_holds(w.id, w.id)) out.push_back({"reflexivity", {w.id}});

  for (const auto& [a, b] : m.leq)
    for (const World& w : m.worlds)
      if (m.leq_holds(b, w.id) && !m.leq_holds(a, w.id)) {
        out.push_back({"transitivity", {a, b, w.id}});
        goto transitivity_done;  // one witness is enough for diagnostics
      }
transitivity_done:

  // Local connectedness: two worlds comparable to a common third must be
  // comparable to each other.
  for (const World& w : m.worlds)
    for (const World& u : m.worlds)
      for (const World& v : m.worlds) {
        bool wv = m.leq_holds(w.id, v.id) || m.leq_holds(v.id, w.id);
        bool uv = m.leq_holds(u.id, v.id) || m.leq_holds(v.id, u.id);
        bool wu = m.leq_holds(w.id, u.id) || m.leq_holds(u.id, w.id);
        if (wv && uv && !wu) {
          out.push_back({"local_connectedness", {w.id, u.id, v.id}});
          return out;
        }
      }
  return out;
}

Relation epistemic_relation(const PlausibilityModel& m) {
  Relation out = m.leq;
  for (const auto& [a, b] : m.leq) out.insert({b, a});
  return out;
}

Relation equal_plausibility(const PlausibilityModel& m) {
  Relation out;
  for (const auto& [a, b] : m.leq)
    if (m.leq_holds(b, a)) out.insert({a, b});
  return out;
}

std::vector<std::string> canonical_order(const PlausibilityModel& m) {
  std::vector<std::string> order;
  order.reserve(m.worlds.size());
  for (const World& w : m.worlds) order.push_back(w.id);
  std::sort(order.begin(), order.end());
  return order;
}

RelationMatrix encode_relation(const Relation& rel, const std::vector<std::string>& order) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;

  RelationMatrix mx{order, std::vector<std::uint8_t>(order.size() * order.size(), 0)};
  for (const auto& [a, b] : rel) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownWorld(a);
    if (ib == index.end()) throw UnknownWorld(b);
    mx.bits[ia->second * order.size() + ib->second] = 1;
  }
  return mx;
}

Relation decode_relation(const RelationMatrix& mx) {
  Relation out;
  for (std::size_t i = 0; i < mx.size(); ++i)
    for (std::size_t j = 0; j < mx.size(); ++j)
      if (mx.at(i, j)) out.insert({mx.order[i], mx.order[j]});
  return out;
}

std::string matrix_bits(const RelationMatrix& mx) {
  std::string s;
  s.reserve(mx.bits.size());
  for (std::uint8_t b : mx.bits) s += b ? '1' : '0';
  return s;
}

}  // namespace abducer
