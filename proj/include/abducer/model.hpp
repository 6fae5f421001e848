#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace abducer {

using IdPair = std::pair<std::string, std::string>;
using Relation = std::set<IdPair>;

struct World {
  std::string id;
  std::set<std::string> atoms;  // V(w): atoms true at this world

  bool operator==(const World&) const = default;
};

// Finite single-agent plausibility model: worlds with an atomic valuation,
// a plausibility preorder `leq` ((w, u) in leq reads "u is at least as
// plausible as w"), and an optional designated world. Converse
// well-foundedness holds automatically on finite models, so validate()
// checks reflexivity, transitivity and local connectedness only.
struct PlausibilityModel {
  std::vector<World> worlds;
  Relation leq;
  std::optional<std::string> point;

  bool has_world(const std::string& id) const;
  const World& world(const std::string& id) const;  // throws UnknownWorld
  bool leq_holds(const std::string& a, const std::string& b) const {
    return leq.count({a, b}) > 0;
  }

  bool operator==(const PlausibilityModel&) const = default;
};

struct Violation {
  std::string property;             // "nonempty", "duplicate_world", "unknown_world",
                                    // "reflexivity", "transitivity", "local_connectedness",
                                    // "unknown_point"
  std::vector<std::string> witness; // world ids involved
};

// Empty result iff the model satisfies every plausibility-model invariant.
std::vector<Violation> validate(const PlausibilityModel& m);

// ~ := leq union its converse; an equivalence relation on valid models.
Relation epistemic_relation(const PlausibilityModel& m);

// ≃ := leq intersected with its converse.
Relation equal_plausibility(const PlausibilityModel& m);

// World ids sorted lexicographically; the canonical matrix order.
std::vector<std::string> canonical_order(const PlausibilityModel& m);

// Square binary matrix over an ordered world list: bit (i, j) is set iff
// (order[i], order[j]) is in the encoded relation.
struct RelationMatrix {
  std::vector<std::string> order;
  std::vector<std::uint8_t> bits;  // row-major, size order.size()^2

  std::size_t size() const { return order.size(); }
  bool at(std::size_t i, std::size_t j) const { return bits[i * order.size() + j] != 0; }

  bool operator==(const RelationMatrix&) const = default;
};

// Throws UnknownWorld if a pair mentions an id outside `order`.
RelationMatrix encode_relation(const Relation& rel, const std::vector<std::string>& order);

// Reads the 1-cells back; inverse of encode_relation.
Relation decode_relation(const RelationMatrix& mx);

// Row-major '0'/'1' string of length n^2.
std::string matrix_bits(const RelationMatrix& mx);

}  // namespace abducer
