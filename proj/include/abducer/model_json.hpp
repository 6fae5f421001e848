#pragma once

#include <string>

#include "abducer/model.hpp"

namespace abducer {

// Interchange format:
//   {"worlds":[{"id":"w1","atoms":["p"]}],
//    "leq":[["w1","w1"],["w1","w2"]],
//    "point":"w1"}
// `point` is optional. from_json validates unless `force` is set and throws
// InvalidModel listing the violations.
PlausibilityModel model_from_json(const std::string& text, bool force = false);

std::string model_to_json(const PlausibilityModel& m);

}  // namespace abducer
