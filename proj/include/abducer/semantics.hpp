#pragma once

#include "abducer/formula.hpp"
#include "abducer/model.hpp"

namespace abducer {

// Truth of f at world w. Atoms via V(w) (absent atoms are false), Boolean
// connectives classically, <pl> existentially over leq, <ep> existentially
// over the symmetric closure of leq. Throws UnknownWorld.
bool eval(const PlausibilityModel& m, const std::string& w, const Formula& f);

// True iff f holds at every world of m.
bool valid_in_model(const PlausibilityModel& m, const Formula& f);

// K f == [ep] f and B f == <pl> [pl] f, evaluated through eval.
bool knows(const PlausibilityModel& m, const std::string& w, const Formula& f);
bool believes(const PlausibilityModel& m, const std::string& w, const Formula& f);

}  // namespace abducer
