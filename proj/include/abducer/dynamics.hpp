#pragma once

#include "abducer/formula.hpp"
#include "abducer/model.hpp"

namespace abducer {

// Restricts the model to the worlds where psi holds, keeping the valuation
// and the plausibility order among survivors. The point is kept iff it
// survives. Throws EmptyObservation when no world satisfies psi.
PlausibilityModel observe(const PlausibilityModel& m, const Formula& psi);

// Radical upgrade: keeps worlds and valuation, reorders plausibility so that
// within each epistemic class every psi-world (as evaluated before the
// upgrade) becomes more plausible than every non-psi-world. Order inside the
// psi block and inside the non-psi block is unchanged. Total operation.
PlausibilityModel conjecture(const PlausibilityModel& m, const Formula& psi);

}  // namespace abducer
