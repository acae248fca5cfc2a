#pragma once

#include "envelope/model.hpp"
#include "envelope/strategy.hpp"

namespace envelope {

// Exact expectations for one finite-prior scenario. The baseline is
// (3/2)*E[Y]; the correction is E[V] minus that baseline, zero for every
// observation-blind strategy.
struct ExactReport {
    Amount e_y;
    Amount e_x;
    Amount e_v;
    Amount baseline;
    Rational correction;
};

// Full enumeration over (atom, pick) pairs at weight f1(y)/2 each.
// Exact rational arithmetic end to end; atoms are visited in ascending
// order so results are identical however the work is scheduled.
ExactReport exact_value(const FiniteBasePrior& prior, const StrategySpec& strategy,
                        const PriorKnowledge& knowledge,
                        EnvelopeMode mode = EnvelopeMode::Open);

// Closed form of the same correction:
//   (1/2) * sum_y f1(y) * y * (s(y) - s(2y))
// where s is the strategy's switch probability at the opened amount.
// Must match exact_value(...).correction exactly; the two routes check
// each other.
Rational decompose_correction(const FiniteBasePrior& prior, const StrategySpec& strategy,
                              const PriorKnowledge& knowledge,
                              EnvelopeMode mode = EnvelopeMode::Open);

// The fallacious open-envelope value (1-p)*x + p*(5/4)*x that makes any
// switching look profitable. Kept for the paradox report.
Amount naive_value(const Amount& x, const SwitchProbability& p_switch);

// The corrected open-envelope value (1-p)*x + p*(3/2)*E[Y].
Amount correct_open_value(const Amount& x, const SwitchProbability& p_switch,
                          const Amount& e_y);

} // namespace envelope
