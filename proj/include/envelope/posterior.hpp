#pragma once

#include "envelope/model.hpp"
#include "envelope/rational.hpp"

namespace envelope {

// Exact posterior over which envelope the observed amount came from:
// p_lower = P(we hold the smaller amount | x), p_higher its complement.
struct Posterior {
    Rational p_lower;
    Rational p_higher;
};

// Weights f1(x) : f1(x/2). Throws ImpossibleObservation when both vanish.
Posterior posterior(const FiniteBasePrior& prior, const Amount& x);

// Expected payoff change from switching at observation x:
// P(lower|x)*x - P(higher|x)*(x/2). Signed.
Rational conditional_gain(const FiniteBasePrior& prior, const Amount& x);

} // namespace envelope
