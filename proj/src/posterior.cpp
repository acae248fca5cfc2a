#include "envelope/posterior.hpp"

namespace envelope {

Posterior posterior(const FiniteBasePrior& prior, const Amount& x) {
    if (!x.is_positive())
        throw ValidationError("observation must be strictly positive");
    Rational w_lower = prior.lookup(x);
    Rational w_higher = prior.lookup(x.halved());
    Rational total = w_lower + w_higher;
    if (total.is_zero())
        throw ImpossibleObservation("observation " + x.str() +
                                    " cannot arise under this prior");
    return Posterior{w_lower / total, w_higher / total};
}

Rational conditional_gain(const FiniteBasePrior& prior, const Amount& x) {
    Posterior p = posterior(prior, x);
    return p.p_lower * x.value() - p.p_higher * (x.value() / Rational(2));
}

} // namespace envelope
