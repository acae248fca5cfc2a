#include "envelope/exact.hpp"

namespace envelope {

namespace {

// Observation handed to the strategy for a world with observed amount x.
Observation observe(const Amount& x, EnvelopeMode mode) {
    return mode == EnvelopeMode::Open ? Observation::open(x) : Observation::closed();
}

} // namespace

ExactReport exact_value(const FiniteBasePrior& prior, const StrategySpec& strategy,
                        const PriorKnowledge& knowledge, EnvelopeMode mode) {
    validate_strategy_inputs(strategy, mode, knowledge);

    const Rational half(1, 2);
    Rational e_y_sum;
    Rational e_x_sum;
    Rational e_v_sum;
    for (const auto& atom : prior.atoms()) {
        const Rational weight = atom.prob * half;
        for (EnvelopePick pick : {EnvelopePick::Lower, EnvelopePick::Higher}) {
            auto [x, x_prime] = world_values(WorldState(atom.value, pick));
            Rational s = switch_probability(strategy, observe(x, mode), knowledge).value();
            e_x_sum += weight * x.value();
            e_v_sum += weight * ((Rational(1) - s) * x.value() + s * x_prime.value());
        }
        e_y_sum += atom.prob * atom.value.value();
    }

    Amount baseline(e_y_sum * Rational(3, 2));
    return ExactReport{Amount(e_y_sum), Amount(e_x_sum), Amount(e_v_sum), baseline,
                       e_v_sum - baseline.value()};
}

Rational decompose_correction(const FiniteBasePrior& prior, const StrategySpec& strategy,
                              const PriorKnowledge& knowledge, EnvelopeMode mode) {
    validate_strategy_inputs(strategy, mode, knowledge);

    Rational sum;
    for (const auto& atom : prior.atoms()) {
        Rational s_low =
            switch_probability(strategy, observe(atom.value, mode), knowledge).value();
        Rational s_high =
            switch_probability(strategy, observe(atom.value.doubled(), mode), knowledge)
                .value();
        sum += atom.prob * atom.value.value() * (s_low - s_high);
    }
    return sum * Rational(1, 2);
}

Amount naive_value(const Amount& x, const SwitchProbability& p_switch) {
    const Rational& p = p_switch.value();
    return Amount((Rational(1) - p) * x.value() + p * Rational(5, 4) * x.value());
}

Amount correct_open_value(const Amount& x, const SwitchProbability& p_switch,
                          const Amount& e_y) {
    if (!x.is_positive())
        throw ValidationError("observed amount must be strictly positive");
    if (!e_y.is_positive())
        throw ValidationError("mean base amount must be strictly positive");
    const Rational& p = p_switch.value();
    return Amount((Rational(1) - p) * x.value() + p * Rational(3, 2) * e_y.value());
}

} // namespace envelope
