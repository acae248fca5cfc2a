#include "envelope/strategy.hpp"

#include <cmath>
#include <sstream>

namespace envelope {

namespace {

constexpr int kDecayRoundingDigits = 12;

const Amount* known_mean(const PriorKnowledge& knowledge) {
    if (const auto* m = std::get_if<MeanOnly>(&knowledge))
        return &m->mean_y;
    return nullptr;
}

const FiniteBasePrior* known_prior(const PriorKnowledge& knowledge) {
    if (const auto* f = std::get_if<FullPrior>(&knowledge))
        return &f->prior;
    return nullptr;
}

void require_open(const Observation& obs, const char* name) {
    if (!obs.is_open())
        throw MissingObservation(std::string(name) + " requires an opened envelope");
}

} // namespace

bool is_oblivious(const StrategySpec& spec) {
    return std::holds_alternative<Never>(spec) || std::holds_alternative<Always>(spec) ||
           std::holds_alternative<Blind>(spec);
}

std::string strategy_name(const StrategySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Never>) {
                return "never";
            } else if constexpr (std::is_same_v<T, Always>) {
                return "always";
            } else if constexpr (std::is_same_v<T, Blind>) {
                return "blind(" + s.p.value().str() + ")";
            } else if constexpr (std::is_same_v<T, MeanThreshold>) {
                return "mean_threshold";
            } else if constexpr (std::is_same_v<T, BoundsRule>) {
                return "bounds_rule(" + s.fallback.value().str() + ")";
            } else if constexpr (std::is_same_v<T, BayesArgmax>) {
                return "bayes_argmax";
            } else if constexpr (std::is_same_v<T, BayesMixed>) {
                return "bayes_mixed";
            } else {
                if (const auto* e = std::get_if<MonotoneDecreasing::ExponentialDecay>(&s.shape)) {
                    std::ostringstream os;
                    os << "monotone_decreasing(exponential_decay:" << e->rate << ")";
                    return os.str();
                }
                return "monotone_decreasing(reciprocal)";
            }
        },
        spec);
}

void validate_strategy_inputs(const StrategySpec& spec, EnvelopeMode mode,
                              const PriorKnowledge& knowledge) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            (void)s;
            if constexpr (std::is_same_v<T, Never> || std::is_same_v<T, Always> ||
                          std::is_same_v<T, Blind>) {
                return; // oblivious rules accept anything
            } else {
                if (mode != EnvelopeMode::Open)
                    throw MissingObservation(strategy_name(spec) +
                                             " requires an opened envelope");
                if constexpr (std::is_same_v<T, MeanThreshold>) {
                    if (!known_mean(knowledge) && !known_prior(knowledge))
                        throw MissingPrior(
                            "mean_threshold requires knowledge of the mean base amount");
                } else if constexpr (std::is_same_v<T, BoundsRule>) {
                    if (!std::holds_alternative<Bounds>(knowledge))
                        throw MissingPrior(
                            "bounds_rule requires known bounds on the base amount");
                } else if constexpr (std::is_same_v<T, BayesArgmax> ||
                                     std::is_same_v<T, BayesMixed>) {
                    if (!known_prior(knowledge))
                        throw MissingPrior(strategy_name(spec) +
                                           " requires the full base-amount prior");
                }
            }
        },
        spec);
}

SwitchProbability switch_probability(const StrategySpec& spec, const Observation& obs,
                                     const PriorKnowledge& knowledge) {
    return std::visit(
        [&](const auto& s) -> SwitchProbability {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Never>) {
                return SwitchProbability::never();
            } else if constexpr (std::is_same_v<T, Always>) {
                return SwitchProbability::always();
            } else if constexpr (std::is_same_v<T, Blind>) {
                return s.p;
            } else if constexpr (std::is_same_v<T, MeanThreshold>) {
                require_open(obs, "mean_threshold");
                const Amount* mean = known_mean(knowledge);
                Amount from_prior;
                if (!mean) {
                    const FiniteBasePrior* prior = known_prior(knowledge);
                    if (!prior)
                        throw MissingPrior(
                            "mean_threshold requires knowledge of the mean base amount");
                    from_prior = prior_mean(*prior);
                    mean = &from_prior;
                }
                Rational threshold = *mean * Rational(3, 2);
                return obs.amount().value() < threshold ? SwitchProbability::always()
                                                        : SwitchProbability::never();
            } else if constexpr (std::is_same_v<T, BoundsRule>) {
                require_open(obs, "bounds_rule");
                const auto* bounds = std::get_if<Bounds>(&knowledge);
                if (!bounds)
                    throw MissingPrior("bounds_rule requires known bounds on the base amount");
                const Amount& x = obs.amount();
                if (bounds->y_max && x > *bounds->y_max)
                    return SwitchProbability::never(); // surely holding the doubled amount
                if (bounds->y_min && x < bounds->y_min->doubled())
                    return SwitchProbability::always(); // surely holding the base amount
                return s.fallback;
            } else if constexpr (std::is_same_v<T, BayesArgmax>) {
                require_open(obs, "bayes_argmax");
                const FiniteBasePrior* prior = known_prior(knowledge);
                if (!prior)
                    throw MissingPrior("bayes_argmax requires the full base-amount prior");
                // Keep on ties: both actions are worth the same.
                return conditional_gain(*prior, obs.amount()).is_positive()
                           ? SwitchProbability::always()
                           : SwitchProbability::never();
            } else if constexpr (std::is_same_v<T, BayesMixed>) {
                require_open(obs, "bayes_mixed");
                const FiniteBasePrior* prior = known_prior(knowledge);
                if (!prior)
                    throw MissingPrior("bayes_mixed requires the full base-amount prior");
                return SwitchProbability(posterior(*prior, obs.amount()).p_lower);
            } else {
                require_open(obs, "monotone_decreasing");
                const Amount& x = obs.amount();
                if (const auto* decay =
                        std::get_if<MonotoneDecreasing::ExponentialDecay>(&s.shape)) {
                    // Transcendental output; pinned to a rational by rounding
                    // at a fixed number of decimal digits so exact and
                    // sampled evaluations see the identical value.
                    double g = std::exp(-decay->rate * x.to_double());
                    return SwitchProbability(
                        Rational::from_double_rounded(g, kDecayRoundingDigits));
                }
                // 1/(1+x) is itself rational; evaluated exactly.
                return SwitchProbability(Rational(1) / (Rational(1) + x.value()));
            }
        },
        spec);
}

} // namespace envelope
