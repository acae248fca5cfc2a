#pragma once

#include <optional>
#include <string>
#include <variant>

#include "envelope/model.hpp"
#include "envelope/posterior.hpp"
#include "envelope/rational.hpp"

namespace envelope {

// ---- What the player knows about the base-amount distribution ----

struct NoInformation {};

struct MeanOnly {
    explicit MeanOnly(Amount mean) : mean_y(std::move(mean)) {
        if (!mean_y.is_positive())
            throw ValidationError("known mean must be strictly positive");
    }
    Amount mean_y;
};

struct Bounds {
    Bounds(std::optional<Amount> min, std::optional<Amount> max)
        : y_min(std::move(min)), y_max(std::move(max)) {
        if (y_min && !y_min->is_positive())
            throw ValidationError("lower bound must be strictly positive");
        if (y_max && !y_max->is_positive())
            throw ValidationError("upper bound must be strictly positive");
        if (y_min && y_max && *y_min > *y_max)
            throw ValidationError("bounds require y_min <= y_max");
    }
    std::optional<Amount> y_min;
    std::optional<Amount> y_max;
};

struct FullPrior {
    explicit FullPrior(FiniteBasePrior p) : prior(std::move(p)) {}
    FiniteBasePrior prior;
};

using PriorKnowledge = std::variant<NoInformation, MeanOnly, Bounds, FullPrior>;

// ---- Switch probability: exact rational in [0, 1] ----

class SwitchProbability {
public:
    SwitchProbability() : value_(0) {}
    explicit SwitchProbability(Rational v) : value_(std::move(v)) {
        if (value_.is_negative() || value_ > Rational(1))
            throw ValidationError("switch probability must lie in [0, 1]");
    }
    static SwitchProbability never() { return SwitchProbability(Rational(0)); }
    static SwitchProbability always() { return SwitchProbability(Rational(1)); }

    const Rational& value() const { return value_; }
    Rational complement() const { return Rational(1) - value_; }
    double to_double() const { return value_.to_double(); }

    friend bool operator==(const SwitchProbability&, const SwitchProbability&) = default;

private:
    Rational value_;
};

// ---- The switching rules ----

struct Never {};
struct Always {};

// Switch with a fixed probability, blind to the observation.
struct Blind {
    explicit Blind(SwitchProbability prob) : p(std::move(prob)) {}
    SwitchProbability p;
};

// Switch iff x < (3/2) * E[Y]; keep on ties.
struct MeanThreshold {};

// Certainty rules from known support bounds; a fixed fallback in between.
struct BoundsRule {
    explicit BoundsRule(SwitchProbability fb) : fallback(std::move(fb)) {}
    SwitchProbability fallback;
};

// Switch iff the exact conditional gain of switching is positive.
struct BayesArgmax {};

// Switch with probability P(lower | x).
struct BayesMixed {};

// Strictly decreasing switch probability in the observed amount; probes the
// boundary between oblivious and observation-dependent rules.
struct MonotoneDecreasing {
    struct ExponentialDecay {
        explicit ExponentialDecay(double r) : rate(r) {
            if (!(rate > 0.0))
                throw ValidationError("exponential decay rate must be positive");
        }
        double rate;
    };
    struct Reciprocal {};

    using Shape = std::variant<ExponentialDecay, Reciprocal>;
    explicit MonotoneDecreasing(Shape s) : shape(std::move(s)) {}
    Shape shape;
};

using StrategySpec = std::variant<Never, Always, Blind, MeanThreshold, BoundsRule,
                                  BayesArgmax, BayesMixed, MonotoneDecreasing>;

// Constant in the observation (Never / Always / Blind).
bool is_oblivious(const StrategySpec& spec);

// Canonical name, stable for tables and tie-breaking.
std::string strategy_name(const StrategySpec& spec);

// Checks the strategy's information requirements against the envelope mode
// and knowledge without evaluating anything. Throws MissingObservation or
// MissingPrior naming the unmet requirement.
void validate_strategy_inputs(const StrategySpec& spec, EnvelopeMode mode,
                              const PriorKnowledge& knowledge);

// The switch probability this strategy assigns to the given observation and
// knowledge. Pure; throws the validation errors above when misconfigured.
SwitchProbability switch_probability(const StrategySpec& spec, const Observation& obs,
                                     const PriorKnowledge& knowledge);

} // namespace envelope
