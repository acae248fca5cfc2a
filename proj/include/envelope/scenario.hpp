#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "envelope/montecarlo.hpp"
#include "envelope/sampler.hpp"
#include "envelope/strategy.hpp"

namespace envelope {

struct ExactEngine {};

struct MonteCarloEngine {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

using EngineSpec = std::variant<ExactEngine, MonteCarloEngine>;

// One scenario file: the prior (exact atoms or a sampler family), one or
// more strategies, what the player knows, the envelope mode, and which
// engine evaluates it.
struct Scenario {
    SamplerSpec prior;
    std::vector<StrategySpec> strategies;
    PriorKnowledge knowledge;
    EnvelopeMode envelope_mode = EnvelopeMode::Open;
    EngineSpec engine;

    // The exact engine needs a finite prior; throws ValidationError otherwise.
    const FiniteBasePrior& finite_prior() const;

    const StrategySpec& single_strategy() const;

    // Builds the validated simulation config; requires a Monte Carlo engine.
    SimConfig to_sim_config() const;
};

} // namespace envelope
