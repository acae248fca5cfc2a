#pragma once

#include <cstdint>

#include "envelope/model.hpp"
#include "envelope/sampler.hpp"
#include "envelope/strategy.hpp"

namespace envelope {

// One simulation setup. Construction validates everything that can fail
// before sampling: trial count and the strategy's information requirements
// against the envelope mode and knowledge.
struct SimConfig {
    SimConfig(std::uint64_t trials_, std::uint64_t seed_, SamplerSpec sampler_,
              StrategySpec strategy_, PriorKnowledge knowledge_, EnvelopeMode mode_)
        : trials(trials_), seed(seed_), sampler(std::move(sampler_)),
          strategy(std::move(strategy_)), knowledge(std::move(knowledge_)),
          envelope_mode(mode_) {
        if (trials == 0)
            throw ValidationError("trials must be at least 1");
        validate_strategy_inputs(strategy, envelope_mode, knowledge);
    }

    std::uint64_t trials;
    std::uint64_t seed;
    SamplerSpec sampler;
    StrategySpec strategy;
    PriorKnowledge knowledge;
    EnvelopeMode envelope_mode;
};

struct SimResult {
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t trials = 0;
    // Sample excess kurtosis; large values mean the CI is untrustworthy.
    double excess_kurtosis = 0.0;
};

// Heavy-tail warning threshold for the excess kurtosis (see SimResult).
inline constexpr double kKurtosisWarnThreshold = 10.0;

struct CloneResult {
    Amount y;
    std::uint64_t clones = 0;
    double mean_x = 0.0;
    double implied_y = 0.0; // (2/3) * mean_x
};

// Runs cfg.trials independent games. Trial t draws from substream(seed, t)
// in the order: y-draw, pick-draw, switch-draw. Payoffs are accumulated in
// fixed 4096-trial blocks combined by pairwise (tree) reduction, so the
// result is bit-identical for any worker count.
SimResult run_sim(const SimConfig& cfg, unsigned workers = 1);

// Fixes the base amount and replays only the envelope pick `clones` times,
// averaging the observed amount. The average approaches (3/2)*y.
CloneResult run_clones(const Amount& y, std::uint64_t clones, std::uint64_t seed);

} // namespace envelope
