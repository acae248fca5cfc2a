#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "envelope/rng.hpp"
#include "envelope/sampler.hpp"
#include "envelope/strategy.hpp"

namespace testgen {

// Random finite prior on the quarter grid {1/4, 2/4, ..., 64} with exact
// integer weights, so the probabilities sum to exactly 1 by construction.
// Half of the time a new support value doubles an existing one, which keeps
// the x -> {f(x), f(x/2)} posterior path well exercised. ensure_spread
// additionally forces a doubled pair so that max_value >= 2 * min_value.
inline envelope::FiniteBasePrior random_prior(envelope::RandomStream& stream,
                                              std::size_t max_support = 8,
                                              bool ensure_spread = false) {
    using namespace envelope;
    std::size_t n = 1 + static_cast<std::size_t>(stream.next_u64() % max_support);
    if (ensure_spread && n < 2)
        n = 2;

    std::set<std::uint64_t> quarters;
    if (ensure_spread) {
        std::uint64_t lo = 1 + stream.next_u64() % 64;
        quarters.insert(lo);
        quarters.insert(2 * lo);
    }
    while (quarters.size() < n) {
        std::uint64_t q = 1 + stream.next_u64() % 256;
        if (!quarters.empty() && stream.next_coin()) {
            auto it = quarters.begin();
            std::advance(it, static_cast<std::size_t>(stream.next_u64() % quarters.size()));
            if (*it * 2 <= 256)
                q = *it * 2;
        }
        quarters.insert(q);
    }

    std::vector<Rational> weights;
    Rational total;
    for (std::size_t i = 0; i < quarters.size(); ++i) {
        weights.emplace_back(1 + static_cast<long long>(stream.next_u64() % 9));
        total += weights.back();
    }

    std::vector<FiniteBasePrior::Atom> atoms;
    std::size_t i = 0;
    for (std::uint64_t q : quarters)
        atoms.push_back({Amount(Rational(static_cast<long long>(q), 4)), weights[i++] / total});
    return FiniteBasePrior(std::move(atoms));
}

// The least knowledge that makes the strategy evaluable over this prior.
inline envelope::PriorKnowledge knowledge_for(const envelope::StrategySpec& spec,
                                              const envelope::FiniteBasePrior& prior) {
    using namespace envelope;
    if (std::holds_alternative<BoundsRule>(spec))
        return Bounds(prior.min_value(), prior.max_value());
    if (std::holds_alternative<MeanThreshold>(spec) ||
        std::holds_alternative<BayesArgmax>(spec) || std::holds_alternative<BayesMixed>(spec))
        return FullPrior(prior);
    return NoInformation{};
}

// Every switching rule the library ships, with fixed parameters.
inline std::vector<envelope::StrategySpec> strategy_catalogue() {
    using namespace envelope;
    return {
        Never{},
        Always{},
        Blind(SwitchProbability(Rational(1, 3))),
        MeanThreshold{},
        BoundsRule(SwitchProbability(Rational(1, 2))),
        BayesArgmax{},
        BayesMixed{},
        MonotoneDecreasing(MonotoneDecreasing::ExponentialDecay(0.05)),
        MonotoneDecreasing(MonotoneDecreasing::Reciprocal{}),
    };
}

} // namespace testgen
