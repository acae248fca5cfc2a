#include "envelope/scenario.hpp"

namespace envelope {

const FiniteBasePrior& Scenario::finite_prior() const {
    const FiniteBasePrior* finite = as_finite(prior);
    if (!finite)
        throw ValidationError("the exact engine requires a finite prior");
    return *finite;
}

const StrategySpec& Scenario::single_strategy() const {
    if (strategies.size() != 1)
        throw ValidationError("this command takes exactly one strategy");
    return strategies.front();
}

SimConfig Scenario::to_sim_config() const {
    const auto* mc = std::get_if<MonteCarloEngine>(&engine);
    if (!mc)
        throw ValidationError("this command requires a monte_carlo engine scenario");
    return SimConfig(mc->trials, mc->seed, prior, single_strategy(), knowledge,
                     envelope_mode);
}

} // namespace envelope
