#include "envelope/sampler.hpp"

#include <cmath>

namespace envelope {

std::size_t draw_atom_index(const FiniteBasePrior& prior, RandomStream& stream) {
    double u = stream.next_double();
    double cum = 0.0;
    const auto& atoms = prior.atoms();
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        cum += atoms[i].prob.to_double();
        if (u < cum)
            return i;
    }
    return atoms.size() - 1;
}

double draw_base_double(const SamplerSpec& spec, RandomStream& stream) {
    return std::visit(
        [&stream](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FiniteSampler>) {
                return s.prior.atoms()[draw_atom_index(s.prior, stream)].value.to_double();
            } else if constexpr (std::is_same_v<T, UniformSampler>) {
                return stream.next_uniform(s.low, s.high);
            } else if constexpr (std::is_same_v<T, LogNormalSampler>) {
                return std::exp(s.mu + s.sigma * stream.next_standard_normal());
            } else {
                double u = stream.next_double();
                auto k = 1.0 + std::floor(std::log(1.0 - u) / std::log(1.0 - s.success_prob));
                return s.unit * k;
            }
        },
        spec);
}

WorldState sample_world(const SamplerSpec& spec, RandomStream& stream) {
    Amount y;
    if (const auto* prior = as_finite(spec)) {
        y = prior->atoms()[draw_atom_index(*prior, stream)].value;
    } else {
        y = Amount::from_double(draw_base_double(spec, stream));
    }
    EnvelopePick pick = stream.next_coin() ? EnvelopePick::Higher : EnvelopePick::Lower;
    return WorldState(std::move(y), pick);
}

} // namespace envelope
