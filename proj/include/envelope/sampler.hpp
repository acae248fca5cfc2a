#pragma once

#include <cstddef>
#include <variant>

#include "envelope/model.hpp"
#include "envelope/rng.hpp"

namespace envelope {

// Families the base amount can be drawn from. Every family produces
// strictly positive values. The finite family is the only one the exact
// engine accepts; the continuous ones exist for Monte Carlo.

struct FiniteSampler {
    explicit FiniteSampler(FiniteBasePrior p) : prior(std::move(p)) {}
    FiniteBasePrior prior;
};

struct UniformSampler {
    UniformSampler(double low_, double high_) : low(low_), high(high_) {
        if (!(low > 0.0))
            throw ValidationError("uniform sampler requires low > 0");
        if (!(high > low))
            throw ValidationError("uniform sampler requires high > low");
    }
    double low;
    double high;
};

struct LogNormalSampler {
    LogNormalSampler(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
        if (!(sigma > 0.0))
            throw ValidationError("log-normal sampler requires sigma > 0");
    }
    double mu;
    double sigma;
};

// unit * k for k geometric on {1, 2, ...} with the given success probability.
struct GeometricScaledSampler {
    GeometricScaledSampler(double success_prob_, double unit_)
        : success_prob(success_prob_), unit(unit_) {
        if (!(success_prob > 0.0 && success_prob < 1.0))
            throw ValidationError("geometric sampler requires success_prob in (0, 1)");
        if (!(unit > 0.0))
            throw ValidationError("geometric sampler requires unit > 0");
    }
    double success_prob;
    double unit;
};

using SamplerSpec =
    std::variant<FiniteSampler, UniformSampler, LogNormalSampler, GeometricScaledSampler>;

inline const FiniteBasePrior* as_finite(const SamplerSpec& spec) {
    if (const auto* f = std::get_if<FiniteSampler>(&spec))
        return &f->prior;
    return nullptr;
}

// Index of the atom drawn from a finite prior; consumes one draw.
std::size_t draw_atom_index(const FiniteBasePrior& prior, RandomStream& stream);

// The base amount as a double; the Monte Carlo hot path. Draw counts per
// family: finite 1, uniform 1, log-normal 2, geometric 1.
double draw_base_double(const SamplerSpec& spec, RandomStream& stream);

// One realized game: first the y-draw, then one draw for the fair pick.
// Finite draws return the exact atom value; continuous draws carry the
// sampled double exactly (every double is a rational).
WorldState sample_world(const SamplerSpec& spec, RandomStream& stream);

} // namespace envelope
