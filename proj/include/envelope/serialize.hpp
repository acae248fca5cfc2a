#pragma once

#include <string>

#include <json.hpp>

#include "envelope/exact.hpp"
#include "envelope/montecarlo.hpp"
#include "envelope/posterior.hpp"
#include "envelope/scenario.hpp"

namespace envelope {

using Json = nlohmann::json;

// Wire format: every exact rational travels as a "num/den" string (plain
// integers and decimal literals are accepted on input); sampler parameters
// are ordinary JSON numbers. Reports carry a 6-place decimal rendering under
// "approx" for human consumption; the exact strings are authoritative.

Json encode(const Rational& r);
Json encode(const Amount& a);
Json encode(const FiniteBasePrior& prior);
Json encode(const SamplerSpec& sampler);
Json encode(const StrategySpec& strategy);
Json encode(const PriorKnowledge& knowledge);
Json encode(const EngineSpec& engine);
Json encode(const Scenario& scenario);
Json encode(const ExactReport& report);
Json encode(const Posterior& p);
Json encode(const SimResult& r);
Json encode(const CloneResult& r);
std::string encode_mode(EnvelopeMode mode);

Rational decode_rational(const Json& j);
Amount decode_amount(const Json& j);
FiniteBasePrior decode_prior(const Json& j);
SamplerSpec decode_sampler(const Json& j);
StrategySpec decode_strategy(const Json& j);
PriorKnowledge decode_knowledge(const Json& j);
EngineSpec decode_engine(const Json& j);
EnvelopeMode decode_mode(const Json& j);
Scenario decode_scenario(const Json& j);

// Reads and parses a JSON document; malformed files raise ValidationError.
Json load_json_file(const std::string& path);

} // namespace envelope
