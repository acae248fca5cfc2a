#include "envelope/serialize.hpp"

#include <fstream>

namespace envelope {

namespace {

const Json& require_field(const Json& j, const char* key, const char* context) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string(context) + " is missing field '" + key + "'");
    return *it;
}

std::string require_string(const Json& j, const char* context) {
    if (!j.is_string())
        throw ValidationError(std::string(context) + " must be a string");
    return j.get<std::string>();
}

double require_number(const Json& j, const char* key, const char* context) {
    const Json& field = require_field(j, key, context);
    if (!field.is_number())
        throw ValidationError(std::string(context) + " field '" + key + "' must be a number");
    return field.get<double>();
}

std::uint64_t require_uint(const Json& j, const char* key, const char* context) {
    const Json& field = require_field(j, key, context);
    if (!field.is_number_unsigned())
        throw ValidationError(std::string(context) + " field '" + key +
                              "' must be a nonnegative integer");
    return field.get<std::uint64_t>();
}

std::string require_kind(const Json& j, const char* context) {
    if (!j.is_object())
        throw ValidationError(std::string(context) + " must be a JSON object");
    return require_string(require_field(j, "kind", context), context);
}

} // namespace

Json encode(const Rational& r) { return r.str(); }
Json encode(const Amount& a) { return a.str(); }

Json encode(const FiniteBasePrior& prior) {
    Json atoms = Json::array();
    for (const auto& atom : prior.atoms())
        atoms.push_back(Json{{"value", encode(atom.value)}, {"prob", encode(atom.prob)}});
    return Json{{"atoms", std::move(atoms)}};
}

Json encode(const SamplerSpec& sampler) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FiniteSampler>) {
                Json j = encode(s.prior);
                j["kind"] = "finite";
                return j;
            } else if constexpr (std::is_same_v<T, UniformSampler>) {
                return Json{{"kind", "uniform"}, {"low", s.low}, {"high", s.high}};
            } else if constexpr (std::is_same_v<T, LogNormalSampler>) {
                return Json{{"kind", "log_normal"}, {"mu", s.mu}, {"sigma", s.sigma}};
            } else {
                return Json{{"kind", "geometric_scaled"},
                            {"success_prob", s.success_prob},
                            {"unit", s.unit}};
            }
        },
        sampler);
}

Json encode(const StrategySpec& strategy) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Never>) {
                return Json{{"kind", "never"}};
            } else if constexpr (std::is_same_v<T, Always>) {
                return Json{{"kind", "always"}};
            } else if constexpr (std::is_same_v<T, Blind>) {
                return Json{{"kind", "blind"}, {"p", encode(s.p.value())}};
            } else if constexpr (std::is_same_v<T, MeanThreshold>) {
                return Json{{"kind", "mean_threshold"}};
            } else if constexpr (std::is_same_v<T, BoundsRule>) {
                return Json{{"kind", "bounds_rule"}, {"fallback", encode(s.fallback.value())}};
            } else if constexpr (std::is_same_v<T, BayesArgmax>) {
                return Json{{"kind", "bayes_argmax"}};
            } else if constexpr (std::is_same_v<T, BayesMixed>) {
                return Json{{"kind", "bayes_mixed"}};
            } else {
                if (const auto* e = std::get_if<MonotoneDecreasing::ExponentialDecay>(&s.shape))
                    return Json{{"kind", "monotone_decreasing"},
                                {"shape", "exponential_decay"},
                                {"rate", e->rate}};
                return Json{{"kind", "monotone_decreasing"}, {"shape", "reciprocal"}};
            }
        },
        strategy);
}

Json encode(const PriorKnowledge& knowledge) {
    return std::visit(
        [](const auto& k) -> Json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, NoInformation>) {
                return Json{{"kind", "no_information"}};
            } else if constexpr (std::is_same_v<T, MeanOnly>) {
                return Json{{"kind", "mean_only"}, {"mean_y", encode(k.mean_y)}};
            } else if constexpr (std::is_same_v<T, Bounds>) {
                Json j{{"kind", "bounds"}};
                if (k.y_min)
                    j["y_min"] = encode(*k.y_min);
                if (k.y_max)
                    j["y_max"] = encode(*k.y_max);
                return j;
            } else {
                return Json{{"kind", "full_prior"}, {"prior", encode(k.prior)}};
            }
        },
        knowledge);
}

Json encode(const EngineSpec& engine) {
    if (const auto* mc = std::get_if<MonteCarloEngine>(&engine))
        return Json{{"kind", "monte_carlo"}, {"trials", mc->trials}, {"seed", mc->seed}};
    return Json{{"kind", "exact"}};
}

std::string encode_mode(EnvelopeMode mode) {
    return mode == EnvelopeMode::Open ? "open" : "closed";
}

Json encode(const Scenario& scenario) {
    Json j;
    // A finite prior is written in its plain atoms form; samplers are tagged.
    if (const auto* finite = as_finite(scenario.prior))
        j["prior"] = encode(*finite);
    else
        j["prior"] = encode(scenario.prior);
    if (scenario.strategies.size() == 1) {
        j["strategy"] = encode(scenario.strategies.front());
    } else {
        Json list = Json::array();
        for (const auto& s : scenario.strategies)
            list.push_back(encode(s));
        j["strategies"] = std::move(list);
    }
    j["knowledge"] = encode(scenario.knowledge);
    j["envelope_mode"] = encode_mode(scenario.envelope_mode);
    j["engine"] = encode(scenario.engine);
    return j;
}

Json encode(const ExactReport& report) {
    return Json{{"e_y", encode(report.e_y)},
                {"e_x", encode(report.e_x)},
                {"e_v", encode(report.e_v)},
                {"baseline", encode(report.baseline)},
                {"correction", encode(report.correction)},
                {"approx",
                 Json{{"e_y", report.e_y.decimal_str()},
                      {"e_x", report.e_x.decimal_str()},
                      {"e_v", report.e_v.decimal_str()},
                      {"baseline", report.baseline.decimal_str()},
                      {"correction", report.correction.decimal_str()}}}};
}

Json encode(const Posterior& p) {
    return Json{{"p_lower", encode(p.p_lower)},
                {"p_higher", encode(p.p_higher)},
                {"approx",
                 Json{{"p_lower", p.p_lower.decimal_str()},
                      {"p_higher", p.p_higher.decimal_str()}}}};
}

Json encode(const SimResult& r) {
    return Json{{"mean", r.mean},
                {"stderr", r.std_error},
                {"ci95_low", r.ci95_low},
                {"ci95_high", r.ci95_high},
                {"trials", r.trials},
                {"excess_kurtosis", r.excess_kurtosis}};
}

Json encode(const CloneResult& r) {
    return Json{{"y", encode(r.y)},
                {"clones", r.clones},
                {"mean_x", r.mean_x},
                {"implied_y", r.implied_y}};
}

Rational decode_rational(const Json& j) {
    return Rational::parse(require_string(j, "rational"));
}

Amount decode_amount(const Json& j) { return Amount(decode_rational(j)); }

FiniteBasePrior decode_prior(const Json& j) {
    if (!j.is_object())
        throw ValidationError("prior must be a JSON object");
    const Json& atoms = require_field(j, "atoms", "prior");
    if (!atoms.is_array())
        throw ValidationError("prior field 'atoms' must be an array");
    std::vector<FiniteBasePrior::Atom> parsed;
    parsed.reserve(atoms.size());
    for (const Json& atom : atoms)
        parsed.push_back({decode_amount(require_field(atom, "value", "prior atom")),
                          decode_rational(require_field(atom, "prob", "prior atom"))});
    return FiniteBasePrior(std::move(parsed));
}

SamplerSpec decode_sampler(const Json& j) {
    // A bare atoms object is shorthand for the finite family.
    if (j.is_object() && j.contains("atoms") && !j.contains("kind"))
        return FiniteSampler(decode_prior(j));
    std::string kind = require_kind(j, "sampler");
    if (kind == "finite")
        return FiniteSampler(decode_prior(j));
    if (kind == "uniform")
        return UniformSampler(require_number(j, "low", "uniform sampler"),
                              require_number(j, "high", "uniform sampler"));
    if (kind == "log_normal")
        return LogNormalSampler(require_number(j, "mu", "log_normal sampler"),
                                require_number(j, "sigma", "log_normal sampler"));
    if (kind == "geometric_scaled")
        return GeometricScaledSampler(
            require_number(j, "success_prob", "geometric_scaled sampler"),
            require_number(j, "unit", "geometric_scaled sampler"));
    throw ValidationError("unknown sampler kind '" + kind + "'");
}

StrategySpec decode_strategy(const Json& j) {
    std::string kind = require_kind(j, "strategy");
    if (kind == "never")
        return Never{};
    if (kind == "always")
        return Always{};
    if (kind == "blind")
        return Blind(SwitchProbability(decode_rational(require_field(j, "p", "blind strategy"))));
    if (kind == "mean_threshold")
        return MeanThreshold{};
    if (kind == "bounds_rule")
        return BoundsRule(SwitchProbability(
            decode_rational(require_field(j, "fallback", "bounds_rule strategy"))));
    if (kind == "bayes_argmax")
        return BayesArgmax{};
    if (kind == "bayes_mixed")
        return BayesMixed{};
    if (kind == "monotone_decreasing") {
        std::string shape =
            require_string(require_field(j, "shape", "monotone_decreasing strategy"),
                           "monotone_decreasing shape");
        if (shape == "reciprocal")
            return MonotoneDecreasing(MonotoneDecreasing::Reciprocal{});
        if (shape == "exponential_decay")
            return MonotoneDecreasing(MonotoneDecreasing::ExponentialDecay(
                require_number(j, "rate", "monotone_decreasing strategy")));
        throw ValidationError("unknown monotone_decreasing shape '" + shape + "'");
    }
    throw ValidationError("unknown strategy kind '" + kind + "'");
}

PriorKnowledge decode_knowledge(const Json& j) {
    std::string kind = require_kind(j, "knowledge");
    if (kind == "no_information")
        return NoInformation{};
    if (kind == "mean_only")
        return MeanOnly(decode_amount(require_field(j, "mean_y", "mean_only knowledge")));
    if (kind == "bounds") {
        std::optional<Amount> y_min, y_max;
        if (j.contains("y_min"))
            y_min = decode_amount(j.at("y_min"));
        if (j.contains("y_max"))
            y_max = decode_amount(j.at("y_max"));
        return Bounds(std::move(y_min), std::move(y_max));
    }
    if (kind == "full_prior")
        return FullPrior(decode_prior(require_field(j, "prior", "full_prior knowledge")));
    throw ValidationError("unknown knowledge kind '" + kind + "'");
}

EngineSpec decode_engine(const Json& j) {
    std::string kind = require_kind(j, "engine");
    if (kind == "exact")
        return ExactEngine{};
    if (kind == "monte_carlo")
        return MonteCarloEngine{require_uint(j, "trials", "monte_carlo engine"),
                                require_uint(j, "seed", "monte_carlo engine")};
    throw ValidationError("unknown engine kind '" + kind + "'");
}

EnvelopeMode decode_mode(const Json& j) {
    std::string mode = require_string(j, "envelope_mode");
    if (mode == "open")
        return EnvelopeMode::Open;
    if (mode == "closed")
        return EnvelopeMode::Closed;
    throw ValidationError("unknown envelope_mode '" + mode + "'");
}

Scenario decode_scenario(const Json& j) {
    if (!j.is_object())
        throw ValidationError("scenario must be a JSON object");

    std::vector<StrategySpec> strategies;
    if (j.contains("strategies")) {
        const Json& list = j.at("strategies");
        if (!list.is_array() || list.empty())
            throw ValidationError("scenario field 'strategies' must be a nonempty array");
        for (const Json& s : list)
            strategies.push_back(decode_strategy(s));
    } else {
        strategies.push_back(decode_strategy(require_field(j, "strategy", "scenario")));
    }

    return Scenario{
        decode_sampler(require_field(j, "prior", "scenario")),
        std::move(strategies),
        j.contains("knowledge") ? decode_knowledge(j.at("knowledge"))
                                : PriorKnowledge(NoInformation{}),
        j.contains("envelope_mode") ? decode_mode(j.at("envelope_mode")) : EnvelopeMode::Open,
        decode_engine(require_field(j, "engine", "scenario")),
    };
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace envelope
