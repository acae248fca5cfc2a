#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "envelope/amount.hpp"
#include "envelope/errors.hpp"
#include "envelope/rational.hpp"

namespace envelope {

// Which envelope the player picked. Lower: the chosen envelope holds the
// base amount y; Higher: it holds 2y. The pick is always a fair coin.
enum class EnvelopePick { Lower, Higher };

enum class EnvelopeMode { Open, Closed };

// One realized game: a positive base amount and the envelope pick.
struct WorldState {
    WorldState(Amount base, EnvelopePick p) : y(std::move(base)), pick(p) {
        if (!y.is_positive())
            throw ValidationError("base amount must be strictly positive");
    }

    Amount y;
    EnvelopePick pick;
};

// (observed amount, counterpart amount); their sum is always 3y.
std::pair<Amount, Amount> world_values(const WorldState& w);

// Finite discrete distribution of the base amount. Atoms are kept sorted
// ascending by value; probabilities are exact and sum to exactly 1.
class FiniteBasePrior {
public:
    struct Atom {
        Amount value;
        Rational prob;
    };

    explicit FiniteBasePrior(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t support_size() const { return atoms_.size(); }

    // Probability of an exact value; exact 0 off the support.
    Rational lookup(const Amount& value) const;

    const Amount& min_value() const { return atoms_.front().value; }
    const Amount& max_value() const { return atoms_.back().value; }

private:
    std::vector<Atom> atoms_;
};

Amount prior_mean(const FiniteBasePrior& prior);

// What the player sees before deciding: nothing, or the opened amount.
class Observation {
public:
    static Observation closed() { return Observation(); }
    static Observation open(Amount x) {
        if (!x.is_positive())
            throw ValidationError("observed amount must be strictly positive");
        Observation o;
        o.x_ = std::move(x);
        return o;
    }

    bool is_open() const { return x_.has_value(); }
    const Amount& amount() const {
        if (!x_)
            throw MissingObservation("observation is closed; no amount to read");
        return *x_;
    }

private:
    Observation() = default;
    std::optional<Amount> x_;
};

} // namespace envelope
