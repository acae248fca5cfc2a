#include "envelope/model.hpp"

#include <algorithm>

namespace envelope {

std::pair<Amount, Amount> world_values(const WorldState& w) {
    if (w.pick == EnvelopePick::Lower)
        return {w.y, w.y.doubled()};
    return {w.y.doubled(), w.y};
}

FiniteBasePrior::FiniteBasePrior(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw ValidationError("prior must have at least one atom");
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    Rational total;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!a.value.is_positive())
            throw ValidationError("prior atom values must be strictly positive");
        if (!a.prob.is_positive() || a.prob > Rational(1))
            throw ValidationError("prior atom probabilities must lie in (0, 1]");
        if (i > 0 && atoms_[i - 1].value == a.value)
            throw ValidationError("prior atom values must be pairwise distinct");
        total += a.prob;
    }
    if (total != Rational(1))
        throw ValidationError("prior probabilities must sum to 1");
}

Rational FiniteBasePrior::lookup(const Amount& value) const {
    auto it = std::lower_bound(
        atoms_.begin(), atoms_.end(), value,
        [](const Atom& a, const Amount& v) { return a.value < v; });
    if (it != atoms_.end() && it->value == value)
        return it->prob;
    return Rational();
}

Amount prior_mean(const FiniteBasePrior& prior) {
    Rational sum;
    for (const auto& atom : prior.atoms())
        sum += atom.value * atom.prob;
    return Amount(sum);
}

} // namespace envelope
