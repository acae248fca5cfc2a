#include "envelope/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace envelope {

namespace {

constexpr std::uint64_t kChunkTrials = 4096;

// Power sums of one block of payoffs.
struct Moments {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;

    void add(double x) {
        double x2 = x * x;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
    }
    friend Moments operator+(const Moments& a, const Moments& b) {
        return {a.s1 + b.s1, a.s2 + b.s2, a.s3 + b.s3, a.s4 + b.s4};
    }
};

Moments pairwise_reduce(const std::vector<Moments>& chunks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1)
        return chunks[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_reduce(chunks, lo, mid) + pairwise_reduce(chunks, mid, hi);
}

// Fills `chunks` by handing out chunk indices to workers; the chunk layout
// (and therefore the reduction) never depends on the worker count.
void run_chunked(std::uint64_t total, unsigned workers, std::vector<Moments>& chunks,
                 const std::function<double(std::uint64_t)>& trial_payoff) {
    const std::size_t n_chunks = chunks.size();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= n_chunks)
                return;
            std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkTrials;
            std::uint64_t end = std::min(total, begin + kChunkTrials);
            Moments m;
            for (std::uint64_t t = begin; t < end; ++t)
                m.add(trial_payoff(t));
            chunks[c] = m;
        }
    };
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
}

SimResult summarize(const Moments& m, std::uint64_t n) {
    SimResult r;
    r.trials = n;
    r.mean = m.s1 / static_cast<double>(n);
    double nd = static_cast<double>(n);
    double m2 = std::max(0.0, m.s2 - nd * r.mean * r.mean);
    if (n > 1)
        r.std_error = std::sqrt(m2 / (nd - 1.0) / nd);
    r.ci95_low = r.mean - 1.96 * r.std_error;
    r.ci95_high = r.mean + 1.96 * r.std_error;
    if (m2 > 0.0) {
        double m4 = m.s4 - 4.0 * r.mean * m.s3 + 6.0 * r.mean * r.mean * m.s2 -
                    3.0 * nd * r.mean * r.mean * r.mean * r.mean;
        r.excess_kurtosis = nd * m4 / (m2 * m2) - 3.0;
    }
    return r;
}

} // namespace

SimResult run_sim(const SimConfig& cfg, unsigned workers) {
    const bool open_mode = cfg.envelope_mode == EnvelopeMode::Open;
    const FiniteBasePrior* finite = as_finite(cfg.sampler);

    // The strategy's switch probability only ever depends on the observed
    // amount, so it can be tabulated up front except for observation-
    // dependent rules over continuous samplers.
    double s_const = 0.0;
    std::vector<double> atom_value;
    std::vector<double> s_at_lower, s_at_higher;
    const bool oblivious = is_oblivious(cfg.strategy);
    if (oblivious) {
        s_const =
            switch_probability(cfg.strategy, Observation::closed(), cfg.knowledge).to_double();
    } else if (finite) {
        for (const auto& atom : finite->atoms()) {
            atom_value.push_back(atom.value.to_double());
            s_at_lower.push_back(
                switch_probability(cfg.strategy, Observation::open(atom.value), cfg.knowledge)
                    .to_double());
            s_at_higher.push_back(switch_probability(cfg.strategy,
                                                     Observation::open(atom.value.doubled()),
                                                     cfg.knowledge)
                                      .to_double());
        }
    }
    (void)open_mode; // non-oblivious strategies already validated as open

    auto trial_payoff = [&](std::uint64_t t) -> double {
        RandomStream stream = RandomStream::substream(cfg.seed, t);
        double y;
        std::size_t atom_index = 0;
        if (finite) {
            atom_index = draw_atom_index(*finite, stream);
            y = atom_value.empty() ? finite->atoms()[atom_index].value.to_double()
                                   : atom_value[atom_index];
        } else {
            y = draw_base_double(cfg.sampler, stream);
        }
        bool picked_higher = stream.next_coin();
        double x = picked_higher ? 2.0 * y : y;
        double x_prime = picked_higher ? y : 2.0 * y;
        double s;
        if (oblivious) {
            s = s_const;
        } else if (finite) {
            s = picked_higher ? s_at_higher[atom_index] : s_at_lower[atom_index];
        } else {
            s = switch_probability(cfg.strategy, Observation::open(Amount::from_double(x)),
                                   cfg.knowledge)
                    .to_double();
        }
        return stream.next_bernoulli(s) ? x_prime : x;
    };

    std::size_t n_chunks =
        static_cast<std::size_t>((cfg.trials + kChunkTrials - 1) / kChunkTrials);
    std::vector<Moments> chunks(n_chunks);
    run_chunked(cfg.trials, workers, chunks, trial_payoff);
    return summarize(pairwise_reduce(chunks, 0, n_chunks), cfg.trials);
}

CloneResult run_clones(const Amount& y, std::uint64_t clones, std::uint64_t seed) {
    if (!y.is_positive())
        throw ValidationError("base amount must be strictly positive");
    if (clones == 0)
        throw ValidationError("clones must be at least 1");

    const double y_low = y.to_double();
    auto clone_observation = [&](std::uint64_t i) -> double {
        RandomStream stream = RandomStream::substream(seed, i);
        return stream.next_coin() ? 2.0 * y_low : y_low;
    };

    std::size_t n_chunks = static_cast<std::size_t>((clones + kChunkTrials - 1) / kChunkTrials);
    std::vector<Moments> chunks(n_chunks);
    run_chunked(clones, 1, chunks, clone_observation);
    Moments total = pairwise_reduce(chunks, 0, n_chunks);

    CloneResult r;
    r.y = y;
    r.clones = clones;
    r.mean_x = total.s1 / static_cast<double>(clones);
    r.implied_y = r.mean_x * (2.0 / 3.0);
    return r;
}

} // namespace envelope
