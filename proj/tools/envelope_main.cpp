#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "envelope/exact.hpp"
#include "envelope/montecarlo.hpp"
#include "envelope/posterior.hpp"
#include "envelope/serialize.hpp"

namespace {

using namespace envelope;

enum class OutputFormat { Table, Json, Csv };

void add_format_flags(CLI::App* cmd, OutputFormat& format) {
    cmd->add_flag_callback("--json", [&format] { format = OutputFormat::Json; },
                           "emit JSON instead of a table");
    cmd->add_flag_callback("--csv", [&format] { format = OutputFormat::Csv; },
                           "emit CSV instead of a table");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt_double_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_row(const std::string& label, const Rational& value) {
    std::printf("  %-11s %-14s (%s)\n", label.c_str(), value.str().c_str(),
                value.decimal_str().c_str());
}

int cmd_exact(const std::string& path, OutputFormat format) {
    Scenario scenario = decode_scenario(load_json_file(path));
    if (!std::holds_alternative<ExactEngine>(scenario.engine))
        throw ValidationError("'exact' requires an exact engine scenario");
    ExactReport report = exact_value(scenario.finite_prior(), scenario.single_strategy(),
                                     scenario.knowledge, scenario.envelope_mode);
    switch (format) {
    case OutputFormat::Json:
        print_json(encode(report));
        break;
    case OutputFormat::Csv:
        std::printf("e_y,e_x,e_v,baseline,correction\n%s,%s,%s,%s,%s\n",
                    report.e_y.str().c_str(), report.e_x.str().c_str(),
                    report.e_v.str().c_str(), report.baseline.str().c_str(),
                    report.correction.str().c_str());
        break;
    case OutputFormat::Table:
        std::printf("exact report (%s)\n", strategy_name(scenario.single_strategy()).c_str());
        print_row("e_y", report.e_y.value());
        print_row("e_x", report.e_x.value());
        print_row("e_v", report.e_v.value());
        print_row("baseline", report.baseline.value());
        print_row("correction", report.correction);
        break;
    }
    return 0;
}

int cmd_simulate(const std::string& path, OutputFormat format, unsigned workers) {
    Scenario scenario = decode_scenario(load_json_file(path));
    SimConfig cfg = scenario.to_sim_config();
    SimResult r = run_sim(cfg, workers);
    if (r.excess_kurtosis > kKurtosisWarnThreshold)
        std::fprintf(stderr,
                     "warning: excess kurtosis %.2f exceeds %.0f; the confidence "
                     "interval may be unreliable\n",
                     r.excess_kurtosis, kKurtosisWarnThreshold);
    switch (format) {
    case OutputFormat::Json: {
        Json j = encode(r);
        j["seed"] = cfg.seed;
        print_json(j);
        break;
    }
    case OutputFormat::Csv:
        std::printf("mean,stderr,ci95_low,ci95_high,trials,seed\n%s,%s,%s,%s,%llu,%llu\n",
                    fmt_double_full(r.mean).c_str(), fmt_double_full(r.std_error).c_str(),
                    fmt_double_full(r.ci95_low).c_str(), fmt_double_full(r.ci95_high).c_str(),
                    static_cast<unsigned long long>(r.trials),
                    static_cast<unsigned long long>(cfg.seed));
        break;
    case OutputFormat::Table:
        std::printf("simulation (%s, %llu trials, seed %llu)\n",
                    strategy_name(cfg.strategy).c_str(),
                    static_cast<unsigned long long>(r.trials),
                    static_cast<unsigned long long>(cfg.seed));
        std::printf("  %-11s %s\n", "mean", fmt_double(r.mean).c_str());
        std::printf("  %-11s %s\n", "stderr", fmt_double(r.std_error).c_str());
        std::printf("  %-11s [%s, %s]\n", "ci95", fmt_double(r.ci95_low).c_str(),
                    fmt_double(r.ci95_high).c_str());
        std::printf("  %-11s %llu\n", "trials", static_cast<unsigned long long>(r.trials));
        break;
    }
    return 0;
}

int cmd_compare(const std::string& path, OutputFormat format) {
    Scenario scenario = decode_scenario(load_json_file(path));
    if (!std::holds_alternative<ExactEngine>(scenario.engine))
        throw ValidationError("'compare' requires an exact engine scenario");
    const FiniteBasePrior& prior = scenario.finite_prior();

    struct Row {
        std::string name;
        ExactReport report;
    };
    std::vector<Row> rows;
    for (const auto& strategy : scenario.strategies)
        rows.push_back({strategy_name(strategy),
                        exact_value(prior, strategy, scenario.knowledge,
                                    scenario.envelope_mode)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.report.e_v != b.report.e_v)
            return a.report.e_v > b.report.e_v;
        return a.name < b.name;
    });

    switch (format) {
    case OutputFormat::Json: {
        Json list = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            list.push_back(Json{{"rank", i + 1},
                                {"strategy", rows[i].name},
                                {"e_v", encode(rows[i].report.e_v)},
                                {"correction", encode(rows[i].report.correction)},
                                {"approx", rows[i].report.e_v.decimal_str()}});
        print_json(Json{{"baseline", encode(rows.front().report.baseline)},
                        {"rows", std::move(list)}});
        break;
    }
    case OutputFormat::Csv:
        std::printf("rank,strategy,e_v,correction\n");
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::printf("%zu,%s,%s,%s\n", i + 1, rows[i].name.c_str(),
                        rows[i].report.e_v.str().c_str(),
                        rows[i].report.correction.str().c_str());
        break;
    case OutputFormat::Table:
        std::printf("strategy comparison (baseline %s)\n",
                    rows.front().report.baseline.str().c_str());
        std::printf("  %-4s %-36s %-10s %-12s %s\n", "rank", "strategy", "e_v", "(approx)",
                    "correction");
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::printf("  %-4zu %-36s %-10s %-12s %s\n", i + 1, rows[i].name.c_str(),
                        rows[i].report.e_v.str().c_str(),
                        rows[i].report.e_v.decimal_str().c_str(),
                        rows[i].report.correction.str().c_str());
        break;
    }
    return 0;
}

int cmd_posterior(const std::string& prior_path, const std::string& x_text, bool as_json) {
    FiniteBasePrior prior = decode_prior(load_json_file(prior_path));
    Amount x = Amount::parse(x_text);
    Posterior post = posterior(prior, x);
    Rational gain = conditional_gain(prior, x);
    const char* action = gain.is_positive() ? "switch" : "keep";
    if (as_json) {
        Json j = encode(post);
        j["gain"] = encode(gain);
        j["action"] = action;
        j["approx"]["gain"] = gain.decimal_str();
        print_json(j);
    } else {
        std::printf("posterior at x = %s\n", x.str().c_str());
        print_row("p_lower", post.p_lower);
        print_row("p_higher", post.p_higher);
        print_row("gain", gain);
        std::printf("  %-11s %s\n", "action", action);
    }
    return 0;
}

int cmd_paradox(const std::string& x_text, const std::string& mean_text,
                const std::string& p_text, bool as_json) {
    Amount x = Amount::parse(x_text);
    Amount e_y = Amount::parse(mean_text);
    if (!x.is_positive())
        throw ValidationError("observed amount must be strictly positive");
    SwitchProbability p(Rational::parse(p_text));
    Amount naive = naive_value(x, p);
    Amount correct = correct_open_value(x, p, e_y);
    Rational delta = naive.value() - correct.value();
    const char* resolution = "X is not a constant over the envelope choice";
    if (as_json) {
        print_json(Json{{"naive", encode(naive)},
                        {"correct", encode(correct)},
                        {"delta", encode(delta)},
                        {"resolution", resolution},
                        {"approx",
                         Json{{"naive", naive.decimal_str()},
                              {"correct", correct.decimal_str()},
                              {"delta", delta.decimal_str()}}}});
    } else {
        print_row("naive", naive.value());
        print_row("correct", correct.value());
        print_row("delta", delta);
        std::printf("resolution: %s\n", resolution);
    }
    return 0;
}

int cmd_clones(const std::string& y_text, std::uint64_t clones, std::uint64_t seed,
               bool as_json) {
    CloneResult r = run_clones(Amount::parse(y_text), clones, seed);
    if (as_json) {
        print_json(encode(r));
    } else {
        std::printf("clone averaging (y = %s, %llu clones, seed %llu)\n", r.y.str().c_str(),
                    static_cast<unsigned long long>(r.clones),
                    static_cast<unsigned long long>(seed));
        std::printf("  %-11s %s\n", "mean_x", fmt_double(r.mean_x).c_str());
        std::printf("  %-11s %s\n", "implied_y", fmt_double(r.implied_y).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-envelope game laboratory"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string prior_path;
    std::string x_text, mean_text, p_text, y_text;
    std::uint64_t clones = 0, seed = 0;
    unsigned workers = 1;
    OutputFormat format = OutputFormat::Table;
    bool as_json = false;

    auto* exact = app.add_subcommand("exact", "exact expectations for one scenario");
    exact->add_option("scenario", scenario_path, "scenario JSON file")->required();
    add_format_flags(exact, format);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate for one scenario");
    simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    simulate->add_option("--workers", workers, "worker threads (does not change results)")
        ->check(CLI::Range(1u, 256u));
    add_format_flags(simulate, format);

    auto* compare = app.add_subcommand("compare", "rank strategies by exact value");
    compare->add_option("scenario", scenario_path, "scenario JSON file with a strategy list")
        ->required();
    add_format_flags(compare, format);

    auto* posterior_cmd =
        app.add_subcommand("posterior", "posterior envelope probabilities at an observation");
    posterior_cmd->add_option("prior", prior_path, "prior JSON file")->required();
    posterior_cmd->add_option("--x", x_text, "observed amount (rational)")->required();
    posterior_cmd->add_flag("--json", as_json, "emit JSON");

    auto* paradox = app.add_subcommand("paradox", "naive vs corrected open-envelope value");
    paradox->add_option("--x", x_text, "observed amount (rational)")->required();
    paradox->add_option("--mean-y", mean_text, "mean base amount E[Y] (rational)")->required();
    paradox->add_option("--p", p_text, "switch probability (rational in [0,1])")->required();
    paradox->add_flag("--json", as_json, "emit JSON");

    auto* clones_cmd = app.add_subcommand("clones", "average observed amount over clones");
    clones_cmd->add_option("--y", y_text, "base amount (rational)")->required();
    clones_cmd->add_option("--n", clones, "number of clones")->required();
    clones_cmd->add_option("--seed", seed, "random seed (default 0)");
    clones_cmd->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (exact->parsed())
            return cmd_exact(scenario_path, format);
        if (simulate->parsed())
            return cmd_simulate(scenario_path, format, workers);
        if (compare->parsed())
            return cmd_compare(scenario_path, format);
        if (posterior_cmd->parsed())
            return cmd_posterior(prior_path, x_text, as_json);
        if (paradox->parsed())
            return cmd_paradox(x_text, mean_text, p_text, as_json);
        if (clones_cmd->parsed())
            return cmd_clones(y_text, clones, seed, as_json);
    } catch (const envelope::ImpossibleObservation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const envelope::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
