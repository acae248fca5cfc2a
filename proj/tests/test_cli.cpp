#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "envelope/serialize.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary and captures stdout; stderr is folded in only
// when the test asks for it.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(ENVELOPE_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string scenario(const char* name) {
    return std::string(ENVELOPE_SCENARIO_DIR) + "/" + name;
}

std::string write_temp(const char* name, const std::string& body) {
    std::string path = std::string("/tmp/envelope_cli_") + name;
    std::ofstream(path) << body;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("exact renders the exact fractions in its table") {
    RunResult r = run_cli("exact " + scenario("coin_exact.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "11/4"));
    CHECK(contains(r.out, "9/4"));
    CHECK(contains(r.out, "2.750000"));
    CHECK(contains(r.out, "correction"));
}

TEST_CASE("exact --json round-trips byte for byte") {
    RunResult r = run_cli("exact " + scenario("coin_exact.json") + " --json");
    CHECK(r.exit_code == 0);
    envelope::Json parsed = envelope::Json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
    CHECK(parsed["e_v"] == envelope::Json("11/4"));
    CHECK(parsed["correction"] == envelope::Json("1/2"));
}

TEST_CASE("exact --csv emits one header and one row of exact strings") {
    RunResult r = run_cli("exact " + scenario("coin_exact.json") + " --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "e_y,e_x,e_v,baseline,correction\n3/2,9/4,11/4,9/4,1/2\n");
}

TEST_CASE("compare ranks by value with names breaking ties") {
    RunResult r = run_cli("compare " + scenario("coin_compare.json") + " --csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "rank,strategy,e_v,correction\n"
                          "1,bayes_argmax,11/4,1/2\n"
                          "2,mean_threshold,11/4,1/2\n"
                          "3,bayes_mixed,21/8,3/8\n"));
    CHECK(contains(r.out, "4,monotone_decreasing(reciprocal),283/120,13/120\n"));
    // The three payoff-neutral rules tie at 9/4 and sort by name.
    CHECK(contains(r.out, "5,always,9/4,0\n6,blind(1/3),9/4,0\n7,never,9/4,0\n"));
}

TEST_CASE("simulate reports the estimate and honors --workers") {
    RunResult solo = run_cli("simulate " + scenario("coin_simulate.json") + " --json");
    CHECK(solo.exit_code == 0);
    envelope::Json parsed = envelope::Json::parse(solo.out);
    CHECK(parsed["trials"] == envelope::Json(100000));
    CHECK(parsed["seed"] == envelope::Json(42));
    double mean = parsed["mean"].get<double>();
    CHECK(mean > 2.2);
    CHECK(mean < 2.3);

    RunResult pooled = run_cli("simulate " + scenario("coin_simulate.json") +
                               " --json --workers 4");
    CHECK(pooled.exit_code == 0);
    CHECK(pooled.out == solo.out);
}

TEST_CASE("simulate --csv matches its frozen golden output") {
    RunResult r = run_cli("simulate " + scenario("coin_simulate.json") + " --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "mean,stderr,ci95_low,ci95_high,trials,seed\n"
                   "2.2478699999999998,0.0034472631850838843,"
                   "2.2411133641572354,2.2546266358427642,100000,42\n");
}

TEST_CASE("posterior prints the exact split and the action") {
    RunResult r = run_cli("posterior " + scenario("coin_prior.json") + " --x 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "p_lower"));
    CHECK(contains(r.out, "1/2"));
    CHECK(contains(r.out, "switch"));

    RunResult keep = run_cli("posterior " + scenario("coin_prior.json") + " --x 4");
    CHECK(keep.exit_code == 0);
    CHECK(contains(keep.out, "keep"));
    CHECK(contains(keep.out, "-2"));
}

TEST_CASE("impossible observations exit with code 3") {
    RunResult r = run_cli("posterior " + scenario("coin_prior.json") + " --x 3", true);
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "cannot arise"));
}

TEST_CASE("validation failures exit with code 2") {
    RunResult missing = run_cli("exact /nonexistent.json", true);
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.out, "error:"));

    std::string bad_sum = write_temp(
        "bad_sum.json",
        R"({"prior": {"atoms": [{"value": "1", "prob": "1/2"}, {"value": "2", "prob": "1/3"}]},
            "strategy": {"kind": "always"}, "engine": {"kind": "exact"}})");
    RunResult bad = run_cli("exact " + bad_sum, true);
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "prior probabilities must sum to 1"));

    std::string needs_prior = write_temp(
        "needs_prior.json",
        R"({"prior": {"atoms": [{"value": "1", "prob": "1"}]},
            "strategy": {"kind": "bayes_argmax"}, "engine": {"kind": "exact"}})");
    RunResult uninformed = run_cli("exact " + needs_prior, true);
    CHECK(uninformed.exit_code == 2);

    std::string continuous_exact = write_temp(
        "continuous_exact.json",
        R"({"prior": {"kind": "uniform", "low": 1.0, "high": 3.0},
            "strategy": {"kind": "always"}, "engine": {"kind": "exact"}})");
    RunResult cont = run_cli("exact " + continuous_exact, true);
    CHECK(cont.exit_code == 2);
    CHECK(contains(cont.out, "finite prior"));

    RunResult garbage = run_cli("exact " + write_temp("garbage.json", "{not json"), true);
    CHECK(garbage.exit_code == 2);
}

TEST_CASE("bad command lines exit with code 2 and help exits clean") {
    CHECK(run_cli("conjure", true).exit_code == 2);
    CHECK(run_cli("paradox --x 100", true).exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("simulate --help").exit_code == 0);
}

TEST_CASE("paradox names the broken assumption") {
    RunResult r = run_cli("paradox --x 100 --mean-y 200/3 --p 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "125"));
    CHECK(contains(r.out, "100"));
    CHECK(contains(r.out, "X is not a constant over the envelope choice"));

    RunResult j = run_cli("paradox --x 100 --mean-y 200/3 --p 1 --json");
    envelope::Json parsed = envelope::Json::parse(j.out);
    CHECK(parsed["naive"] == envelope::Json("125"));
    CHECK(parsed["correct"] == envelope::Json("100"));
    CHECK(parsed["delta"] == envelope::Json("25"));

    RunResult bad_p = run_cli("paradox --x 100 --mean-y 200/3 --p 3/2", true);
    CHECK(bad_p.exit_code == 2);
}

TEST_CASE("clones reports the average and the implied base amount") {
    RunResult r = run_cli("clones --y 100 --n 100000 --seed 0 --json");
    CHECK(r.exit_code == 0);
    envelope::Json parsed = envelope::Json::parse(r.out);
    CHECK(parsed["y"] == envelope::Json("100"));
    CHECK(parsed["clones"] == envelope::Json(100000));
    double mean_x = parsed["mean_x"].get<double>();
    CHECK(mean_x > 148.5);
    CHECK(mean_x < 151.5);
    CHECK(parsed["implied_y"].get<double>() == doctest::Approx(mean_x * 2.0 / 3.0));

    RunResult again = run_cli("clones --y 100 --n 100000 --seed 0 --json");
    CHECK(again.out == r.out);
}
