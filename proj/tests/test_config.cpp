#include <random>

#include <doctest.h>

#include "fracdiff/config.hpp"
#include "fracdiff/fdm.hpp"
#include "fracdiff/runner.hpp"

using namespace fracdiff;

namespace {

const char* kScenarioConfig =
    "alpha = 0.75\n"
    "k_alpha = 1\n"
    "L = 1\n"
    "N = 50\n"
    "T = 2\n"
    "bc_left = 40\n"
    "bc_right = 20\n"
    "ic_p0 = 0\n";

} // namespace

TEST_CASE("reference scenario parses with defaults") {
    RunConfig cfg = parse_config(kScenarioConfig);
    CHECK(cfg.alphas == std::vector<double>{0.75});
    CHECK(cfg.k_alpha == 1.0);
    CHECK(cfg.length == 1.0);
    CHECK(cfg.space_steps == 50);
    CHECK(cfg.final_time == 2.0);
    CHECK_FALSE(cfg.dt.has_value()); // auto
    CHECK(cfg.safety == 0.9);
    CHECK(cfg.scheme == SchemeChoice::Both);
    CHECK(cfg.probe() == doctest::Approx(0.5));
    CHECK_FALSE(cfg.memory_window.has_value());
}

TEST_CASE("alpha sweep list") {
    RunConfig cfg = parse_config(
        "alpha = 0.75, 1.25, 1.5, 1.75\n"
        "k_alpha = 1\nL = 1\nN = 50\nT = 2\n");
    CHECK(cfg.alphas == std::vector<double>{0.75, 1.25, 1.5, 1.75});
}

TEST_CASE("comments and blank lines are ignored") {
    RunConfig cfg = parse_config(
        "# scenario\n\nalpha = 1 # classical\nk_alpha = 1\n"
        "L = 1\nN = 10\nT = 1\n");
    CHECK(cfg.alphas == std::vector<double>{1.0});
}

TEST_CASE("alpha out of range is malformed") {
    try {
        parse_config("alpha = 3\nk_alpha = 1\nL = 1\nN = 10\nT = 1\n");
        FAIL("expected MalformedValue");
    } catch (const MalformedValue& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 9);
    }
}

TEST_CASE("unknown key reports its line") {
    try {
        parse_config("alpha = 1\nbogus = 3\n");
        FAIL("expected UnknownKey");
    } catch (const UnknownKey& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("missing required keys") {
    CHECK_THROWS_AS(parse_config("alpha = 1\nk_alpha = 1\nL = 1\nN = 10\n"),
                    MissingRequired);
    CHECK_THROWS_AS(parse_config(""), MissingRequired);
}

TEST_CASE("malformed numbers carry line and column") {
    try {
        parse_config("alpha = 1\nk_alpha = 1\nL = 1\nN = ten\nT = 1\n");
        FAIL("expected MalformedValue");
    } catch (const MalformedValue& e) {
        CHECK(e.line == 4);
        CHECK(e.column == 5);
    }
}

TEST_CASE("expression grammar") {
    ScalarFn f = compile_expression("40 - 20*x", 'x');
    CHECK(f(0.0) == doctest::Approx(40.0));
    CHECK(f(0.5) == doctest::Approx(30.0));
    CHECK(f(1.0) == doctest::Approx(20.0));

    ScalarFn g = compile_expression("(1 - x)*(1 - x)*3 - -2", 'x');
    CHECK(g(0.0) == doctest::Approx(5.0));
    CHECK(g(1.0) == doctest::Approx(2.0));

    CHECK_THROWS_AS(compile_expression("2 +", 'x'), MalformedValue);
    CHECK_THROWS_AS(compile_expression("(1", 'x'), MalformedValue);
    CHECK_THROWS_AS(compile_expression("y", 'x'), MalformedValue);
}

TEST_CASE("expression errors map to the value column") {
    try {
        parse_config(
            "alpha = 1\nk_alpha = 1\nL = 1\nN = 10\nT = 1\n"
            "ic_p0 = 1 + t\n");
        FAIL("expected MalformedValue");
    } catch (const MalformedValue& e) {
        CHECK(e.line == 6);
        CHECK(e.column == 13); // the stray variable
    }
}

TEST_CASE("render round-trips") {
    RunConfig cfg = parse_config(kScenarioConfig);
    CHECK(parse_config(render(cfg)) == cfg);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> alpha(0.05, 2.0);
    std::uniform_real_distribution<double> pos(0.1, 10.0);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> n(2, 200);
    for (int trial = 0; trial < 25; ++trial) {
        RunConfig c;
        c.alphas.clear();
        for (int i = 0, m = count(rng); i < m; ++i) {
            c.alphas.push_back(alpha(rng));
        }
        c.k_alpha = pos(rng);
        c.length = pos(rng);
        c.space_steps = n(rng);
        c.final_time = pos(rng);
        if (trial % 2) c.dt = pos(rng) * 1e-3;
        c.safety = 0.5;
        c.scheme = static_cast<SchemeChoice>(trial % 3);
        c.ic_p0 = "1 + 2*x";
        c.bc_left = "40";
        c.bc_right = "20 - t";
        if (trial % 3 == 0) c.probe_x = c.length * 0.25;
        if (trial % 4 == 0) c.memory_window = 2 + trial;
        c.output_dir = "out";
        CHECK(parse_config(render(c)) == c);
    }
}

TEST_CASE("lowering produces a runnable spec") {
    RunConfig cfg = parse_config(kScenarioConfig);
    ProblemSpec spec = lower(cfg, 0.75);
    CHECK(spec.order.alpha == 0.75);
    CHECK(spec.left_bc(0.3) == doctest::Approx(40.0));
    CHECK(spec.right_bc(1.7) == doctest::Approx(20.0));
    CHECK(spec.initial_value(0.4) == 0.0);
    // auto dt honors the stability bound
    const double bound = stable_dt_max(spec.grid.h(), 0.75, 1.0);
    CHECK(spec.grid.dt() <= 0.9 * bound * (1.0 + 1e-12));
    CHECK(spec.grid.t(spec.grid.time_steps) == doctest::Approx(2.0));
}

TEST_CASE("snapshot times") {
    std::vector<double> t1 = snapshot_times(2.0, 3, 0.01);
    REQUIRE(t1.size() == 4);
    CHECK(t1[0] == doctest::Approx(0.01));
    CHECK(t1[1] == doctest::Approx(0.5));
    CHECK(t1[2] == doctest::Approx(1.0));
    CHECK(t1[3] == doctest::Approx(2.0));

    std::vector<double> t2 = snapshot_times(1.0, 2, 0.001);
    REQUIRE(t2.size() == 3);
    CHECK(t2[1] == doctest::Approx(0.5));
    CHECK(t2[2] == doctest::Approx(1.0));

    CHECK_THROWS_AS(snapshot_times(1.0, 1, 0.0), InvalidCount);
}
