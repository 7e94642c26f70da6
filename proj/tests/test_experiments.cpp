#include <doctest.h>

#include <cmath>

#include "spheresep/error.hpp"
#include "spheresep/experiments.hpp"

using namespace spheresep;

TEST_CASE("size ranges") {
    CHECK(parse_size_range("512..4096") == std::vector<std::size_t>{512, 1024, 2048, 4096});
    CHECK(parse_size_range("n=100..300") == std::vector<std::size_t>{100, 200});
    CHECK(parse_size_range("10,20,30") == std::vector<std::size_t>{10, 20, 30});
    CHECK_THROWS_AS(parse_size_range("abc"), Error);
}

TEST_CASE("power-law fit") {
    const std::vector<double> xs{1, 2, 4, 8, 16};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3 * std::pow(x, 0.5));
    CHECK(fit_power_law(xs, ys) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(median({3, 1, 2}) == 2);
    CHECK(median({4, 1, 2, 3}) == 2.5);
}

TEST_CASE("scaling harness is deterministic and ordered") {
    ScalingOptions opts;
    opts.sizes = {128, 256};
    opts.seeds = 3;
    opts.jobs = 2;
    const auto rows = run_scaling(opts);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].n == 128);
    CHECK(rows[0].seed == 1);
    CHECK(rows[5].n == 256);
    CHECK(rows[5].seed == 3);
    opts.jobs = 1;
    const auto again = run_scaling(opts);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].separator_size == again[i].separator_size);
        CHECK(rows[i].outcome == "separator");
    }
    const std::string csv = scaling_csv(rows);
    CHECK(csv.rfind("n,seed,separator_size,r,outcome,millis\n", 0) == 0);
}
