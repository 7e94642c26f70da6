#pragma once

// Separator scaling harness: generate instances over a range of sizes and
// seeds, run the separator driver, and fit size ~ n^alpha.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spheresep/generators.hpp"
#include "spheresep/minors.hpp"

namespace spheresep {

struct ScalingRow {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t separator_size = 0;
    std::size_t r = 0;
    std::string outcome;
    double millis = 0.0;
};

struct ScalingOptions {
    GenSpec base{"honeycomb", {}};   // "n" is overridden per size
    std::vector<std::size_t> sizes;
    std::uint64_t first_seed = 1;
    std::size_t seeds = 10;
    std::size_t t = 2;
    double eps = kDefaultEps;
    unsigned jobs = 1;
};

/// Rows ordered by (n, seed). Instances run in parallel on `jobs` threads.
std::vector<ScalingRow> run_scaling(const ScalingOptions& opts);

double median(std::vector<double> values);

/// Least-squares slope of log y against log x.
double fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

/// Slope fitted to the per-n medians of separator_size.
double scaling_exponent(const std::vector<ScalingRow>& rows);

/// Header "n,seed,separator_size,r,outcome,millis" then one line per row.
std::string scaling_csv(const std::vector<ScalingRow>& rows);

/// "512..8192" (doubling) or a comma list "512,1024,..."; an "n=" prefix
/// is accepted.
std::vector<std::size_t> parse_size_range(const std::string& text);

}  // namespace spheresep
