#include "spheresep/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "spheresep/error.hpp"
#include "spheresep/parallel.hpp"

namespace spheresep {

std::vector<ScalingRow> run_scaling(const ScalingOptions& opts) {
    std::vector<ScalingRow> rows;
    for (std::size_t n : opts.sizes)
        for (std::size_t s = 0; s < opts.seeds; ++s) {
            ScalingRow row;
            row.n = n;
            row.seed = opts.first_seed + s;
            rows.push_back(row);
        }
    parallel_for(rows.size(), opts.jobs, [&](std::size_t i) {
        ScalingRow& row = rows[i];
        const auto start = std::chrono::steady_clock::now();
        GenSpec spec = opts.base;
        spec.params["n"] = std::to_string(row.n);
        const GeneratedInstance inst = generate(spec, row.seed);
        require(inst.arrangement.has_value(), ErrorCode::kInvalidArgument,
                "scaling needs a geometric generator");
        PipelineOptions popts;
        popts.eps = opts.eps;
        const PipelineResult res = sphere_separator_pipeline(*inst.arrangement, opts.t, popts);
        row.separator_size = res.separator.size();
        row.r = res.r;
        row.outcome = outcome_name(res.outcome);
        row.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    });
    return rows;
}

double median(std::vector<double> values) {
    require(!values.empty(), ErrorCode::kInvalidArgument, "median of nothing");
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

double fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
    require(xs.size() == ys.size() && xs.size() >= 2, ErrorCode::kInvalidArgument,
            "power-law fit needs at least two points");
    double mx = 0, my = 0;
    const double k = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require(xs[i] > 0 && ys[i] > 0, ErrorCode::kInvalidArgument,
                "power-law fit needs positive values");
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    require(sxx > 0, ErrorCode::kInvalidArgument, "power-law fit needs distinct x values");
    return sxy / sxx;
}

double scaling_exponent(const std::vector<ScalingRow>& rows) {
    std::map<std::size_t, std::vector<double>> by_n;
    for (const auto& row : rows) by_n[row.n].push_back(static_cast<double>(row.separator_size));
    std::vector<double> xs, ys;
    for (const auto& [n, sizes] : by_n) {
        xs.push_back(static_cast<double>(n));
        ys.push_back(median(sizes));
    }
    return fit_power_law(xs, ys);
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream os;
    os << "n,seed,separator_size,r,outcome,millis\n";
    for (const auto& row : rows)
        os << row.n << ',' << row.seed << ',' << row.separator_size << ',' << row.r << ','
           << row.outcome << ',' << row.millis << '\n';
    return os.str();
}

std::vector<std::size_t> parse_size_range(const std::string& text) {
    std::string body = text;
    if (body.rfind("n=", 0) == 0) body = body.substr(2);
    auto number = [&](const std::string& tok) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == tok.size() && !tok.empty() && tok[0] != '-' && v > 0, ErrorCode::kParse,
                "bad size '" + tok + "' in range '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    std::vector<std::size_t> sizes;
    if (const auto dots = body.find(".."); dots != std::string::npos) {
        const std::size_t lo = number(body.substr(0, dots));
        const std::size_t hi = number(body.substr(dots + 2));
        require(lo <= hi, ErrorCode::kParse, "empty range '" + text + "'");
        for (std::size_t n = lo; n <= hi; n *= 2) sizes.push_back(n);
    } else {
        std::stringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) sizes.push_back(number(tok));
    }
    require(!sizes.empty(), ErrorCode::kParse, "no sizes in '" + text + "'");
    return sizes;
}

}  // namespace spheresep
