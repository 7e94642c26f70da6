#include "spheresep/spheresep.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "spheresep/asdim.hpp"
#include "spheresep/error.hpp"
#include "spheresep/experiments.hpp"
#include "spheresep/generators.hpp"
#include "spheresep/io.hpp"
#include "spheresep/minors.hpp"

struct ssep_arrangement {
    spheresep::Arrangement value;
};

struct ssep_graph {
    spheresep::Graph value;
};

namespace {

using nlohmann::json;
namespace ss = spheresep;

thread_local std::string last_error;

ssep_status status_of(ss::ErrorCode code) {
    switch (code) {
        case ss::ErrorCode::kInvalidArgument: return SSEP_ERR_INVALID_ARGUMENT;
        case ss::ErrorCode::kParse: return SSEP_ERR_PARSE;
        case ss::ErrorCode::kDimensionMismatch: return SSEP_ERR_DIMENSION;
        case ss::ErrorCode::kDegenerate: return SSEP_ERR_DEGENERATE;
        case ss::ErrorCode::kTooLarge: return SSEP_ERR_TOO_LARGE;
        case ss::ErrorCode::kHypothesisViolation: return SSEP_ERR_HYPOTHESIS;
        case ss::ErrorCode::kDisconnected: return SSEP_ERR_DISCONNECTED;
        case ss::ErrorCode::kBudgetExceeded: return SSEP_ERR_BUDGET;
    }
    return SSEP_ERR_INTERNAL;
}

template <typename Fn>
ssep_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        fn();
        return SSEP_OK;
    } catch (const ss::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return SSEP_ERR_INTERNAL;
}

void need(const void* p, const char* name) {
    ss::require(p != nullptr, ss::ErrorCode::kInvalidArgument,
                std::string(name) + " must not be null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& s) {
    if (out) *out = dup(s);
}

double pick_eps(double eps) { return eps > 0 ? eps : ssep_default_eps(); }

ss::Arrangement geometric(const char* spec, uint64_t seed) {
    auto inst = ss::generate(ss::GenSpec::parse(spec), seed);
    ss::require(inst.arrangement.has_value(), ss::ErrorCode::kInvalidArgument,
                std::string("generator '") + spec + "' produces an abstract graph");
    return std::move(*inst.arrangement);
}

json stats_json(const ss::PrsStats& s) {
    return {{"iterations", s.iterations},     {"bags_formed", s.bags_formed},
            {"bags_discarded", s.bags_discarded}, {"cuts", s.cuts},
            {"layer_limit", s.layer_limit},   {"cut_vertices", s.cut_vertices},
            {"bag_vertices", s.bag_vertices}, {"constant", s.constant}};
}

ssep_status separate_impl(const ss::Graph& g, std::size_t d, const ssep_separate_options* opts,
                          int* verdict, char** record_json) {
    return guarded([&] {
        need(opts, "options");
        ss::PipelineOptions popts;
        popts.eps = pick_eps(opts->eps);
        if (opts->r) popts.r = opts->r;
        if (opts->h) popts.h = opts->h;
        const auto t0 = std::chrono::steady_clock::now();
        const ss::PipelineResult res = ss::separator_pipeline_on_graph(g, d, opts->t, popts);
        const double millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();

        json rec{{"command", "separate"},
                 {"n", res.n},
                 {"d", res.d},
                 {"t", res.t},
                 {"r", res.r},
                 {"h", res.h},
                 {"outcome", ss::outcome_name(res.outcome)},
                 {"seed", opts->seed},
                 {"deep_models", res.deep_models},
                 {"stats", stats_json(res.stats)},
                 {"wall_ms", millis}};
        bool ok = false;
        if (res.outcome == ss::PipelineOutcome::kSeparator) {
            ok = ss::balanced_separator_check(g, res.separator);
            rec["separator_size"] = res.separator.size();
            rec["separator"] = res.separator;
            rec["depth"] = nullptr;
            rec["largest_component"] = ss::largest_component_after_removal(g, res.separator);
            rec["balanced"] = ok;
        } else {
            const ss::ModelCheck check = ss::verify_minor_model(g, *res.model);
            rec["separator_size"] = nullptr;
            rec["depth"] = res.model->depth;
            rec["model"] = json::parse(ss::model_to_json(*res.model));
            rec["model_verified"] = check.ok;
            if (res.outcome == ss::PipelineOutcome::kTheoremViolation)
                rec["report"] = "THEOREM-VIOLATION: verified K_h model of depth <= r";
        }
        if (verdict) *verdict = ok ? 1 : 0;
        put(record_json, rec.dump(1) + "\n");
    });
}

}  // namespace

extern "C" {

const char* ssep_last_error(void) { return last_error.c_str(); }

const char* ssep_version(void) { return "0.1.0"; }

void ssep_string_free(char* s) { std::free(s); }

double ssep_default_eps(void) {
    if (const char* env = std::getenv("SPHERESEPS_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && std::isfinite(v) && v > 0) return v;
    }
    return ss::kDefaultEps;
}

ssep_status ssep_arrangement_from_json(const char* text, ssep_arrangement** out) {
    return guarded([&] {
        need(text, "json");
        need(out, "out");
        *out = new ssep_arrangement{ss::arrangement_from_json(text)};
    });
}

ssep_status ssep_arrangement_generate(const char* spec, uint64_t seed, ssep_arrangement** out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        *out = new ssep_arrangement{geometric(spec, seed)};
    });
}

ssep_status ssep_arrangement_to_json(const ssep_arrangement* arr, char** out) {
    return guarded([&] {
        need(arr, "arrangement");
        need(out, "out");
        *out = dup(ss::arrangement_to_json(arr->value));
    });
}

size_t ssep_arrangement_size(const ssep_arrangement* arr) { return arr ? arr->value.size() : 0; }

size_t ssep_arrangement_dim(const ssep_arrangement* arr) { return arr ? arr->value.dim() : 0; }

int ssep_arrangement_is_chords(const ssep_arrangement* arr) {
    return arr && arr->value.kind() == ss::ObjectKind::kChord ? 1 : 0;
}

ssep_status ssep_arrangement_project(const ssep_arrangement* arr, double eps,
                                     ssep_arrangement** out) {
    return guarded([&] {
        need(arr, "arrangement");
        need(out, "out");
        if (arr->value.kind() == ss::ObjectKind::kChord)
            *out = new ssep_arrangement{ss::project_arrangement(arr->value, pick_eps(eps))};
        else
            *out = new ssep_arrangement{arr->value};
    });
}

void ssep_arrangement_free(ssep_arrangement* arr) { delete arr; }

ssep_status ssep_graph_build(const ssep_arrangement* arr, double eps, ssep_graph** out) {
    return guarded([&] {
        need(arr, "arrangement");
        need(out, "out");
        *out = new ssep_graph{ss::build_intersection_graph(arr->value, pick_eps(eps))};
    });
}

ssep_status ssep_graph_generate(const char* spec, uint64_t seed, double eps, ssep_graph** out) {
    return guarded([&] {
        need(spec, "spec");
        need(out, "out");
        auto inst = ss::generate(ss::GenSpec::parse(spec), seed);
        if (inst.graph)
            *out = new ssep_graph{std::move(*inst.graph)};
        else
            *out = new ssep_graph{ss::build_intersection_graph(*inst.arrangement, pick_eps(eps))};
    });
}

ssep_status ssep_graph_from_edge_list(const char* text, ssep_graph** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new ssep_graph{ss::graph_from_edge_list(text)};
    });
}

ssep_status ssep_graph_to_edge_list(const ssep_graph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup(ss::graph_to_edge_list(g->value));
    });
}

size_t ssep_graph_vertex_count(const ssep_graph* g) { return g ? g->value.size() : 0; }

size_t ssep_graph_edge_count(const ssep_graph* g) { return g ? g->value.num_edges() : 0; }

void ssep_graph_free(ssep_graph* g) { delete g; }

ssep_status ssep_separate(const ssep_arrangement* arr, const ssep_separate_options* opts,
                          int* verdict, char** record_json) {
    ss::Graph g;
    std::size_t d = 0;
    const ssep_status st = guarded([&] {
        need(arr, "arrangement");
        need(opts, "options");
        const double eps = pick_eps(opts->eps);
        d = arr->value.dim();
        if (arr->value.kind() == ss::ObjectKind::kChord)
            g = ss::build_intersection_graph(ss::project_arrangement(arr->value, eps), eps);
        else
            g = ss::build_intersection_graph(arr->value, eps);
    });
    if (st != SSEP_OK) return st;
    return separate_impl(g, d, opts, verdict, record_json);
}

ssep_status ssep_separate_graph(const ssep_graph* g, size_t d, const ssep_separate_options* opts,
                                int* verdict, char** record_json) {
    if (!g) {
        last_error = "graph must not be null";
        return SSEP_ERR_INVALID_ARGUMENT;
    }
    return separate_impl(g->value, d, opts, verdict, record_json);
}

ssep_status ssep_scaling(const char* gen_spec, const char* sizes, uint64_t first_seed,
                         uint32_t seeds, uint32_t t, double eps, unsigned jobs, char** csv,
                         double* exponent) {
    return guarded([&] {
        need(sizes, "sizes");
        ss::ScalingOptions opts;
        if (gen_spec) opts.base = ss::GenSpec::parse(gen_spec);
        opts.sizes = ss::parse_size_range(sizes);
        opts.first_seed = first_seed;
        opts.seeds = seeds;
        opts.t = t;
        opts.eps = pick_eps(eps);
        opts.jobs = jobs;
        const auto rows = ss::run_scaling(opts);
        put(csv, ss::scaling_csv(rows));
        if (exponent) *exponent = opts.sizes.size() >= 2 ? ss::scaling_exponent(rows) : NAN;
    });
}

ssep_status ssep_asdim(const ssep_arrangement* arr, double r, double eps, unsigned jobs,
                       uint64_t seed, int* verdict, char** report_json, char** cover_json) {
    return guarded([&] {
        need(arr, "arrangement");
        ss::require(r > 0, ss::ErrorCode::kInvalidArgument, "r must be positive");
        eps = pick_eps(eps);
        const ss::Arrangement spheres = arr->value.kind() == ss::ObjectKind::kChord
                                            ? ss::project_arrangement(arr->value, eps)
                                            : arr->value;
        const ss::HatGraph hg = ss::build_hat_graph(spheres, eps);
        bool all_ok = true;

        json rep{{"command", "asdim"},
                 {"n", spheres.size()},
                 {"d", spheres.dim()},
                 {"r", r},
                 {"seed", seed},
                 {"pivot", hg.pivot},
                 {"layers", hg.layers.size()},
                 {"heavy_edges", hg.heavy_edges.size()}};

        const auto dq = ss::check_dequal(hg);
        rep["dequal"] = dq.ok;
        if (!dq.ok)
            rep["dequal_counterexample"] = {{"x", dq.x}, {"y", dq.y},
                                            {"graph", dq.expected}, {"hat", dq.actual}};
        const auto rp = ss::check_real_projection(hg, 200, 64, seed);
        rep["real_projection"] = rp.ok;
        const auto lonely = ss::heavy_edge_without_common_neighbor(hg);
        rep["heavy_edges_have_common_neighbor"] = !lonely.has_value();
        all_ok = all_ok && dq.ok && rp.ok && !lonely;

        const double S = 2.0 * r;
        json slabs = json::array();
        bool qi_ok = true;
        for (ss::Distance t = 0; t < static_cast<ss::Distance>(hg.layers.size()); ++t) {
            const ss::Slab slab = ss::layer_slab(hg, t, S);
            const auto q = ss::project_to_maximal(hg, slab, eps);
            json s{{"t", t},
                   {"size", slab.vertices.size()},
                   {"maximal", q.maximal.size()},
                   {"Pi", q.Pi},
                   {"Sigma", q.Sigma},
                   {"ok", q.ok}};
            if (std::isfinite(q.lower_slack)) s["lower_slack"] = q.lower_slack;
            if (std::isfinite(q.upper_slack)) s["upper_slack"] = q.upper_slack;
            if (!q.ok) s["violation"] = q.violation;
            qi_ok = qi_ok && q.ok;
            slabs.push_back(std::move(s));
        }
        rep["S"] = S;
        rep["slabs"] = slabs;
        rep["quasi_isometry"] = qi_ok;

        const ss::Cover cover = ss::build_cover(hg, r, jobs);
        const ss::CoverCheck cc = ss::verify_cover(hg.graph, cover);
        rep["families"] = cover.families.size();
        std::size_t sets = 0;
        for (const auto& f : cover.families) sets += f.size();
        rep["sets"] = sets;
        rep["D"] = cover.D;
        rep["cover_verified"] = cc.ok;
        if (!cc.ok) rep["cover_violation"] = cc.violation;
        all_ok = all_ok && qi_ok && cc.ok;

        if (verdict) *verdict = all_ok ? 1 : 0;
        put(report_json, rep.dump(1) + "\n");
        put(cover_json, ss::cover_to_json(cover));
    });
}

ssep_status ssep_verify_cover(const ssep_graph* g, const char* cover_json, int* verdict,
                              char** report) {
    return guarded([&] {
        need(g, "graph");
        need(cover_json, "cover");
        const ss::Cover cover = ss::cover_from_json(cover_json);
        const ss::CoverCheck cc = ss::verify_cover(g->value, cover);
        json rep{{"ok", cc.ok}, {"families", cover.families.size()},
                 {"max_diameter", cc.max_diameter}};
        if (!cc.ok) rep["violation"] = cc.violation;
        if (verdict) *verdict = cc.ok ? 1 : 0;
        put(report, rep.dump() + "\n");
    });
}

ssep_status ssep_verify_separator(const ssep_graph* g, const char* ids, int* verdict,
                                  char** report) {
    return guarded([&] {
        need(g, "graph");
        need(ids, "ids");
        const auto sep = ss::parse_vertex_list(ids);
        for (auto v : sep)
            ss::require(v < g->value.size(), ss::ErrorCode::kInvalidArgument,
                        "separator names unknown vertex " + std::to_string(v));
        const bool ok = ss::balanced_separator_check(g->value, sep);
        json rep{{"ok", ok},
                 {"n", g->value.size()},
                 {"separator_size", sep.size()},
                 {"largest_component", ss::largest_component_after_removal(g->value, sep)},
                 {"limit", ss::balance_limit(g->value.size())}};
        if (verdict) *verdict = ok ? 1 : 0;
        put(report, rep.dump() + "\n");
    });
}

ssep_status ssep_verify_model(const ssep_graph* g, const char* model_json, int* verdict,
                              char** report) {
    return guarded([&] {
        need(g, "graph");
        need(model_json, "model");
        const ss::ModelCheck mc = ss::verify_minor_model(g->value, ss::model_from_json(model_json));
        json rep{{"ok", mc.ok}};
        if (!mc.ok) rep["violation"] = mc.violation;
        if (verdict) *verdict = mc.ok ? 1 : 0;
        put(report, rep.dump() + "\n");
    });
}

}  // extern "C"
