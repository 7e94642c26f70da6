// Acceptance suite: one PASS/FAIL line per criterion, each checked at its
// stated tolerance and time budget. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "spheresep/asdim.hpp"
#include "spheresep/bipartite.hpp"
#include "spheresep/coloring.hpp"
#include "spheresep/containment.hpp"
#include "spheresep/experiments.hpp"
#include "spheresep/generators.hpp"
#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"
#include "spheresep/minors.hpp"
#include "spheresep/random.hpp"

using namespace spheresep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Arrangement worked_example() {
    return Arrangement::of_spheres(
        2, {Sphere{{0, 0}, 10}, Sphere{{9, 0}, 2}, Sphere{{9, 0}, 1}}, {"A", "B", "C"});
}

Point random_unit(Rng& rng, std::size_t dim) {
    Point p(dim);
    double len = 0;
    while (len < 1e-9) {
        for (double& x : p) x = rng.normal();
        len = norm(p);
    }
    for (double& x : p) x /= len;
    return p;
}

// A point of the section H cap S^d.
Point section_point(const HyperplaneChord& c, Rng& rng) {
    Point u = random_unit(rng, c.normal.size());
    const double along = dot(u, c.normal);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= along * c.normal[i];
    const double len = norm(u);
    const double rho = std::sqrt(1 - c.offset * c.offset);
    Point x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) x[i] = c.offset * c.normal[i] + rho * u[i] / len;
    return x;
}

// 1. Labelled intersection graphs agree before and after projection.
Outcome stereographic_equivalence() {
    Outcome o;
    std::size_t arrangements = 0;
    double worst = 0;
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            Rng rng(seed * 31 + d);
            const std::size_t n = 2 + rng.index(99);
            const Arrangement chords = gen_random_chords(d, n, seed);
            const Arrangement spheres = project_arrangement(chords);
            ++arrangements;
            if (!(build_intersection_graph(chords) == build_intersection_graph(spheres))) {
                o.pass = false;
                o.detail = "graph mismatch at d=" + std::to_string(d) + " seed " +
                           std::to_string(seed);
                return o;
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = spheres.spheres()[i];
                for (int k = 0; k < 3; ++k) {
                    const Point y = stereographic_point(section_point(chords.chords()[i], rng));
                    const double err =
                        std::abs(distance(y, s.center) - s.radius) / std::max(1.0, s.radius);
                    worst = std::max(worst, err);
                }
            }
        }
    if (worst > 1e-6) o.pass = false;
    std::ostringstream os;
    os << arrangements << " arrangements, graphs identical, max geometry error " << worst;
    o.detail = os.str();
    return o;
}

// 2. Radius ordering width against t(2r+2)^d.
Outcome strong_colouring_bound() {
    Outcome o;
    std::size_t worst_gap = SIZE_MAX;
    std::map<std::size_t, std::size_t> plies;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed);
        const std::size_t n = 20 + rng.index(181);
        const std::size_t target = 1 + rng.index(4);
        LowPlyOptions opts;
        opts.density = rng.uniform(0.5, 2.0);
        const Arrangement arr = gen_random_low_ply(2, n, target, seed, opts);
        const std::size_t t = ply(arr, kDefaultEps, arr.size()).ply;
        if (t != oracle::disk_ply(arr.spheres())) {
            o.pass = false;
            o.detail = "ply disagrees with the candidate-point oracle at seed " +
                       std::to_string(seed);
            return o;
        }
        ++plies[t];
        const Graph g = build_intersection_graph(arr);
        const Ordering ord = radius_ordering(arr);
        for (std::size_t r = 1; r <= 3; ++r) {
            const std::size_t w = r_width(g, ord, r);
            const std::size_t bound = ball_scol_bound(t, r, 2);
            if (w > bound) {
                o.pass = false;
                o.detail = "violation at seed " + std::to_string(seed) + ", r=" +
                           std::to_string(r) + ": width " + std::to_string(w) + " > " +
                           std::to_string(bound);
                return o;
            }
            worst_gap = std::min(worst_gap, bound - w);
        }
    }
    std::ostringstream os;
    os << "100 arrangements, 0 violations, min slack " << worst_gap << ", plies";
    for (const auto& [t, c] : plies) os << " " << t << ":" << c;
    o.detail = os.str();
    return o;
}

// 3. Shallow clique minors force large strong colouring numbers.
Outcome minor_scol_consistency() {
    Outcome o;
    Rng rng(2024);
    std::size_t with_model = 0, graphs = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + rng.index(6);
        const Graph g = oracle::random_graph(n, rng.uniform(0.15, 0.8), rng);
        ++graphs;
        std::map<std::size_t, std::size_t> scol;
        for (std::size_t r = 0; r <= 1; ++r)
            for (std::size_t h = 3; h <= 4; ++h) {
                const auto m = exhaustive_shallow_clique_minor(g, r, h);
                if (!m || !verify_minor_model(g, *m).ok) continue;
                ++with_model;
                const std::size_t rr = 4 * r + 1;
                if (!scol.count(rr)) scol[rr] = exact_scol(g, rr).width;
                if (scol[rr] + 1 < h) {
                    o.pass = false;
                    o.detail = "graph " + std::to_string(trial) + ": scol_" +
                               std::to_string(rr) + " = " + std::to_string(scol[rr]) +
                               " < h-1 = " + std::to_string(h - 1);
                    return o;
                }
            }
    }
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(with_model) +
               " verified models, 0 violations";
    return o;
}

// 4. Ply at most 2kt for K_{2,2}-free arrangements.
Outcome ply_chain_inequality() {
    Outcome o;
    std::size_t max_chain = 0, max_ply = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed + 7000);
        const std::size_t n = 10 + rng.index(13);
        LowPlyOptions opts;
        opts.ktt_free = 2;
        opts.density = rng.uniform(1.0, 3.0);
        const Arrangement arr = gen_random_low_ply(2, n, 2 + rng.index(4), seed, opts);
        if (find_ktt(build_intersection_graph(arr), 2)) {
            o.pass = false;
            o.detail = "generator produced K_{2,2} at seed " + std::to_string(seed);
            return o;
        }
        const std::size_t k = longest_nested_chain(build_poset(arr)).size();
        const std::size_t p = ply(arr).ply;
        max_chain = std::max(max_chain, k);
        max_ply = std::max(max_ply, p);
        if (p > ply_chain_bound(k, 2)) {
            o.pass = false;
            o.detail = "seed " + std::to_string(seed) + ": ply " + std::to_string(p) +
                       " > 4k = " + std::to_string(4 * k);
            return o;
        }
    }
    o.detail = "100 arrangements, 0 violations, max chain " + std::to_string(max_chain) +
               ", max ply " + std::to_string(max_ply);
    return o;
}

// 5. Nested path systems yield verified K_{t,t} certificates.
Outcome nested_path_certificate() {
    Outcome o;
    std::size_t runs = 0;
    for (std::size_t t = 1; t <= 2; ++t)
        for (std::size_t r = 0; r <= 2; ++r)
            for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                const auto inst = gen_nested_path_system(t, r, seed);
                const auto& arr = inst.arrangement;
                const auto w = extract_ktt_from_nested_paths(arr, inst.system, t, r);
                bool ok = w.side_a.size() == t && w.side_b.size() == t;
                for (Vertex a : w.side_a)
                    for (Vertex b : w.side_b)
                        ok = ok && spheres_intersect(arr.spheres()[a], arr.spheres()[b]);
                ok = ok && find_ktt(build_intersection_graph(arr), t).has_value();
                ++runs;
                if (!ok) {
                    o.pass = false;
                    o.detail = "failure at t=" + std::to_string(t) + " r=" + std::to_string(r) +
                               " seed " + std::to_string(seed);
                    return o;
                }
            }
    o.detail = std::to_string(runs) + " systems, all witnesses verified, find_ktt agrees";
    return o;
}

// 6. PRS outputs verify; no shallow K_h on K_{2,2}-free sphere graphs.
Outcome prs_dichotomy() {
    Outcome o;
    struct Case {
        std::string name;
        Graph g;
        std::size_t r;
        std::uint64_t h;
    };
    std::vector<Case> corpus;
    auto path = [](std::size_t n) {
        Graph g(n);
        for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        return g;
    };
    for (std::size_t n : {10, 100, 1000, 4096})
        for (std::size_t r : {1, 4, 10}) corpus.push_back({"path", path(n), r, 4});
    for (std::size_t side : {8, 16, 32, 64})
        for (std::uint64_t h : {5, 50}) corpus.push_back({"grid", gen_triangle_free_grid(2, side), 2, h});
    for (std::size_t side : {6, 12, 16})
        corpus.push_back({"grid3", gen_triangle_free_grid(3, side), 2, 8});
    for (std::size_t side : {10, 40})
        for (std::uint64_t h : {3, 30})
            corpus.push_back({"lattice2", build_intersection_graph(gen_lattice_packing(2, side)), 3, h});
    for (std::size_t side : {5, 10})
        corpus.push_back({"lattice3", build_intersection_graph(gen_lattice_packing(3, side)), 2, 6});
    for (std::uint64_t seed = 1; corpus.size() < 50; ++seed) {
        Rng rng(seed);
        const std::size_t n = 100 + rng.index(3997);
        const Arrangement arr = gen_random_low_ply(2, n, 1 + rng.index(4), seed);
        corpus.push_back({"low_ply", build_intersection_graph(arr), 1 + rng.index(5), 2 + rng.index(20)});
    }
    std::size_t seps = 0, models = 0;
    for (const auto& c : corpus) {
        const auto res = prs_separate(c.g, c.r, c.h);
        bool ok;
        if (res.outcome == PrsOutcome::kSeparator) {
            ok = balanced_separator_check(c.g, res.separator);
            ++seps;
        } else {
            ok = res.model && verify_minor_model(c.g, *res.model).ok && res.model->h == c.h;
            ++models;
        }
        if (!ok) {
            o.pass = false;
            o.detail = "unverified output on " + c.name + " (n=" + std::to_string(c.g.size()) + ")";
            return o;
        }
    }

    std::size_t pipeline_runs = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::vector<Arrangement> family;
        family.push_back(gen_perturbed_honeycomb(256 * seed, seed));
        LowPlyOptions opts;
        opts.ktt_free = 2;
        opts.density = 1.5;
        family.push_back(gen_random_low_ply(2, 200 * seed, 3, seed, opts));
        for (const auto& arr : family) {
            const auto res = sphere_separator_pipeline(arr, 2);
            ++pipeline_runs;
            const std::uint64_t h = clique_threshold(2, res.r, 2);
            bool ok = res.outcome == PipelineOutcome::kSeparator && res.h == h &&
                      res.r == separator_radius(arr.size(), 2);
            if (res.model && res.model->depth <= res.r &&
                verify_minor_model(build_intersection_graph(arr), *res.model).ok)
                ok = false;
            if (ok) ok = balanced_separator_check(build_intersection_graph(arr), res.separator);
            if (!ok) {
                o.pass = false;
                o.detail = "pipeline outcome " + outcome_name(res.outcome) + " at seed " +
                           std::to_string(seed) + ", n=" + std::to_string(arr.size());
                return o;
            }
        }
    }
    o.detail = std::to_string(corpus.size()) + " PRS runs verified (" + std::to_string(seps) +
               " separators, " + std::to_string(models) + " models); " +
               std::to_string(pipeline_runs) + " K_{2,2}-free pipeline runs, no shallow K_h";
    return o;
}

// 7. Separator size grows strictly sublinearly.
Outcome separator_scaling() {
    Outcome o;
    ScalingOptions opts;
    opts.sizes = {512, 1024, 2048, 4096, 8192};
    opts.seeds = 10;
    opts.t = 2;
    opts.jobs = workers();
    const auto rows = run_scaling(opts);
    for (const auto& row : rows)
        if (row.outcome != "separator") {
            o.pass = false;
            o.detail = "outcome " + row.outcome + " at n=" + std::to_string(row.n);
            return o;
        }
    const double alpha = scaling_exponent(rows);
    std::ostringstream os;
    os << "exponent " << alpha << " (< 0.97 required), medians";
    for (std::size_t n : opts.sizes) {
        std::vector<double> sizes;
        for (const auto& row : rows)
            if (row.n == n) sizes.push_back(static_cast<double>(row.separator_size));
        os << " " << n << ":" << median(sizes);
    }
    o.pass = alpha < 0.97;
    o.detail = os.str();
    return o;
}

// 8. Distances in G and in the hat-graph agree.
Outcome distance_equality() {
    Outcome o;
    const HatGraph worked = build_hat_graph(worked_example());
    const bool bc = shortest_path_distance(worked.graph, 1, 2) == 2 &&
                    shortest_path_distance(worked.weighted, 1, 2) == 2;
    if (!check_dequal(worked).ok || !bc) {
        o.pass = false;
        o.detail = "worked example fails";
        return o;
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Rng rng(seed + 500);
        const std::size_t d = 2 + seed % 2;
        const std::size_t n = 2 + rng.index(149);
        const HatGraph hg = build_hat_graph(gen_random_connected(d, n, seed));
        const auto dq = check_dequal(hg);
        if (!dq.ok || all_pairs_distances(hg.weighted) != oracle::floyd_warshall(hg.weighted)) {
            o.pass = false;
            o.detail = "seed " + std::to_string(seed) + ": d(" + std::to_string(dq.x) + "," +
                       std::to_string(dq.y) + ") = " + std::to_string(dq.expected) + " vs " +
                       std::to_string(dq.actual);
            return o;
        }
    }
    o.detail = "worked example d(B,C)=2 in both metrics; 300 arrangements agree exactly";
    return o;
}

// 9. Slab projections are (2 ceil(S) + 4, 1)-quasi-isometries.
Outcome quasi_isometry() {
    Outcome o;
    std::size_t reports = 0;
    double min_lower = INFINITY, min_upper = INFINITY;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed + 900);
        const std::size_t n = 10 + rng.index(141);
        const HatGraph hg = build_hat_graph(gen_random_connected(2 + seed % 2, n, seed));
        for (double S : {1.0, 2.0, 4.0})
            for (Distance t = 0; t < static_cast<Distance>(hg.layers.size()); ++t) {
                const auto q = project_to_maximal(hg, layer_slab(hg, t, S));
                ++reports;
                if (!q.ok || q.Pi != 2 * std::ceil(S) + 4 || q.Sigma != 1) {
                    o.pass = false;
                    o.detail = "seed " + std::to_string(seed) + " S=" + std::to_string(S) +
                               " t=" + std::to_string(t) + ": " + q.violation;
                    return o;
                }
                if (std::isfinite(q.lower_slack)) min_lower = std::min(min_lower, q.lower_slack);
                if (std::isfinite(q.upper_slack)) min_upper = std::min(min_upper, q.upper_slack);
            }
    }
    std::ostringstream os;
    os << reports << " slab reports over 100 arrangements verified; min slacks " << min_lower
       << " / " << min_upper;
    o.detail = os.str();
    return o;
}

// 10. Covers verify and use at most 2(2d+3) families in the plane.
Outcome cover_soundness() {
    Outcome o;
    std::map<std::size_t, std::size_t> counts;
    std::size_t covers = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed + 1300);
        const std::size_t n = 50 + rng.index(151);
        const HatGraph hg = build_hat_graph(gen_random_connected(2, n, seed));
        for (double r : {1.0, 2.0, 4.0}) {
            const Cover cover = build_cover(hg, r, workers());
            const CoverCheck cc = verify_cover(hg.graph, cover);
            ++covers;
            ++counts[cover.families.size()];
            if (!cc.ok || cover.families.size() > 14) {
                o.pass = false;
                o.detail = "seed " + std::to_string(seed) + " r=" + std::to_string(r) + ": " +
                           (cc.ok ? std::to_string(cover.families.size()) + " families"
                                  : cc.violation);
                return o;
            }
        }
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const HatGraph hg = build_hat_graph(gen_random_connected(3, 150, seed));
        const CoverCheck cc = verify_cover(hg.graph, build_cover(hg, 2, workers()));
        ++covers;
        if (!cc.ok) {
            o.pass = false;
            o.detail = "d=3 seed " + std::to_string(seed) + ": " + cc.violation;
            return o;
        }
    }
    std::ostringstream os;
    os << covers << " covers verified; d=2 family counts";
    for (const auto& [f, c] : counts) os << " " << f << ":" << c;
    o.detail = os.str();
    return o;
}

// 11. Library results against brute-force oracles.
Outcome oracle_equivalences() {
    Outcome o;
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.index(11);
        const Graph g = oracle::random_graph(n, rng.uniform(0.2, 0.9), rng);
        for (std::size_t t = 1; t <= 3; ++t) {
            const auto w = find_ktt(g, t);
            if (w.has_value() != oracle::has_ktt(g, t) || (w && !verify_biclique(g, *w, t))) {
                o.pass = false;
                o.detail = "find_ktt mismatch on graph " + std::to_string(trial);
                return o;
            }
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(60);
        const Graph g = oracle::random_graph(n, rng.uniform(0.01, 0.3), rng);
        WeightedGraph wg{g};
        for (const auto& [u, v] : g.edges())
            if (rng.uniform() < 0.3) wg.set_edge(u, v, 2);
        if (all_pairs_distances(g) != oracle::floyd_warshall(g) ||
            all_pairs_distances(wg) != oracle::floyd_warshall(wg)) {
            o.pass = false;
            o.detail = "distance mismatch on graph " + std::to_string(trial);
            return o;
        }
    }
    std::size_t subsets = 0, feasible = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Rng local(seed + 4000);
        const std::size_t n = 2 + local.index(9);
        const Arrangement arr = gen_random_connected(2, n, seed);
        const auto& s = arr.spheres();
        if (ply(arr).ply != oracle::disk_ply(s)) {
            o.pass = false;
            o.detail = "ply mismatch at seed " + std::to_string(seed);
            return o;
        }
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Sphere> pick;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) pick.push_back(s[i]);
            const bool lib = common_point(pick).feasible;
            const bool ref = oracle::disks_share_point(pick);
            ++subsets;
            feasible += ref ? 1 : 0;
            if (lib != ref) {
                o.pass = false;
                o.detail = "feasibility mismatch at seed " + std::to_string(seed) + " mask " +
                           std::to_string(mask) + (ref ? " (oracle feasible)" : " (oracle infeasible)");
                return o;
            }
        }
    }
    o.detail = "300 K_{t,t} graphs, 200 distance graphs, 300 ply instances (" +
               std::to_string(subsets) + " subsets, " + std::to_string(feasible) +
               " feasible) agree";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "stereographic equivalence", 30, stereographic_equivalence},
        {2, "strong colouring bound", 60, strong_colouring_bound},
        {3, "shallow minor vs scol", 120, minor_scol_consistency},
        {4, "ply-chain inequality", 120, ply_chain_inequality},
        {5, "nested path certificate", 30, nested_path_certificate},
        {6, "PRS dichotomy", 600, prs_dichotomy},
        {7, "separator scaling", 1200, separator_scaling},
        {8, "hat-graph distance equality", 60, distance_equality},
        {9, "slab quasi-isometry", 120, quasi_isometry},
        {10, "cover soundness", 300, cover_soundness},
        {11, "oracle equivalences", 300, oracle_equivalences},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.budget_s) {
            out.pass = false;
            out.detail += " [over time budget]";
        }
        failures += out.pass ? 0 : 1;
        std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, out.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
