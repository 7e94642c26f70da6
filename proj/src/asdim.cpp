#include "spheresep/asdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spheresep/containment.hpp"
#include "spheresep/error.hpp"
#include "spheresep/parallel.hpp"
#include "spheresep/random.hpp"

namespace spheresep {

Vertex choose_pivot(const Arrangement& arr, double eps) {
    require(arr.size() > 0, ErrorCode::kInvalidArgument, "empty arrangement has no pivot");
    const auto& spheres = arr.spheres();
    const ContainmentPoset poset(arr, eps);
    Vertex best = arr.size();
    for (Vertex v : poset.maximal())
        if (best == arr.size() || spheres[v].radius > spheres[best].radius) best = v;
    return best;
}

HatGraph build_hat_graph(const Arrangement& arr, double eps) {
    require(arr.kind() == ObjectKind::kSphere, ErrorCode::kInvalidArgument,
            "hat-graph needs a sphere arrangement");
    require(arr.size() > 0, ErrorCode::kInvalidArgument, "empty arrangement");
    HatGraph hg;
    hg.spheres = arr.spheres();
    hg.graph = build_intersection_graph(arr, eps);
    require(is_connected(hg.graph), ErrorCode::kDisconnected,
            "intersection graph is disconnected");
    hg.pivot = choose_pivot(arr, eps);
    hg.level = bfs_distances(hg.graph, hg.pivot);
    const auto depth = static_cast<std::size_t>(*std::max_element(hg.level.begin(), hg.level.end()));
    hg.layers.assign(depth + 1, {});
    for (Vertex v = 0; v < arr.size(); ++v)
        hg.layers[static_cast<std::size_t>(hg.level[v])].push_back(v);

    hg.weighted = WeightedGraph(hg.graph);
    const ContainmentPoset poset(arr, eps);
    for (Vertex x = 0; x < arr.size(); ++x)
        for (Vertex y : poset.inner(x))
            if (hg.level[x] == hg.level[y] && !hg.graph.has_edge(x, y)) {
                hg.weighted.set_edge(x, y, 2);
                hg.heavy_edges.emplace_back(std::min(x, y), std::max(x, y));
            }
    std::sort(hg.heavy_edges.begin(), hg.heavy_edges.end());
    return hg;
}

DistancePairCheck check_dequal(const HatGraph& hg) {
    const std::size_t n = hg.graph.size();
    for (Vertex x = 0; x < n; ++x) {
        const auto plain = bfs_distances(hg.graph, x);
        const auto hat = weighted_distances(hg.weighted, x);
        for (Vertex y = 0; y < n; ++y)
            if (plain[y] != hat[y]) return {false, x, y, plain[y], hat[y]};
    }
    return {};
}

DistancePairCheck check_real_projection(const HatGraph& hg, std::size_t exhaustive_limit,
                                        std::size_t sample_sources, std::uint64_t seed) {
    const std::size_t n = hg.graph.size();
    std::vector<Vertex> sources;
    if (n <= exhaustive_limit) {
        for (Vertex x = 0; x < n; ++x) sources.push_back(x);
    } else {
        Rng rng(seed);
        for (std::size_t i = 0; i < sample_sources; ++i) sources.push_back(rng.index(n));
    }
    for (Vertex x : sources) {
        const auto dist = weighted_distances(hg.weighted, x);
        for (Vertex y = 0; y < n; ++y) {
            const Distance gap = std::abs(hg.level[x] - hg.level[y]);
            if (gap > dist[y]) return {false, x, y, gap, dist[y]};
        }
    }
    return {};
}

std::optional<Edge> heavy_edge_without_common_neighbor(const HatGraph& hg) {
    for (const auto& [u, v] : hg.heavy_edges) {
        const auto nu = hg.graph.neighbors(u);
        const auto nv = hg.graph.neighbors(v);
        std::vector<Vertex> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        if (common.empty()) return Edge{u, v};
    }
    return std::nullopt;
}

Slab layer_slab(const HatGraph& hg, Distance t, double S) {
    require(S > 0, ErrorCode::kInvalidArgument, "S must be positive");
    Slab slab;
    slab.t = t;
    slab.width = static_cast<Distance>(std::ceil(S));
    for (Vertex v = 0; v < hg.level.size(); ++v)
        if (hg.level[v] >= t && hg.level[v] <= t + slab.width) slab.vertices.push_back(v);
    require(!slab.vertices.empty(), ErrorCode::kInvalidArgument,
            "slab at t = " + std::to_string(t) + " is empty");
    slab.graph = induced_subgraph(hg.weighted, slab.vertices);
    return slab;
}

QuasiIsometryReport project_to_maximal(const HatGraph& hg, const Slab& slab, double eps) {
    QuasiIsometryReport rep;
    rep.Pi = 2.0 * static_cast<double>(slab.width) + 4.0;
    rep.Sigma = 1.0;
    const auto& A = slab.vertices;
    const std::size_t k = A.size();

    std::vector<std::vector<std::size_t>> containers(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && ball_contains(hg.spheres[A[j]], hg.spheres[A[i]], eps))
                containers[i].push_back(j);
    std::vector<bool> is_max(k);
    std::vector<std::size_t> m_index(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        is_max[i] = containers[i].empty();
        if (is_max[i]) {
            m_index[i] = rep.maximal.size();
            rep.maximal.push_back(A[i]);
        }
    }

    std::vector<std::size_t> f(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (is_max[i]) {
            f[i] = i;
            continue;
        }
        for (std::size_t j : containers[i]) {
            if (!is_max[j]) continue;
            if (f[i] == k || hg.spheres[A[j]].radius > hg.spheres[A[f[i]]].radius) f[i] = j;
        }
        if (f[i] == k) {
            rep.ok = false;
            rep.violation = "vertex " + std::to_string(A[i]) + " lies in no maximal sphere";
            return rep;
        }
    }
    for (std::size_t i = 0; i < k; ++i) rep.image.push_back(A[f[i]]);

    const Graph gm = induced_subgraph(hg.graph, rep.maximal);
    std::vector<std::vector<Distance>> dm(rep.maximal.size());
    for (std::size_t m = 0; m < rep.maximal.size(); ++m) dm[m] = bfs_distances(gm, m);

    rep.lower_slack = std::numeric_limits<double>::infinity();
    rep.upper_slack = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < k; ++x) {
        const auto da = weighted_distances(slab.graph, x);
        for (std::size_t y = x + 1; y < k; ++y) {
            const Distance a = da[y];
            const Distance b = dm[m_index[f[x]]][m_index[f[y]]];
            const std::string pair =
                "(" + std::to_string(A[x]) + ", " + std::to_string(A[y]) + ")";
            if (a == kUnreachable || b == kUnreachable) {
                if (a != b) {
                    rep.ok = false;
                    rep.violation = "pair " + pair + " is connected in only one of the slab and G[M]";
                    return rep;
                }
                continue;
            }
            const double lower = static_cast<double>(b) -
                                 (static_cast<double>(a) / rep.Pi - rep.Sigma);
            const double upper = rep.Pi * static_cast<double>(a) + rep.Sigma -
                                 static_cast<double>(b);
            rep.lower_slack = std::min(rep.lower_slack, lower);
            rep.upper_slack = std::min(rep.upper_slack, upper);
            if (lower < 0 || upper < 0) {
                rep.ok = false;
                rep.violation = "pair " + pair + ": slab distance " + std::to_string(a) +
                                ", image distance " + std::to_string(b);
                return rep;
            }
        }
    }
    return rep;
}

namespace {

template <typename G, typename DistFn>
CoverCheck verify_cover_impl(const G& g, const Cover& cover, DistFn distances) {
    CoverCheck check;
    const std::size_t n = g.size();
    auto bad = [&](std::string why) {
        check.ok = false;
        check.violation = std::move(why);
        return check;
    };
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    const std::size_t nf = cover.families.size();
    std::vector<std::vector<std::size_t>> owner(nf, std::vector<std::size_t>(n, kNone));
    std::vector<bool> covered(n, false);
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t s = 0; s < cover.families[f].size(); ++s)
            for (Vertex v : cover.families[f][s]) {
                if (v >= n) return bad("family " + std::to_string(f) + " names unknown vertex " +
                                       std::to_string(v));
                if (owner[f][v] != kNone && owner[f][v] != s)
                    return bad("family " + std::to_string(f) + ": sets " +
                               std::to_string(owner[f][v]) + " and " + std::to_string(s) +
                               " share vertex " + std::to_string(v));
                owner[f][v] = s;
                covered[v] = true;
            }
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) return bad("vertex " + std::to_string(v) + " is not covered");

    for (Vertex u = 0; u < n; ++u) {
        const auto dist = distances(g, u);
        for (std::size_t f = 0; f < nf; ++f) {
            const std::size_t s = owner[f][u];
            if (s == kNone) continue;
            for (Vertex w = 0; w < n; ++w) {
                const std::size_t o = owner[f][w];
                if (o == kNone) continue;
                if (o == s) {
                    if (dist[w] == kUnreachable)
                        return bad("family " + std::to_string(f) + " set " + std::to_string(s) +
                                   " is unbounded");
                    check.max_diameter = std::max(check.max_diameter, dist[w]);
                    if (dist[w] > cover.D)
                        return bad("family " + std::to_string(f) + " set " + std::to_string(s) +
                                   " has diameter > " + std::to_string(cover.D) + " (vertices " +
                                   std::to_string(u) + ", " + std::to_string(w) + ")");
                } else if (dist[w] != kUnreachable &&
                           static_cast<double>(dist[w]) <= cover.r) {
                    return bad("family " + std::to_string(f) + ": sets " + std::to_string(s) +
                               " and " + std::to_string(o) + " are within distance " +
                               std::to_string(dist[w]) + " (vertices " + std::to_string(u) +
                               ", " + std::to_string(w) + ")");
                }
            }
        }
    }
    return check;
}

}  // namespace

CoverCheck verify_cover(const Graph& g, const Cover& cover) {
    return verify_cover_impl(g, cover,
                             [](const Graph& gr, Vertex s) { return bfs_distances(gr, s); });
}

CoverCheck verify_cover(const WeightedGraph& g, const Cover& cover) {
    return verify_cover_impl(
        g, cover, [](const WeightedGraph& gr, Vertex s) { return weighted_distances(gr, s); });
}

namespace {

// Greedy ball carving inside one slab; returns families of sets.
std::vector<std::vector<std::vector<Vertex>>> carve_slab(const HatGraph& hg,
                                                         const std::vector<Vertex>& slab,
                                                         double r) {
    std::vector<std::vector<std::vector<Vertex>>> families;
    if (slab.empty()) return families;
    const std::size_t n = hg.graph.size();
    const WeightedGraph local = induced_subgraph(hg.weighted, slab);
    const auto reach = static_cast<Distance>(std::floor(r));
    const double ball_radius = 2.0 * r;

    std::vector<bool> taken(slab.size(), false);
    std::vector<std::vector<char>> near;  // per family: within distance r of it in G
    std::vector<std::size_t> visit(n, 0);
    std::size_t epoch = 0;
    for (std::size_t c = 0; c < slab.size(); ++c) {
        if (taken[c]) continue;
        const auto dist = weighted_distances(local, c);
        std::vector<Vertex> set;
        for (std::size_t i = 0; i < slab.size(); ++i)
            if (!taken[i] && dist[i] != kUnreachable &&
                static_cast<double>(dist[i]) <= ball_radius) {
                taken[i] = true;
                set.push_back(slab[i]);
            }
        std::size_t fam = 0;
        while (fam < families.size() &&
               std::any_of(set.begin(), set.end(), [&](Vertex v) { return near[fam][v] != 0; }))
            ++fam;
        if (fam == families.size()) {
            families.emplace_back();
            near.emplace_back(n, 0);
        }
        // Multi-source BFS in G to depth floor(r). Vertices already near the
        // family are still expanded, since this set may reach past them.
        ++epoch;
        std::vector<Vertex> frontier = set;
        for (Vertex v : set) {
            near[fam][v] = 1;
            visit[v] = epoch;
        }
        for (Distance level = 0; level < reach && !frontier.empty(); ++level) {
            std::vector<Vertex> next;
            for (Vertex x : frontier)
                for (Vertex w : hg.graph.neighbors(x))
                    if (visit[w] != epoch) {
                        visit[w] = epoch;
                        near[fam][w] = 1;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        families[fam].push_back(std::move(set));
    }
    return families;
}

}  // namespace

Cover build_cover(const HatGraph& hg, double r, unsigned jobs) {
    require(r > 0, ErrorCode::kInvalidArgument, "r must be positive");
    const std::size_t n = hg.graph.size();
    const auto length = std::max<Distance>(1, static_cast<Distance>(std::ceil(2.0 * r)));
    const Distance top = n ? *std::max_element(hg.level.begin(), hg.level.end()) : 0;
    const auto slabs = static_cast<std::size_t>(top / length) + 1;
    std::vector<std::vector<Vertex>> members(slabs);
    for (Vertex v = 0; v < n; ++v) members[static_cast<std::size_t>(hg.level[v] / length)].push_back(v);

    std::vector<std::vector<std::vector<std::vector<Vertex>>>> carved(slabs);
    parallel_for(slabs, jobs, [&](std::size_t k) { carved[k] = carve_slab(hg, members[k], r); });

    std::size_t per_parity[2] = {0, 0};
    for (std::size_t k = 0; k < slabs; ++k)
        per_parity[k % 2] = std::max(per_parity[k % 2], carved[k].size());
    Cover cover;
    cover.r = r;
    cover.families.assign(per_parity[0] + per_parity[1], {});
    for (std::size_t k = 0; k < slabs; ++k) {
        const std::size_t offset = k % 2 == 0 ? 0 : per_parity[0];
        for (std::size_t f = 0; f < carved[k].size(); ++f)
            for (auto& set : carved[k][f]) cover.families[offset + f].push_back(std::move(set));
    }

    // D is the largest diameter in G of any set; each vertex lies in exactly one set.
    std::vector<std::size_t> set_of(n, 0);
    std::size_t id = 0;
    for (const auto& fam : cover.families)
        for (const auto& set : fam) {
            for (Vertex v : set) set_of[v] = id;
            ++id;
        }
    std::vector<Distance> diam(n, 0);
    parallel_for(n, jobs, [&](std::size_t u) {
        const auto dist = bfs_distances(hg.graph, u);
        for (Vertex w = 0; w < n; ++w)
            if (set_of[w] == set_of[u]) diam[u] = std::max(diam[u], dist[w]);
    });
    cover.D = n ? *std::max_element(diam.begin(), diam.end()) : 0;
    return cover;
}

}  // namespace spheresep
