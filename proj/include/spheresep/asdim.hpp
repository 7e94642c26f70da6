#pragma once

// Layering machinery for covers of sphere intersection graphs: the pivot,
// BFS layers, the hat-graph with weight-2 nesting edges, slabs of bounded
// p-range, the projection of a slab onto its maximal spheres, and
// r-disjoint D-bounded covers with an exact verifier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

struct HatGraph {
    std::vector<Sphere> spheres;
    Vertex pivot = 0;
    std::vector<Distance> level;                // p(x) = distance from the pivot
    std::vector<std::vector<Vertex>> layers;    // D_i, each sorted
    Graph graph;                                // G
    WeightedGraph weighted;                     // G plus weight-2 edges
    std::vector<Edge> heavy_edges;              // the weight-2 edges, u < v
};

/// Throws kDisconnected if the intersection graph is disconnected and
/// kInvalidArgument for chord arrangements or empty input.
HatGraph build_hat_graph(const Arrangement& arr, double eps = kDefaultEps);

/// Maximal sphere of largest radius, ties to the lowest index.
Vertex choose_pivot(const Arrangement& arr, double eps = kDefaultEps);

struct DistancePairCheck {
    bool ok = true;
    Vertex x = 0, y = 0;
    Distance expected = 0, actual = 0;
};

/// All-pairs distances of G and of the hat-graph agree exactly.
DistancePairCheck check_dequal(const HatGraph& hg);

/// |p(x) - p(y)| <= dist(x, y) for all pairs when n <= exhaustive_limit,
/// otherwise for all pairs whose first vertex is one of `sample_sources`
/// seeded random sources.
DistancePairCheck check_real_projection(const HatGraph& hg, std::size_t exhaustive_limit = 200,
                                        std::size_t sample_sources = 64,
                                        std::uint64_t seed = 1);

/// Every weight-2 edge has a common neighbour in G. Returns the first edge
/// without one.
std::optional<Edge> heavy_edge_without_common_neighbor(const HatGraph& hg);

struct Slab {
    Distance t = 0;
    Distance width = 0;              // ceil(S)
    std::vector<Vertex> vertices;    // original ids, sorted
    WeightedGraph graph;             // induced hat-graph, local ids
};

/// Vertices with t <= p(x) <= t + ceil(S). Throws kInvalidArgument when empty.
Slab layer_slab(const HatGraph& hg, Distance t, double S);

struct QuasiIsometryReport {
    bool ok = true;
    double Pi = 0.0, Sigma = 1.0;
    std::vector<Vertex> maximal;     // M, original ids
    std::vector<Vertex> image;       // f per slab vertex, original ids
    double lower_slack = 0.0;        // min over pairs of d_M - (d_A / Pi - Sigma)
    double upper_slack = 0.0;        // min over pairs of (Pi d_A + Sigma) - d_M
    std::string violation;
};

/// f maps each slab vertex to a containing maximal sphere of the slab
/// (largest radius, then lowest index). Checks both distance inequalities
/// at Pi = 2 ceil(S) + 4, Sigma = 1 and that every m in M has f(m) = m.
QuasiIsometryReport project_to_maximal(const HatGraph& hg, const Slab& slab,
                                       double eps = kDefaultEps);

struct Cover {
    double r = 0.0;
    Distance D = 0;
    std::vector<std::vector<std::vector<Vertex>>> families;
};

struct CoverCheck {
    bool ok = true;
    std::string violation;
    Distance max_diameter = 0;
};

/// Coverage, r-disjointness of every family (distinct sets at distance > r)
/// and diameter <= D for every set, all with exact distances of g.
CoverCheck verify_cover(const Graph& g, const Cover& cover);
CoverCheck verify_cover(const WeightedGraph& g, const Cover& cover);

/// Slabs of p-length ceil(2r) split by parity; greedy ball carving inside
/// each slab; families of same-parity slabs merged by index. D is the
/// measured maximum set diameter in G.
Cover build_cover(const HatGraph& hg, double r, unsigned jobs = 1);

}  // namespace spheresep
