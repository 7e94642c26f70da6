#pragma once

// K_{t,t} subgraphs: exact detection with a witness, an edge-count screen,
// and the constructive certificate that turns a nested family crossed by
// many short disjoint paths into an explicit K_{t,t}.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

struct BicliqueWitness {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
};

/// Sides disjoint, of equal size t, and every cross pair adjacent.
bool verify_biclique(const Graph& g, const BicliqueWitness& w, std::size_t t);

/// Exact search. Rejected (kTooLarge) for t >= 4 on graphs with more than
/// 40 vertices.
std::optional<BicliqueWitness> find_ktt(const Graph& g, std::size_t t);

/// True iff some K_{t,t} subgraph uses vertex v.
bool has_ktt_through(const Graph& g, Vertex v, std::size_t t);

enum class KttScreen {
    kPossible,           // edge count is compatible with K_{t,t}-freeness
    kImpossibleByCount,  // more edges than any K_{t,t}-free graph can have
};

/// Kovari-Sos-Turan bound (1/2)(t-1)^{1/t} n^{2-1/t} + (1/2)(t-1) n.
double kst_edge_bound(std::size_t n, std::size_t t);
KttScreen ktt_count_screen(const Graph& g, std::size_t t);

/// A chain of t(r+1) nested spheres (innermost first) and t^2(r+1) short
/// vertex-disjoint paths avoiding it, each running from a sphere meeting
/// the innermost chain member to one meeting the outermost.
struct NestedPathSystem {
    std::vector<Vertex> nested;
    std::vector<std::vector<Vertex>> paths;
};

/// Empty string if all hypotheses hold, otherwise a description of the
/// first violated one.
std::string check_nested_path_system(const Arrangement& arr, const NestedPathSystem& sys,
                                     std::size_t t, std::size_t r, double eps = kDefaultEps);

/// Positions [first, last] of the chain members meeting sphere x, or nullopt
/// when x meets none. Throws kHypothesisViolation if the positions are not
/// contiguous.
std::optional<std::pair<std::size_t, std::size_t>> chain_interval(
    const Arrangement& arr, const std::vector<Vertex>& chain, Vertex x, double eps = kDefaultEps);

/// Throws kHypothesisViolation naming the failed hypothesis.
BicliqueWitness extract_ktt_from_nested_paths(const Arrangement& arr,
                                              const NestedPathSystem& sys, std::size_t t,
                                              std::size_t r, double eps = kDefaultEps);

}  // namespace spheresep
