#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spheresep/geometry.hpp"

namespace spheresep {

using Vertex = std::size_t;
using Distance = std::int64_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with labelled vertices 0..n-1. Neighbour lists
/// are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    explicit Graph(std::vector<std::string> labels);

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t num_edges() const noexcept { return edge_set_.size(); }

    /// Returns false if the edge already existed. Self-loops are rejected.
    bool add_edge(Vertex u, Vertex v);
    /// Returns false if there was no such edge.
    bool remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    static std::uint64_t key(Vertex u, Vertex v);

    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::vector<std::string> labels_;
};

/// Graph whose edges carry integral weights in {1, 2}.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// Every edge of `base` gets weight 1.
    explicit WeightedGraph(Graph base);

    /// Adds an edge, or overwrites the weight of an existing one.
    void set_edge(Vertex u, Vertex v, int weight);
    int weight(Vertex u, Vertex v) const;

    const Graph& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return base_.size(); }

private:
    Graph base_;
    std::unordered_map<std::uint64_t, int> weights_;  // only non-unit weights
};

// ── construction ───────────────────────────────────────────────────

/// Vertex per object in arrangement order; edge iff the objects intersect.
Graph build_intersection_graph(const Arrangement& arr, double eps = kDefaultEps);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

// ── metric ─────────────────────────────────────────────────────────

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
std::vector<Distance> weighted_distances(const WeightedGraph& g, Vertex source);

Distance shortest_path_distance(const Graph& g, Vertex u, Vertex v);
Distance shortest_path_distance(const WeightedGraph& g, Vertex u, Vertex v);

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);
std::vector<std::vector<Distance>> all_pairs_distances(const WeightedGraph& g);

// ── components and separators ──────────────────────────────────────

/// Components of g minus the vertices flagged in `removed` (may be empty).
/// Each component is sorted; components are ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<bool>& removed = {});
bool is_connected(const Graph& g);

/// Largest component size allowed for a balanced separator in an n-vertex
/// graph: floor(2n/3), except that graphs with at most one vertex are
/// trivially balanced.
std::size_t balance_limit(std::size_t n) noexcept;

std::size_t largest_component_after_removal(const Graph& g, std::span<const Vertex> removed);
bool balanced_separator_check(const Graph& g, std::span<const Vertex> separator);

}  // namespace spheresep
