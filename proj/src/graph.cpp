#include "spheresep/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "spheresep/error.hpp"

namespace spheresep {

Graph::Graph(std::size_t n) : adj_(n), labels_(default_labels(n)) {}

Graph::Graph(std::vector<std::string> labels)
    : adj_(labels.size()), labels_(std::move(labels)) {}

std::uint64_t Graph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
    require(u < size() && v < size(), ErrorCode::kInvalidArgument, "edge endpoint out of range");
    require(u != v, ErrorCode::kInvalidArgument, "self-loop rejected");
    if (!edge_set_.insert(key(u, v)).second) return false;
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) return false;
    edge_set_.erase(key(u, v));
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v || u >= size() || v >= size()) return false;
    return edge_set_.count(key(u, v)) != 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

WeightedGraph::WeightedGraph(Graph base) : base_(std::move(base)) {}

void WeightedGraph::set_edge(Vertex u, Vertex v, int weight) {
    require(weight == 1 || weight == 2, ErrorCode::kInvalidArgument, "edge weight must be 1 or 2");
    base_.add_edge(u, v);
    const std::uint64_t k = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (weight == 1)
        weights_.erase(k);
    else
        weights_[k] = weight;
}

int WeightedGraph::weight(Vertex u, Vertex v) const {
    require(base_.has_edge(u, v), ErrorCode::kInvalidArgument, "no such edge");
    const std::uint64_t k = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    const auto it = weights_.find(k);
    return it == weights_.end() ? 1 : it->second;
}

Graph build_intersection_graph(const Arrangement& arr, double eps) {
    Graph g(arr.labels());
    const std::size_t n = arr.size();
    if (arr.kind() == ObjectKind::kChord) {
        const auto& chords = arr.chords();
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (chords_intersect(chords[i], chords[j], arr.dim(), eps)) g.add_edge(i, j);
        return g;
    }
    // Sweep along the first axis: intersecting spheres have overlapping
    // projections onto every axis.
    const auto& spheres = arr.spheres();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    auto lo = [&](Vertex v) { return spheres[v].center[0] - spheres[v].radius; };
    auto hi = [&](Vertex v) { return spheres[v].center[0] + spheres[v].radius; };
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return lo(a) < lo(b) || (lo(a) == lo(b) && a < b);
    });
    for (std::size_t a = 0; a < n; ++a) {
        const Vertex u = order[a];
        const double reach = hi(u);
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vertex v = order[b];
            if (!approx_leq(lo(v), reach, eps)) break;
            if (spheres_intersect(spheres[u], spheres[v], eps)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<std::string> labels;
    std::unordered_map<Vertex, Vertex> local;
    for (Vertex v : vertices) {
        require(v < g.size(), ErrorCode::kInvalidArgument, "vertex out of range");
        local.emplace(v, labels.size());
        labels.push_back(g.labels()[v]);
    }
    Graph out(std::move(labels));
    for (Vertex v : vertices)
        for (Vertex w : g.neighbors(v)) {
            const auto it = local.find(w);
            if (it != local.end() && v < w) out.add_edge(local.at(v), it->second);
        }
    return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
    WeightedGraph out(induced_subgraph(g.base(), vertices));
    for (const auto& [a, b] : out.base().edges()) {
        const int w = g.weight(vertices[a], vertices[b]);
        if (w != 1) out.set_edge(a, b, w);
    }
    return out;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    require(source < g.size(), ErrorCode::kInvalidArgument, "unknown vertex");
    std::vector<Distance> dist(g.size(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<Distance> weighted_distances(const WeightedGraph& g, Vertex source) {
    require(source < g.size(), ErrorCode::kInvalidArgument, "unknown vertex");
    // Dial's algorithm: weights are 1 or 2, so three rotating buckets suffice.
    const Graph& base = g.base();
    std::vector<Distance> dist(g.size(), kUnreachable);
    std::vector<std::vector<Vertex>> buckets(3);
    dist[source] = 0;
    buckets[0].push_back(source);
    std::size_t pending = 1;
    for (Distance d = 0; pending > 0; ++d) {
        auto& bucket = buckets[static_cast<std::size_t>(d % 3)];
        // The bucket may grow while scanned only through weight-0 edges, of
        // which there are none, so iterate over a snapshot.
        std::vector<Vertex> current;
        current.swap(bucket);
        pending -= current.size();
        for (Vertex v : current) {
            if (dist[v] != d) continue;
            for (Vertex w : base.neighbors(v)) {
                const Distance nd = d + g.weight(v, w);
                if (nd < dist[w]) {
                    dist[w] = nd;
                    buckets[static_cast<std::size_t>(nd % 3)].push_back(w);
                    ++pending;
                }
            }
        }
    }
    return dist;
}

Distance shortest_path_distance(const Graph& g, Vertex u, Vertex v) {
    require(v < g.size(), ErrorCode::kInvalidArgument, "unknown vertex");
    return bfs_distances(g, u)[v];
}

Distance shortest_path_distance(const WeightedGraph& g, Vertex u, Vertex v) {
    require(v < g.size(), ErrorCode::kInvalidArgument, "unknown vertex");
    return weighted_distances(g, u)[v];
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<Distance>> out;
    out.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.push_back(bfs_distances(g, v));
    return out;
}

std::vector<std::vector<Distance>> all_pairs_distances(const WeightedGraph& g) {
    std::vector<std::vector<Distance>> out;
    out.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.push_back(weighted_distances(g, v));
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<bool>& removed) {
    const std::size_t n = g.size();
    auto is_removed = [&](Vertex v) { return !removed.empty() && removed[v]; };
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s] || is_removed(s)) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w] && !is_removed(w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::size_t balance_limit(std::size_t n) noexcept { return n <= 1 ? n : (2 * n) / 3; }

std::size_t largest_component_after_removal(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> mask(g.size(), false);
    for (Vertex v : removed) {
        require(v < g.size(), ErrorCode::kInvalidArgument, "separator vertex out of range");
        mask[v] = true;
    }
    std::size_t largest = 0;
    for (const auto& c : connected_components(g, mask)) largest = std::max(largest, c.size());
    return largest;
}

bool balanced_separator_check(const Graph& g, std::span<const Vertex> separator) {
    return largest_component_after_removal(g, separator) <= balance_limit(g.size());
}

}  // namespace spheresep
