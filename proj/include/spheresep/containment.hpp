#pragma once

// Containment order on sphere arrangements (ball(S') contains ball(S)),
// nested chains, Mirsky antichain levels, and the ply of the ball family.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

/// Strict partial order "i contains j" over a sphere arrangement.
class ContainmentPoset {
public:
    ContainmentPoset() = default;
    ContainmentPoset(const Arrangement& arr, double eps = kDefaultEps);

    std::size_t size() const noexcept { return inner_.size(); }
    bool contains(Vertex outer, Vertex inner) const;

    /// Vertices contained in v, sorted.
    const std::vector<Vertex>& inner(Vertex v) const { return inner_.at(v); }
    /// Vertices containing v, sorted.
    const std::vector<Vertex>& outer(Vertex v) const { return outer_.at(v); }

    std::vector<std::pair<Vertex, Vertex>> pairs() const;
    std::vector<Vertex> maximal() const;
    std::vector<Vertex> minimal() const;

private:
    std::vector<std::vector<Vertex>> inner_;
    std::vector<std::vector<Vertex>> outer_;
};

ContainmentPoset build_poset(const Arrangement& arr, double eps = kDefaultEps);

/// A longest chain, listed outermost first. Among longest chains the
/// lexicographically smallest vertex sequence is returned.
std::vector<Vertex> longest_nested_chain(const ContainmentPoset& p);

/// Level i holds the elements whose longest descending chain (itself
/// included) has i+1 elements; level 0 are the minimal elements.
std::vector<std::vector<Vertex>> antichain_decomposition(const ContainmentPoset& p);

// ── ply ────────────────────────────────────────────────────────────

inline constexpr std::size_t kPlyExhaustiveLimit = 22;

struct PlyWitness {
    Point point;
    std::vector<Vertex> members;
};

struct PlyResult {
    std::size_t ply = 0;
    PlyWitness witness;
};

struct Feasibility {
    bool feasible = false;
    Point point;
    double value = 0.0;  // min over x of max_i (|x - c_i| - r_i) found
};

/// Decides whether the closed balls share a point by minimising the convex
/// function g(x) = max_i (|x - c_i| - r_i) with subgradient steps of length
/// R/k from the centroid; feasible iff min g <= eps * R, R the largest radius.
Feasibility common_point(std::span<const Sphere> balls, double eps = kDefaultEps);

/// Exact ply by Helly-pruned exhaustive search. Throws kTooLarge when the
/// arrangement has more than `max_n` spheres.
PlyResult ply(const Arrangement& arr, double eps = kDefaultEps,
              std::size_t max_n = kPlyExhaustiveLimit);

/// Largest set of balls sharing a point with the ball `v` (v included),
/// searched among the balls overlapping v.
PlyResult local_ply(std::span<const Sphere> spheres, Vertex v, double eps = kDefaultEps);

/// Depth of the best candidate point among centers and lens midpoints.
/// Always a valid lower bound on ply.
PlyResult ply_lower_bound(const Arrangement& arr, double eps = kDefaultEps);

/// Upper bound 2kt on ply for K_{t,t}-free arrangements with longest chain k.
inline std::size_t ply_chain_bound(std::size_t longest_chain, std::size_t t) {
    return 2 * longest_chain * t;
}

}  // namespace spheresep
