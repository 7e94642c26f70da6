#pragma once

// Strong colouring numbers: r-width of a vertex ordering, the radius
// ordering of a ball arrangement, and exact scol_r on tiny graphs.

#include <cstddef>
#include <vector>

#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

/// A linear order on 0..n-1; perm()[i] is the vertex at position i.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<Vertex> perm);

    static Ordering identity(std::size_t n);

    const std::vector<Vertex>& perm() const noexcept { return perm_; }
    std::size_t rank(Vertex v) const { return rank_.at(v); }
    std::size_t size() const noexcept { return perm_.size(); }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<Vertex> perm_;
    std::vector<std::size_t> rank_;
};

/// Vertices u < v reachable from v by a path of length <= r whose interior
/// lies strictly after v. Sorted by vertex id.
std::vector<Vertex> strongly_reachable(const Graph& g, const Ordering& ord, std::size_t r,
                                       Vertex v);

std::size_t r_width(const Graph& g, const Ordering& ord, std::size_t r);

/// Decreasing radius, ties broken by index.
Ordering radius_ordering(const Arrangement& arr);

inline constexpr std::size_t kExactScolLimit = 8;

struct ScolResult {
    std::size_t width = 0;
    Ordering ordering;
};

/// Minimum r-width over all n! orderings; the witness is the
/// lexicographically first optimal permutation.
ScolResult exact_scol(const Graph& g, std::size_t r);

/// Upper bound t(2r+2)^d on scol_r for ball graphs of ply t.
std::size_t ball_scol_bound(std::size_t ply, std::size_t r, std::size_t d);

}  // namespace spheresep
