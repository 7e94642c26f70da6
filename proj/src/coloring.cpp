#include "spheresep/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spheresep/error.hpp"

namespace spheresep {

Ordering::Ordering(std::vector<Vertex> perm) : perm_(std::move(perm)), rank_(perm_.size()) {
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const Vertex v = perm_[i];
        require(v < perm_.size() && !seen[v], ErrorCode::kInvalidArgument,
                "ordering is not a permutation");
        seen[v] = true;
        rank_[v] = i;
    }
}

Ordering Ordering::identity(std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    return Ordering(std::move(perm));
}

namespace {

// Truncated BFS from v through vertices ranked after v; a single final step
// may land on an earlier vertex, which is then counted and not expanded.
class ReachScanner {
public:
    explicit ReachScanner(std::size_t n) : stamp_(n, 0) {}

    template <typename OnReach>
    void scan(const Graph& g, const Ordering& ord, std::size_t r, Vertex v, OnReach&& on_reach) {
        ++epoch_;
        const std::size_t rv = ord.rank(v);
        frontier_.assign(1, v);
        mark(v);
        for (std::size_t level = 0; level < r && !frontier_.empty(); ++level) {
            next_.clear();
            for (Vertex x : frontier_)
                for (Vertex w : g.neighbors(x)) {
                    if (seen(w)) continue;
                    mark(w);
                    if (ord.rank(w) < rv)
                        on_reach(w);
                    else
                        next_.push_back(w);
                }
            frontier_.swap(next_);
        }
    }

private:
    bool seen(Vertex w) const { return stamp_[w] == epoch_; }
    void mark(Vertex w) { stamp_[w] = epoch_; }

    std::vector<std::size_t> stamp_;
    std::size_t epoch_ = 0;
    std::vector<Vertex> frontier_, next_;
};

void require_ordering(const Graph& g, const Ordering& ord, std::size_t r) {
    require(r >= 1, ErrorCode::kInvalidArgument, "r must be at least 1");
    require(ord.size() == g.size(), ErrorCode::kInvalidArgument,
            "ordering size does not match graph");
}

}  // namespace

std::vector<Vertex> strongly_reachable(const Graph& g, const Ordering& ord, std::size_t r,
                                       Vertex v) {
    require_ordering(g, ord, r);
    ReachScanner scanner(g.size());
    std::vector<Vertex> out;
    scanner.scan(g, ord, r, v, [&](Vertex u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t r_width(const Graph& g, const Ordering& ord, std::size_t r) {
    require_ordering(g, ord, r);
    ReachScanner scanner(g.size());
    std::size_t width = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        std::size_t count = 0;
        scanner.scan(g, ord, r, v, [&](Vertex) { ++count; });
        width = std::max(width, count);
    }
    return width;
}

Ordering radius_ordering(const Arrangement& arr) {
    const auto& spheres = arr.spheres();
    std::vector<Vertex> perm(spheres.size());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
        return spheres[a].radius > spheres[b].radius;
    });
    return Ordering(std::move(perm));
}

ScolResult exact_scol(const Graph& g, std::size_t r) {
    require(r >= 1, ErrorCode::kInvalidArgument, "r must be at least 1");
    const std::size_t n = g.size();
    require(n <= kExactScolLimit, ErrorCode::kTooLarge,
            "exact_scol is limited to " + std::to_string(kExactScolLimit) + " vertices");
    if (n == 0) return {0, Ordering::identity(0)};

    // The strongly reachable set of v depends only on the set of vertices
    // placed before v, so tabulate counts per (v, earlier-set) once.
    std::vector<unsigned> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;
    const unsigned full = (1u << n) - 1;
    std::vector<std::vector<unsigned char>> reach(n, std::vector<unsigned char>(full + 1, 0));
    for (Vertex v = 0; v < n; ++v) {
        for (unsigned before = 0; before <= full; ++before) {
            if (before & (1u << v)) continue;
            const unsigned later = full & ~before & ~(1u << v);
            unsigned visited = 1u << v, frontier = 1u << v, hit = 0;
            for (std::size_t level = 0; level < r && frontier; ++level) {
                unsigned next = 0;
                for (Vertex x = 0; x < n; ++x)
                    if (frontier & (1u << x)) next |= nbr[x];
                next &= ~visited;
                visited |= next;
                hit |= next & before;
                frontier = next & later;
            }
            reach[v][before] = static_cast<unsigned char>(__builtin_popcount(hit));
        }
    }

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::size_t best = n;
    std::vector<Vertex> best_perm = perm;
    do {
        std::size_t width = 0;
        unsigned before = 0;
        for (Vertex v : perm) {
            width = std::max<std::size_t>(width, reach[v][before]);
            if (width >= best) break;
            before |= 1u << v;
        }
        if (width < best) {
            best = width;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, Ordering(std::move(best_perm))};
}

std::size_t ball_scol_bound(std::size_t ply, std::size_t r, std::size_t d) {
    std::size_t bound = ply;
    for (std::size_t i = 0; i < d; ++i) bound *= 2 * r + 2;
    return bound;
}

}  // namespace spheresep
