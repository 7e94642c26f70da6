#include "spheresep/containment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "spheresep/error.hpp"

namespace spheresep {

namespace {

// Pairs of closed balls that share a point, found by sweeping the first axis.
std::vector<std::vector<Vertex>> overlap_lists(std::span<const Sphere> spheres, double eps) {
    const std::size_t n = spheres.size();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    auto lo = [&](Vertex v) { return spheres[v].center[0] - spheres[v].radius; };
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return lo(a) < lo(b) || (lo(a) == lo(b) && a < b);
    });
    for (std::size_t a = 0; a < n; ++a) {
        const Vertex u = order[a];
        const double reach = spheres[u].center[0] + spheres[u].radius;
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vertex v = order[b];
            if (!approx_leq(lo(v), reach, eps)) break;
            if (balls_overlap(spheres[u], spheres[v], eps)) {
                out[u].push_back(v);
                out[v].push_back(u);
            }
        }
    }
    for (auto& l : out) std::sort(l.begin(), l.end());
    return out;
}

}  // namespace

ContainmentPoset::ContainmentPoset(const Arrangement& arr, double eps) {
    require(arr.kind() == ObjectKind::kSphere, ErrorCode::kInvalidArgument,
            "containment is defined for sphere arrangements only");
    const auto& spheres = arr.spheres();
    const std::size_t n = spheres.size();
    inner_.assign(n, {});
    outer_.assign(n, {});
    const auto overlaps = overlap_lists(spheres, eps);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : overlaps[u])
            if (ball_contains(spheres[u], spheres[v], eps)) {
                inner_[u].push_back(v);
                outer_[v].push_back(u);
            }
    for (auto& l : outer_) std::sort(l.begin(), l.end());

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : inner_[u]) {
            require(v != u, ErrorCode::kDegenerate, "containment relation is not irreflexive");
            require(!contains(v, u), ErrorCode::kDegenerate,
                    "containment relation is not antisymmetric");
            require(std::includes(inner_[u].begin(), inner_[u].end(), inner_[v].begin(),
                                  inner_[v].end()),
                    ErrorCode::kDegenerate,
                    "containment relation is not transitive (near-degenerate input)");
        }
    }
}

bool ContainmentPoset::contains(Vertex outer, Vertex inner) const {
    const auto& l = inner_.at(outer);
    return std::binary_search(l.begin(), l.end(), inner);
}

std::vector<std::pair<Vertex, Vertex>> ContainmentPoset::pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : inner_[u]) out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> ContainmentPoset::maximal() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (outer_[v].empty()) out.push_back(v);
    return out;
}

std::vector<Vertex> ContainmentPoset::minimal() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
        if (inner_[v].empty()) out.push_back(v);
    return out;
}

ContainmentPoset build_poset(const Arrangement& arr, double eps) {
    return ContainmentPoset(arr, eps);
}

namespace {

// Number of elements in the longest chain descending from each vertex.
std::vector<std::size_t> descending_heights(const ContainmentPoset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> height(n, 0);
    // Inner elements are finished before their containers: visit by
    // increasing number of elements contained (a linear extension).
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return p.inner(a).size() < p.inner(b).size(); });
    for (Vertex v : order) {
        std::size_t best = 0;
        for (Vertex u : p.inner(v)) best = std::max(best, height[u]);
        height[v] = best + 1;
    }
    return height;
}

}  // namespace

std::vector<Vertex> longest_nested_chain(const ContainmentPoset& p) {
    if (p.size() == 0) return {};
    const auto height = descending_heights(p);
    const std::size_t k = *std::max_element(height.begin(), height.end());
    std::vector<Vertex> chain;
    Vertex cur = static_cast<Vertex>(std::find(height.begin(), height.end(), k) - height.begin());
    chain.push_back(cur);
    while (height[cur] > 1) {
        for (Vertex u : p.inner(cur))
            if (height[u] == height[cur] - 1) {
                cur = u;
                break;
            }
        chain.push_back(cur);
    }
    return chain;
}

std::vector<std::vector<Vertex>> antichain_decomposition(const ContainmentPoset& p) {
    const auto height = descending_heights(p);
    const std::size_t k = height.empty() ? 0 : *std::max_element(height.begin(), height.end());
    std::vector<std::vector<Vertex>> levels(k);
    for (Vertex v = 0; v < p.size(); ++v) levels[height[v] - 1].push_back(v);
    return levels;
}

// ── ply ────────────────────────────────────────────────────────────

namespace {

double minimax_value(std::span<const Sphere> balls, const Point& x, std::size_t* active) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < balls.size(); ++i) {
        const double g = distance(x, balls[i].center) - balls[i].radius;
        if (g > best) {
            best = g;
            if (active) *active = i;
        }
    }
    return best;
}

}  // namespace

Feasibility common_point(std::span<const Sphere> balls, double eps) {
    Feasibility out;
    if (balls.empty()) {
        out.feasible = true;
        return out;
    }
    const std::size_t d = balls.front().dim();
    double max_r = 0.0;
    Point x(d, 0.0);
    for (const Sphere& b : balls) {
        max_r = std::max(max_r, b.radius);
        for (std::size_t i = 0; i < d; ++i) x[i] += b.center[i] / static_cast<double>(balls.size());
    }
    const double accept = eps * max_r;

    Point best_x = x;
    double best = minimax_value(balls, x, nullptr);

    // 10^4 subgradient steps of length scale/k, restarted from the best
    // point with a tenfold smaller scale every 2000 steps.
    constexpr int kRounds = 5;
    constexpr int kStepsPerRound = 2000;
    double scale = max_r;
    for (int round = 0; round < kRounds && best > accept; ++round, scale *= 0.1) {
        x = best_x;
        for (int k = 1; k <= kStepsPerRound && best > accept; ++k) {
            std::size_t active = 0;
            const double g = minimax_value(balls, x, &active);
            if (g < best) {
                best = g;
                best_x = x;
                if (best <= accept) break;
            }
            const Point& c = balls[active].center;
            const double len = distance(x, c);
            if (len == 0.0) break;
            const double step = scale / static_cast<double>(k);
            for (std::size_t i = 0; i < d; ++i) x[i] -= step * (x[i] - c[i]) / len;
        }
    }
    const double final_value = minimax_value(balls, x, nullptr);
    if (final_value < best) {
        best = final_value;
        best_x = x;
    }
    out.feasible = best <= accept;
    out.point = std::move(best_x);
    out.value = best;
    return out;
}

namespace {

// Branch and bound over sets of balls with a common point. By Helly's
// theorem a set is feasible iff every subset of at most d+1 balls is, so a
// candidate v extends S iff T + v is feasible for every T in S, |T| <= d.
class PlySearch {
public:
    PlySearch(std::span<const Sphere> spheres, std::vector<std::vector<Vertex>> overlaps,
              double eps)
        : spheres_(spheres), overlaps_(std::move(overlaps)), eps_(eps),
          helly_(spheres.empty() ? 1 : spheres.front().dim() + 1) {}

    std::vector<Vertex> run(std::vector<Vertex> seed, std::vector<Vertex> candidates) {
        best_ = seed;
        extend(seed, candidates);
        return best_;
    }

private:
    bool overlapping(Vertex a, Vertex b) const {
        const auto& l = overlaps_[a];
        return std::binary_search(l.begin(), l.end(), b);
    }

    bool small_subset_feasible(std::vector<Vertex> subset) {
        std::sort(subset.begin(), subset.end());
        if (subset.size() <= 1) return true;
        if (subset.size() == 2) return overlapping(subset[0], subset[1]);
        const auto it = cache_.find(subset);
        if (it != cache_.end()) return it->second;
        std::vector<Sphere> balls;
        for (Vertex v : subset) balls.push_back(spheres_[v]);
        const bool ok = common_point(balls, eps_).feasible;
        cache_.emplace(std::move(subset), ok);
        return ok;
    }

    // Every T in `set` with 2 <= |T| <= helly-1, together with v, is feasible.
    bool compatible(const std::vector<Vertex>& set, Vertex v) {
        std::vector<Vertex> pick;
        return compatible_rec(set, 0, pick, v);
    }

    bool compatible_rec(const std::vector<Vertex>& set, std::size_t from,
                        std::vector<Vertex>& pick, Vertex v) {
        if (pick.size() >= 2) {
            std::vector<Vertex> subset = pick;
            subset.push_back(v);
            if (!small_subset_feasible(subset)) return false;
        }
        if (pick.size() + 1 >= helly_) return true;
        for (std::size_t i = from; i < set.size(); ++i) {
            pick.push_back(set[i]);
            const bool ok = compatible_rec(set, i + 1, pick, v);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    void extend(std::vector<Vertex>& set, const std::vector<Vertex>& candidates) {
        if (set.size() > best_.size()) best_ = set;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (set.size() + (candidates.size() - i) <= best_.size()) return;
            const Vertex v = candidates[i];
            if (!compatible(set, v)) continue;
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (overlapping(v, candidates[j])) next.push_back(candidates[j]);
            set.push_back(v);
            extend(set, next);
            set.pop_back();
        }
    }

    std::span<const Sphere> spheres_;
    std::vector<std::vector<Vertex>> overlaps_;
    double eps_;
    std::size_t helly_;
    std::map<std::vector<Vertex>, bool> cache_;
    std::vector<Vertex> best_;
};

PlyResult finish(std::span<const Sphere> spheres, std::vector<Vertex> members, double eps) {
    PlyResult out;
    std::sort(members.begin(), members.end());
    std::vector<Sphere> balls;
    for (Vertex v : members) balls.push_back(spheres[v]);
    out.ply = members.size();
    out.witness.members = std::move(members);
    out.witness.point = common_point(balls, eps).point;
    return out;
}

}  // namespace

PlyResult ply(const Arrangement& arr, double eps, std::size_t max_n) {
    require(arr.kind() == ObjectKind::kSphere, ErrorCode::kInvalidArgument,
            "ply is defined for sphere arrangements only");
    require(arr.size() <= max_n, ErrorCode::kTooLarge,
            "exhaustive ply limited to " + std::to_string(max_n) +
                " spheres; use ply_lower_bound for larger inputs");
    const auto& spheres = arr.spheres();
    if (spheres.empty()) return {};
    PlySearch search(spheres, overlap_lists(spheres, eps), eps);
    std::vector<Vertex> all(spheres.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    return finish(spheres, search.run({}, all), eps);
}

PlyResult local_ply(std::span<const Sphere> spheres, Vertex v, double eps) {
    require(v < spheres.size(), ErrorCode::kInvalidArgument, "vertex out of range");
    // Only v's overlap list matters for candidates, but the search needs the
    // overlap relation among those candidates too.
    std::vector<Vertex> cand;
    for (Vertex u = 0; u < spheres.size(); ++u)
        if (u != v && balls_overlap(spheres[u], spheres[v], eps)) cand.push_back(u);
    std::vector<Vertex> local_ids = cand;
    local_ids.push_back(v);
    std::sort(local_ids.begin(), local_ids.end());
    std::vector<std::vector<Vertex>> overlaps(spheres.size());
    for (std::size_t i = 0; i < local_ids.size(); ++i)
        for (std::size_t j = i + 1; j < local_ids.size(); ++j) {
            const Vertex a = local_ids[i], b = local_ids[j];
            if (balls_overlap(spheres[a], spheres[b], eps)) {
                overlaps[a].push_back(b);
                overlaps[b].push_back(a);
            }
        }
    PlySearch search(spheres, std::move(overlaps), eps);
    return finish(spheres, search.run({v}, cand), eps);
}

PlyResult ply_lower_bound(const Arrangement& arr, double eps) {
    require(arr.kind() == ObjectKind::kSphere, ErrorCode::kInvalidArgument,
            "ply is defined for sphere arrangements only");
    const auto& spheres = arr.spheres();
    if (spheres.empty()) return {};
    const auto overlaps = overlap_lists(spheres, eps);
    const std::size_t d = arr.dim();
    PlyResult best;

    auto consider = [&](Vertex anchor, const Point& p) {
        std::vector<Vertex> members;
        if (distance(p, spheres[anchor].center) <= spheres[anchor].radius * (1 + eps))
            members.push_back(anchor);
        for (Vertex u : overlaps[anchor])
            if (distance(p, spheres[u].center) <= spheres[u].radius * (1 + eps))
                members.push_back(u);
        if (members.size() > best.ply) {
            std::sort(members.begin(), members.end());
            best.ply = members.size();
            best.witness = {p, std::move(members)};
        }
    };

    for (Vertex a = 0; a < spheres.size(); ++a) {
        consider(a, spheres[a].center);
        for (Vertex b : overlaps[a]) {
            if (b < a) continue;
            const double dist = distance(spheres[a].center, spheres[b].center);
            if (dist == 0.0) continue;
            // Overlap of the two balls along the segment from c_a to c_b.
            const double lo = std::max(-spheres[a].radius, dist - spheres[b].radius);
            const double hi = std::min(spheres[a].radius, dist + spheres[b].radius);
            const double s = 0.5 * (lo + hi);
            Point p(d);
            for (std::size_t i = 0; i < d; ++i)
                p[i] = spheres[a].center[i] +
                       s * (spheres[b].center[i] - spheres[a].center[i]) / dist;
            consider(a, p);
        }
    }
    return best;
}

}  // namespace spheresep
