#include "spheresep/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "spheresep/error.hpp"

namespace spheresep {

namespace {

std::vector<Vertex> common_neighbors(const Graph& g, const std::vector<Vertex>& set) {
    auto first = g.neighbors(set.front());
    std::vector<Vertex> common(first.begin(), first.end());
    for (std::size_t i = 1; i < set.size() && !common.empty(); ++i) {
        auto nb = g.neighbors(set[i]);
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        common.swap(next);
    }
    return common;
}

// Calls visit(subset) for each k-subset of items in lexicographic order
// until visit returns true. Returns whether it did.
bool for_each_subset(const std::vector<Vertex>& items, std::size_t k,
                     const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (k > items.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Vertex> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
        if (visit(subset)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool verify_biclique(const Graph& g, const BicliqueWitness& w, std::size_t t) {
    if (w.side_a.size() != t || w.side_b.size() != t) return false;
    std::set<Vertex> a(w.side_a.begin(), w.side_a.end());
    std::set<Vertex> b(w.side_b.begin(), w.side_b.end());
    if (a.size() != t || b.size() != t) return false;
    for (Vertex x : a)
        if (b.count(x)) return false;
    for (Vertex x : a)
        for (Vertex y : b)
            if (!g.has_edge(x, y)) return false;
    return true;
}

std::optional<BicliqueWitness> find_ktt(const Graph& g, std::size_t t) {
    require(t >= 1, ErrorCode::kInvalidArgument, "t must be at least 1");
    require(t <= 3 || g.size() <= 40, ErrorCode::kTooLarge,
            "exact K_{t,t} search for t >= 4 is limited to 40 vertices");
    // Any K_{t,t} has its A side inside N(b) for every b on the B side, so
    // scanning t-subsets of each neighbourhood is exhaustive.
    std::optional<BicliqueWitness> found;
    for (Vertex b = 0; b < g.size() && !found; ++b) {
        auto nb = g.neighbors(b);
        std::vector<Vertex> hood(nb.begin(), nb.end());
        for_each_subset(hood, t, [&](const std::vector<Vertex>& side_a) {
            auto common = common_neighbors(g, side_a);
            if (common.size() < t) return false;
            common.resize(t);
            found = BicliqueWitness{side_a, common};
            return true;
        });
    }
    return found;
}

bool has_ktt_through(const Graph& g, Vertex v, std::size_t t) {
    require(t >= 1, ErrorCode::kInvalidArgument, "t must be at least 1");
    auto nb = g.neighbors(v);
    std::vector<Vertex> hood(nb.begin(), nb.end());
    return for_each_subset(hood, t, [&](const std::vector<Vertex>& side_b) {
        const auto common = common_neighbors(g, side_b);
        // v itself is a common neighbour; t-1 others complete side A.
        return common.size() >= t;
    });
}

double kst_edge_bound(std::size_t n, std::size_t t) {
    const double nn = static_cast<double>(n), tt = static_cast<double>(t);
    return 0.5 * std::pow(tt - 1.0, 1.0 / tt) * std::pow(nn, 2.0 - 1.0 / tt) +
           0.5 * (tt - 1.0) * nn;
}

KttScreen ktt_count_screen(const Graph& g, std::size_t t) {
    require(t >= 1, ErrorCode::kInvalidArgument, "t must be at least 1");
    return static_cast<double>(g.num_edges()) > kst_edge_bound(g.size(), t)
               ? KttScreen::kImpossibleByCount
               : KttScreen::kPossible;
}

std::optional<std::pair<std::size_t, std::size_t>> chain_interval(
    const Arrangement& arr, const std::vector<Vertex>& chain, Vertex x, double eps) {
    const auto& spheres = arr.spheres();
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (spheres_intersect(spheres.at(x), spheres.at(chain[i]), eps)) hits.push_back(i);
    if (hits.empty()) return std::nullopt;
    require(hits.back() - hits.front() + 1 == hits.size(), ErrorCode::kHypothesisViolation,
            "neighbourhood of " + arr.labels().at(x) + " in the nested chain is not an interval");
    return std::make_pair(hits.front(), hits.back());
}

std::string check_nested_path_system(const Arrangement& arr, const NestedPathSystem& sys,
                                     std::size_t t, std::size_t r, double eps) {
    if (arr.kind() != ObjectKind::kSphere) return "arrangement must consist of spheres";
    const auto& spheres = arr.spheres();
    const std::size_t n = spheres.size();
    if (t < 1) return "t must be at least 1";
    if (sys.nested.size() != t * (r + 1))
        return "nested family has " + std::to_string(sys.nested.size()) + " spheres, expected " +
               std::to_string(t * (r + 1));
    std::set<Vertex> used;
    for (Vertex v : sys.nested) {
        if (v >= n) return "nested vertex out of range";
        if (!used.insert(v).second) return "nested family repeats a sphere";
    }
    for (std::size_t i = 0; i + 1 < sys.nested.size(); ++i)
        if (!ball_contains(spheres[sys.nested[i + 1]], spheres[sys.nested[i]], eps))
            return "nested family is not a containment chain at position " + std::to_string(i);

    if (sys.paths.size() != t * t * (r + 1))
        return "path count " + std::to_string(sys.paths.size()) + " differs from t^2(r+1) = " +
               std::to_string(t * t * (r + 1));
    const Sphere& minimal = spheres[sys.nested.front()];
    const Sphere& maximal = spheres[sys.nested.back()];
    for (std::size_t p = 0; p < sys.paths.size(); ++p) {
        const auto& path = sys.paths[p];
        const std::string tag = "path " + std::to_string(p) + ": ";
        if (path.empty()) return tag + "empty";
        if (path.size() > r + 1) return tag + "length exceeds r";
        for (Vertex v : path) {
            if (v >= n) return tag + "vertex out of range";
            if (!used.insert(v).second)
                return tag + "not vertex-disjoint from the chain or other paths";
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!spheres_intersect(spheres[path[i]], spheres[path[i + 1]], eps))
                return tag + "consecutive spheres do not intersect";
        const Sphere& first = spheres[path.front()];
        const Sphere& last = spheres[path.back()];
        const bool forward =
            spheres_intersect(first, minimal, eps) && spheres_intersect(last, maximal, eps);
        const bool backward =
            spheres_intersect(first, maximal, eps) && spheres_intersect(last, minimal, eps);
        if (!forward && !backward)
            return tag + "ends do not meet the minimal and maximal spheres of the chain";
    }
    return {};
}

BicliqueWitness extract_ktt_from_nested_paths(const Arrangement& arr,
                                              const NestedPathSystem& sys, std::size_t t,
                                              std::size_t r, double eps) {
    const std::string problem = check_nested_path_system(arr, sys, t, r, eps);
    require(problem.empty(), ErrorCode::kHypothesisViolation, problem);

    // For each path, the first vertex whose chain interval has >= t members,
    // bucketed by the interval's first position.
    std::map<std::size_t, std::vector<Vertex>> buckets;
    for (std::size_t p = 0; p < sys.paths.size(); ++p) {
        std::optional<Vertex> pick;
        for (Vertex x : sys.paths[p]) {
            const auto iv = chain_interval(arr, sys.nested, x, eps);
            if (iv && iv->second - iv->first + 1 >= t) {
                pick = x;
                buckets[iv->first].push_back(x);
                break;
            }
        }
        require(pick.has_value(), ErrorCode::kHypothesisViolation,
                "path " + std::to_string(p) + " has no vertex meeting t consecutive chain spheres");
    }
    for (const auto& [start, members] : buckets) {
        if (members.size() < t) continue;
        BicliqueWitness w;
        w.side_a.assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(t));
        for (std::size_t i = 0; i < t; ++i) w.side_b.push_back(sys.nested[start + i]);
        const auto& spheres = arr.spheres();
        for (Vertex a : w.side_a)
            for (Vertex b : w.side_b)
                require(spheres_intersect(spheres[a], spheres[b], eps),
                        ErrorCode::kHypothesisViolation, "extracted pair does not intersect");
        return w;
    }
    fail(ErrorCode::kHypothesisViolation, "no interval start is shared by t paths");
}

}  // namespace spheresep
