#include "spheresep/minors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "spheresep/error.hpp"

namespace spheresep {

std::optional<std::size_t> bag_height(const Graph& g, const std::vector<Vertex>& bag,
                                      Vertex root) {
    std::unordered_map<Vertex, std::size_t> depth;
    for (Vertex v : bag) depth.emplace(v, std::numeric_limits<std::size_t>::max());
    auto it = depth.find(root);
    if (it == depth.end()) return std::nullopt;
    it->second = 0;
    std::vector<Vertex> queue{root};
    std::size_t height = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        const std::size_t dx = depth[x];
        height = std::max(height, dx);
        for (Vertex w : g.neighbors(x)) {
            auto jt = depth.find(w);
            if (jt == depth.end() || jt->second != std::numeric_limits<std::size_t>::max()) continue;
            jt->second = dx + 1;
            queue.push_back(w);
        }
    }
    if (queue.size() != depth.size()) return std::nullopt;
    return height;
}

ModelCheck verify_minor_model(const Graph& g, const MinorModel& m) {
    auto bad = [](std::string why) { return ModelCheck{false, std::move(why)}; };
    if (m.bags.size() != m.h) return bad("model has " + std::to_string(m.bags.size()) +
                                         " bags but h = " + std::to_string(m.h));
    if (m.roots.size() != m.h) return bad("root count differs from bag count");
    std::vector<std::size_t> owner(g.size(), m.h);
    for (std::size_t i = 0; i < m.h; ++i) {
        if (m.bags[i].empty()) return bad("bag " + std::to_string(i) + " is empty");
        for (Vertex v : m.bags[i]) {
            if (v >= g.size()) return bad("bag " + std::to_string(i) + " has an unknown vertex");
            if (owner[v] != m.h)
                return bad("bags " + std::to_string(owner[v]) + " and " + std::to_string(i) +
                           " overlap at vertex " + std::to_string(v));
            owner[v] = i;
        }
    }
    for (std::size_t i = 0; i < m.h; ++i) {
        const auto height = bag_height(g, m.bags[i], m.roots[i]);
        if (!height)
            return bad("bag " + std::to_string(i) + " is disconnected or misses its root");
        if (*height > m.depth)
            return bad("bag " + std::to_string(i) + " has height " + std::to_string(*height) +
                       " > " + std::to_string(m.depth));
    }
    std::vector<std::vector<bool>> touch(m.h, std::vector<bool>(m.h, false));
    for (std::size_t i = 0; i < m.h; ++i)
        for (Vertex v : m.bags[i])
            for (Vertex w : g.neighbors(v))
                if (owner[w] != m.h) touch[i][owner[w]] = true;
    for (std::size_t i = 0; i < m.h; ++i)
        for (std::size_t j = i + 1; j < m.h; ++j)
            if (!touch[i][j])
                return bad("no edge between bags " + std::to_string(i) + " and " +
                           std::to_string(j));
    return {true, {}};
}

namespace {

struct Bag {
    std::vector<Vertex> vertices;
    Vertex root = 0;
    std::size_t height = 0;
};

class PrsRun {
public:
    PrsRun(const Graph& g, std::size_t r, std::uint64_t h)
        : g_(g), r_(r), h_(h), n_(g.size()), removed_(n_, false), in_c_(n_, 0),
          seen_(n_, 0), depth_(n_, 0), parent_(n_, 0), bag_mark_(n_, 0) {}

    SeparatorResult run() {
        SeparatorResult out;
        const std::size_t limit = balance_limit(n_);
        const double logn = std::log(std::max<double>(2.0, static_cast<double>(n_)));
        stats_.layer_limit =
            static_cast<std::size_t>(std::ceil(static_cast<double>(r_ + 1) * logn)) + 1;

        auto comps = connected_components(g_);
        current_ = {};
        for (auto& c : comps)
            if (c.size() > current_.size()) current_ = std::move(c);

        while (current_.size() > limit) {
            ++stats_.iterations;
            ++epoch_;
            for (Vertex v : current_) in_c_[v] = epoch_;
            discard_detached_bags();
            if (auto model = grow_from(current_.front())) {
                out.outcome = PrsOutcome::kMinor;
                out.model = std::move(model);
                break;
            }
        }
        if (out.outcome == PrsOutcome::kSeparator) {
            for (Vertex v = 0; v < n_; ++v)
                if (removed_[v]) out.separator.push_back(v);
            const double denom = static_cast<double>(r_) * static_cast<double>(h_) *
                                     static_cast<double>(h_) * logn +
                                 static_cast<double>(n_) / static_cast<double>(r_);
            stats_.constant = static_cast<double>(out.separator.size()) / denom;
        }
        out.stats = stats_;
        return out;
    }

private:
    bool in_current(Vertex v) const { return in_c_[v] == epoch_ && !removed_[v]; }

    void discard_detached_bags() {
        std::vector<Bag> kept;
        for (auto& bag : bags_) {
            bool adjacent = false;
            for (Vertex v : bag.vertices) {
                for (Vertex w : g_.neighbors(v))
                    if (in_current(w)) {
                        adjacent = true;
                        break;
                    }
                if (adjacent) break;
            }
            if (adjacent)
                kept.push_back(std::move(bag));
            else
                ++stats_.bags_discarded;
        }
        bags_.swap(kept);
    }

    // BFS from v inside the current component. Forms a new bag when the
    // ball meets every bag, otherwise removes a thin layer.
    std::optional<MinorModel> grow_from(Vertex v) {
        const std::size_t k = bags_.size();
        std::vector<std::size_t> owner_of(n_, k);
        for (std::size_t i = 0; i < k; ++i)
            for (Vertex x : bags_[i].vertices) owner_of[x] = i;

        std::vector<std::optional<Vertex>> contact(k);
        std::size_t touched = 0;
        auto visit = [&](Vertex x) {
            for (Vertex w : g_.neighbors(x)) {
                const std::size_t b = owner_of[w];
                if (b < k && !contact[b]) {
                    contact[b] = x;
                    ++touched;
                }
            }
        };

        ++bfs_epoch_;
        std::vector<std::vector<Vertex>> layers{{v}};
        mark_seen(v, 0, v);
        visit(v);
        for (std::size_t j = 0;; ++j) {
            if (touched == k) return form_bag(v, contact);
            if (j == stats_.layer_limit) break;
            std::vector<Vertex> next;
            for (Vertex x : layers[j])
                for (Vertex w : g_.neighbors(x))
                    if (in_current(w) && !seen(w)) {
                        mark_seen(w, j + 1, x);
                        next.push_back(w);
                    }
            if (next.empty()) break;
            for (Vertex x : next) visit(x);
            layers.push_back(std::move(next));
        }
        cut_thin_layer(layers);
        return std::nullopt;
    }

    std::optional<MinorModel> form_bag(Vertex v,
                                       const std::vector<std::optional<Vertex>>& contact) {
        Bag bag;
        bag.root = v;
        ++bag_epoch_;
        auto add = [&](Vertex x) {
            if (bag_mark_[x] == bag_epoch_) return false;
            bag_mark_[x] = bag_epoch_;
            bag.vertices.push_back(x);
            return true;
        };
        add(v);
        for (const auto& c : contact) {
            Vertex x = *c;
            bag.height = std::max(bag.height, depth_[x]);
            while (add(x)) x = parent_[x];
        }
        std::sort(bag.vertices.begin(), bag.vertices.end());
        for (Vertex x : bag.vertices) removed_[x] = true;
        stats_.bag_vertices += bag.vertices.size();
        ++stats_.bags_formed;
        bags_.push_back(std::move(bag));

        if (bags_.size() >= h_) {
            MinorModel m;
            m.h = bags_.size();
            for (const auto& b : bags_) {
                m.bags.push_back(b.vertices);
                m.roots.push_back(b.root);
                m.depth = std::max(m.depth, b.height);
            }
            return m;
        }
        refresh_current();
        return std::nullopt;
    }

    void cut_thin_layer(const std::vector<std::vector<Vertex>>& layers) {
        // Candidate j removes layer j+1 and splits off the ball of radius j.
        const std::size_t total = current_.size();
        std::size_t best = layers.size();
        std::size_t best_score = 0, best_layer = 0;
        double best_ratio = std::numeric_limits<double>::infinity();
        bool best_thin = false;
        std::size_t ball = 0;
        for (std::size_t j = 0; j + 1 < layers.size(); ++j) {
            ball += layers[j].size();
            const std::size_t layer = layers[j + 1].size();
            const std::size_t rest = total - ball - layer;
            const bool thin = layer * r_ <= ball;
            const std::size_t score = std::max(ball, rest);
            const double ratio = static_cast<double>(layer) / static_cast<double>(ball);
            bool better;
            if (thin != best_thin)
                better = thin;
            else if (thin)
                better = best == layers.size() || score < best_score ||
                         (score == best_score && layer < best_layer);
            else
                better = best == layers.size() || ratio < best_ratio;
            if (better) {
                best = j;
                best_score = score;
                best_layer = layer;
                best_ratio = ratio;
                best_thin = thin;
            }
        }
        require(best < layers.size(), ErrorCode::kDegenerate,
                "no layer to cut in a component that is not yet balanced");
        for (Vertex x : layers[best + 1]) removed_[x] = true;
        stats_.cut_vertices += layers[best + 1].size();
        ++stats_.cuts;
        refresh_current();
    }

    void refresh_current() {
        ++epoch_;
        for (Vertex v : current_) in_c_[v] = epoch_;
        std::vector<Vertex> best, piece;
        ++bfs_epoch_;
        for (Vertex s : current_) {
            if (!in_current(s) || seen(s)) continue;
            piece.assign(1, s);
            mark_seen(s, 0, s);
            for (std::size_t head = 0; head < piece.size(); ++head)
                for (Vertex w : g_.neighbors(piece[head]))
                    if (in_current(w) && !seen(w)) {
                        mark_seen(w, 0, w);
                        piece.push_back(w);
                    }
            if (piece.size() > best.size()) best.swap(piece);
        }
        std::sort(best.begin(), best.end());
        current_ = std::move(best);
    }

    bool seen(Vertex v) const { return seen_[v] == bfs_epoch_; }
    void mark_seen(Vertex v, std::size_t d, Vertex parent) {
        seen_[v] = bfs_epoch_;
        depth_[v] = d;
        parent_[v] = parent;
    }

    const Graph& g_;
    std::size_t r_;
    std::uint64_t h_;
    std::size_t n_;
    std::vector<bool> removed_;
    std::vector<std::size_t> in_c_;
    std::size_t epoch_ = 0;
    std::vector<std::size_t> seen_;
    std::size_t bfs_epoch_ = 0;
    std::vector<std::size_t> depth_;
    std::vector<Vertex> parent_;
    std::vector<std::size_t> bag_mark_;
    std::size_t bag_epoch_ = 0;
    std::vector<Vertex> current_;
    std::vector<Bag> bags_;
    PrsStats stats_;
};

}  // namespace

SeparatorResult prs_separate(const Graph& g, std::size_t r, std::uint64_t h) {
    require(r >= 1, ErrorCode::kInvalidArgument, "r must be at least 1");
    require(h >= 1, ErrorCode::kInvalidArgument, "h must be at least 1");
    return PrsRun(g, r, h).run();
}

std::optional<MinorModel> exhaustive_shallow_clique_minor(const Graph& g, std::size_t r,
                                                          std::size_t h) {
    const std::size_t n = g.size();
    require(n <= kExhaustiveMinorLimit, ErrorCode::kTooLarge,
            "exhaustive minor search is limited to " + std::to_string(kExhaustiveMinorLimit) +
                " vertices");
    if (h == 0) return MinorModel{};
    std::vector<unsigned> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;

    struct Candidate {
        unsigned mask;
        unsigned reach;  // mask plus its neighbourhood
        Vertex root;
    };
    std::vector<Candidate> cands;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        for (Vertex root = 0; root < n; ++root) {
            if (!(mask & (1u << root))) continue;
            unsigned visited = 1u << root, frontier = visited;
            for (std::size_t level = 0; level < r && frontier; ++level) {
                unsigned next = 0;
                for (Vertex x = 0; x < n; ++x)
                    if (frontier & (1u << x)) next |= nbr[x];
                next &= mask & ~visited;
                visited |= next;
                frontier = next;
            }
            if (visited == mask) {
                unsigned reach = mask;
                for (Vertex x = 0; x < n; ++x)
                    if (mask & (1u << x)) reach |= nbr[x];
                cands.push_back({mask, reach, root});
                break;
            }
        }
    }

    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, unsigned)> extend = [&](std::size_t from, unsigned used) {
        if (chosen.size() == h) return true;
        for (std::size_t i = from; i < cands.size(); ++i) {
            const Candidate& c = cands[i];
            if (c.mask & used) continue;
            bool ok = true;
            for (std::size_t j : chosen)
                if (!(cands[j].reach & c.mask)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (extend(i + 1, used | c.mask)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(0, 0)) return std::nullopt;

    MinorModel m;
    m.h = h;
    m.depth = r;
    for (std::size_t i : chosen) {
        std::vector<Vertex> bag;
        for (Vertex x = 0; x < n; ++x)
            if (cands[i].mask & (1u << x)) bag.push_back(x);
        m.bags.push_back(std::move(bag));
        m.roots.push_back(cands[i].root);
    }
    return m;
}

std::size_t separator_radius(std::size_t n, std::size_t d) {
    const std::size_t e = 2 * d + 8;
    std::size_t r = 1;
    auto reaches = [&](std::size_t base) {
        long double p = 1;
        for (std::size_t i = 0; i < e; ++i) p *= static_cast<long double>(base);
        return p >= static_cast<long double>(n);
    };
    while (!reaches(r)) ++r;
    return r;
}

std::uint64_t clique_threshold(std::size_t t, std::size_t r, std::size_t d) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 72;
    auto mul = [&](std::uint64_t f) {
        if (f != 0 && value > kMax / f)
            value = kMax;
        else
            value *= f;
    };
    for (int i = 0; i < 5; ++i) mul(t);
    for (std::size_t i = 0; i < d + 3; ++i) mul(3 * r + 2);
    return value;
}

std::string outcome_name(PipelineOutcome outcome) {
    switch (outcome) {
        case PipelineOutcome::kSeparator: return "separator";
        case PipelineOutcome::kTheoremViolation: return "theorem_violation";
        case PipelineOutcome::kInconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

std::string describe(const BicliqueWitness& w, const Graph& g) {
    std::ostringstream os;
    auto side = [&](const std::vector<Vertex>& s) {
        os << '{';
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << g.labels().at(s[i]);
        os << '}';
    };
    side(w.side_a);
    os << " x ";
    side(w.side_b);
    return os.str();
}

void require_ktt_free(const Graph& g, std::size_t t) {
    std::size_t probe = t;
    if (t >= 4 && g.size() > 40) probe = 3;  // K_{3,3}-free implies K_{t,t}-free
    if (auto w = find_ktt(g, probe)) {
        if (probe == t)
            fail(ErrorCode::kHypothesisViolation,
                 "graph contains K_{" + std::to_string(t) + "," + std::to_string(t) +
                     "}: " + describe(*w, g));
        fail(ErrorCode::kTooLarge, "cannot certify K_{" + std::to_string(t) + "," +
                                       std::to_string(t) + "}-freeness: graph contains K_{3,3}");
    }
}

}  // namespace

PipelineResult separator_pipeline_on_graph(const Graph& g, std::size_t d, std::size_t t,
                                           const PipelineOptions& opts) {
    require(t >= 2, ErrorCode::kInvalidArgument, "t must be at least 2");
    require(d >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
    require_ktt_free(g, t);

    PipelineResult res;
    res.n = g.size();
    res.d = d;
    res.t = t;
    res.r = opts.r.value_or(separator_radius(res.n, d));
    require(res.r >= 1, ErrorCode::kInvalidArgument, "r must be at least 1");
    for (std::size_t attempt = 0;; ++attempt) {
        res.h = opts.h.value_or(clique_threshold(t, res.r, d));
        SeparatorResult prs = prs_separate(g, res.r, res.h);
        res.stats = prs.stats;
        if (prs.outcome == PrsOutcome::kSeparator) {
            res.outcome = PipelineOutcome::kSeparator;
            res.separator = std::move(prs.separator);
            res.model.reset();
            return res;
        }
        res.model = std::move(prs.model);
        if (res.model->depth <= res.r) {
            res.outcome = PipelineOutcome::kTheoremViolation;
            return res;
        }
        ++res.deep_models;
        if (attempt == opts.max_retries) {
            res.outcome = PipelineOutcome::kInconclusive;
            return res;
        }
        res.r *= 2;
    }
}

PipelineResult sphere_separator_pipeline(const Arrangement& arr, std::size_t t,
                                         const PipelineOptions& opts) {
    if (arr.kind() == ObjectKind::kChord) {
        const Arrangement projected = project_arrangement(arr, opts.eps);
        return sphere_separator_pipeline(projected, t, opts);
    }
    const Graph g = build_intersection_graph(arr, opts.eps);
    return separator_pipeline_on_graph(g, arr.dim(), t, opts);
}

}  // namespace spheresep
