#include "spheresep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "spheresep/containment.hpp"
#include "spheresep/error.hpp"
#include "spheresep/random.hpp"

namespace spheresep {

namespace {

double log_uniform_radius(Rng& rng) { return 0.1 * std::pow(20.0, rng.uniform()); }

Point random_unit(Rng& rng, std::size_t dim) {
    Point p(dim);
    double len = 0;
    while (len < 1e-9) {
        for (double& x : p) x = rng.normal();
        len = norm(p);
    }
    for (double& x : p) x /= len;
    return p;
}

// Haar-ish random orthogonal matrix by Gram-Schmidt on a Gaussian matrix.
std::vector<Point> random_rotation(Rng& rng, std::size_t dim) {
    std::vector<Point> rows;
    while (rows.size() < dim) {
        Point v(dim);
        for (double& x : v) x = rng.normal();
        for (const Point& q : rows) {
            const double c = dot(v, q);
            for (std::size_t i = 0; i < dim; ++i) v[i] -= c * q[i];
        }
        const double len = norm(v);
        if (len < 1e-6) continue;
        for (double& x : v) x /= len;
        rows.push_back(std::move(v));
    }
    return rows;
}

bool clears_margin(const std::vector<Sphere>& spheres, const Sphere& s, double margin) {
    for (const Sphere& other : spheres)
        if (sphere_pair_slack(other, s) < margin) return false;
    return true;
}

double unit_ball_volume(std::size_t d) {
    const double k = static_cast<double>(d) / 2.0;
    return std::pow(M_PI, k) / std::tgamma(k + 1.0);
}

}  // namespace

Arrangement gen_lattice_packing(std::size_t d, std::size_t side) {
    require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
    require(side >= 1, ErrorCode::kInvalidArgument, "side must be at least 1");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) n *= side;
    std::vector<Sphere> spheres;
    spheres.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        Point c(d);
        std::size_t rest = idx;
        for (std::size_t i = d; i-- > 0;) {
            c[i] = static_cast<double>(rest % side);
            rest /= side;
        }
        spheres.push_back({std::move(c), 0.5});
    }
    return Arrangement::of_spheres(d, std::move(spheres));
}

Arrangement gen_random_low_ply(std::size_t d, std::size_t n, std::size_t target_ply,
                               std::uint64_t seed, const LowPlyOptions& opts) {
    require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
    require(target_ply >= 1, ErrorCode::kInvalidArgument, "target ply must be at least 1");
    require(opts.density > 0, ErrorCode::kInvalidArgument, "density must be positive");
    Rng rng(seed);
    const double dd = static_cast<double>(d);
    const double mean_power = (std::pow(2.0, dd) - std::pow(0.1, dd)) / (dd * std::log(20.0));
    const double volume =
        std::max(1.0, static_cast<double>(n)) * unit_ball_volume(d) * mean_power / opts.density;
    const double side = std::pow(volume, 1.0 / dd);

    std::vector<Sphere> spheres;
    Graph g(n);
    std::size_t attempts = 0;
    while (spheres.size() < n) {
        require(++attempts <= kRejectionBudget, ErrorCode::kBudgetExceeded,
                "rejection budget of " + std::to_string(kRejectionBudget) +
                    " draws exhausted after placing " + std::to_string(spheres.size()) +
                    " spheres");
        Sphere s;
        s.center.resize(d);
        for (double& x : s.center) x = rng.uniform(0.0, side);
        s.radius = log_uniform_radius(rng);
        if (!clears_margin(spheres, s, opts.margin)) continue;

        const Vertex v = spheres.size();
        spheres.push_back(s);
        if (local_ply(spheres, v).ply > target_ply) {
            spheres.pop_back();
            continue;
        }
        if (opts.ktt_free) {
            std::vector<Vertex> added;
            for (Vertex u = 0; u < v; ++u)
                if (spheres_intersect(spheres[u], s)) {
                    g.add_edge(u, v);
                    added.push_back(u);
                }
            if (has_ktt_through(g, v, *opts.ktt_free)) {
                for (Vertex u : added) g.remove_edge(u, v);
                spheres.pop_back();
                continue;
            }
        }
    }
    return Arrangement::of_spheres(d, std::move(spheres));
}

Arrangement gen_nested_family(std::size_t d, std::size_t n, std::size_t chains,
                              std::uint64_t seed) {
    require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
    require(chains >= 1, ErrorCode::kInvalidArgument, "need at least one chain");
    Rng rng(seed);
    const std::size_t per_chain = (n + chains - 1) / chains;
    const double spacing = 2.0 * (static_cast<double>(per_chain) + 2.0);
    std::vector<Sphere> spheres;
    for (std::size_t c = 0; c < chains && spheres.size() < n; ++c) {
        Point center(d, 0.0);
        center[0] = spacing * static_cast<double>(c);
        double radius = 0.5;
        for (std::size_t i = 0; i < per_chain && spheres.size() < n; ++i) {
            spheres.push_back({center, radius});
            // Next sphere grows by 1 and shifts its centre by at most 0.3,
            // so it contains the previous one with room to spare.
            const Point dir = random_unit(rng, d);
            const double shift = rng.uniform(0.0, 0.3);
            for (std::size_t k = 0; k < d; ++k) center[k] += shift * dir[k];
            radius += 1.0;
        }
    }
    return Arrangement::of_spheres(d, std::move(spheres));
}

Arrangement gen_random_chords(std::size_t d, std::size_t n, std::uint64_t seed, double margin,
                              double clearance) {
    require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
    require(clearance > 0 && clearance < 1, ErrorCode::kInvalidArgument,
            "clearance must lie in (0, 1)");
    Rng rng(seed);
    std::vector<HyperplaneChord> chords;
    std::size_t attempts = 0;
    while (chords.size() < n) {
        require(++attempts <= kRejectionBudget, ErrorCode::kBudgetExceeded,
                "rejection budget exhausted while drawing chords");
        HyperplaneChord c{random_unit(rng, d + 1), rng.uniform(-0.9, 0.9)};
        bool ok = true;
        for (const auto& other : chords)
            if (chord_pair_slack(other, c) < margin) {
                ok = false;
                break;
            }
        if (ok) chords.push_back(std::move(c));
    }
    // Rotations preserve every pairwise relation, so only pole clearance
    // needs to be re-established.
    for (std::size_t tries = 0;; ++tries) {
        require(tries < kRejectionBudget, ErrorCode::kBudgetExceeded,
                "no rotation clears the north pole");
        const bool clear = std::all_of(chords.begin(), chords.end(), [&](const auto& c) {
            return pole_clearance(c, d) > clearance;
        });
        if (clear) break;
        const auto rot = random_rotation(rng, d + 1);
        for (auto& c : chords) {
            Point rotated(d + 1, 0.0);
            for (std::size_t i = 0; i <= d; ++i) rotated[i] = dot(rot[i], c.normal);
            const double len = norm(rotated);
            for (double& x : rotated) x /= len;
            c.normal = std::move(rotated);
        }
    }
    return Arrangement::of_chords(d, std::move(chords));
}

Arrangement gen_random_connected(std::size_t d, std::size_t n, std::uint64_t seed,
                                 double margin) {
    require(d >= 1, ErrorCode::kInvalidArgument, "d must be at least 1");
    Rng rng(seed);
    std::vector<Sphere> spheres;
    if (n == 0) return Arrangement::of_spheres(d, {});
    spheres.push_back({Point(d, 0.0), log_uniform_radius(rng)});
    std::size_t attempts = 0;
    while (spheres.size() < n) {
        require(++attempts <= kRejectionBudget, ErrorCode::kBudgetExceeded,
                "rejection budget exhausted while growing a connected arrangement");
        const Sphere& parent = spheres[rng.index(spheres.size())];
        Sphere s;
        s.radius = log_uniform_radius(rng);
        const double lo = std::abs(parent.radius - s.radius);
        const double hi = parent.radius + s.radius;
        const double dist = rng.uniform(lo, hi);
        const Point dir = random_unit(rng, d);
        s.center = parent.center;
        for (std::size_t i = 0; i < d; ++i) s.center[i] += dist * dir[i];
        if (!spheres_intersect(parent, s) || !clears_margin(spheres, s, margin)) continue;
        spheres.push_back(std::move(s));
    }
    return Arrangement::of_spheres(d, std::move(spheres));
}

Arrangement gen_perturbed_honeycomb(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const double s3 = std::sqrt(3.0);
    // Two sites per cell (i, j): A at i*a1 + j*a2 and B = A + (0, 1). A(i,j)
    // is adjacent to B(i,j), B(i+1,j-1) and B(i,j-1).
    for (long k = static_cast<long>(std::sqrt(static_cast<double>(n))) + 2;; k *= 2) {
        const long w = 2 * k + 1;
        auto id = [&](long i, long j, int b) {
            return static_cast<Vertex>(((i + k) * w + (j + k)) * 2 + b);
        };
        const std::size_t total = static_cast<std::size_t>(w * w * 2);
        Graph lattice(total);
        std::vector<Point> pos(total);
        for (long i = -k; i <= k; ++i)
            for (long j = -k; j <= k; ++j) {
                const double x = s3 * static_cast<double>(i) + s3 / 2 * static_cast<double>(j);
                const double y = 1.5 * static_cast<double>(j);
                pos[id(i, j, 0)] = {x, y};
                pos[id(i, j, 1)] = {x, y + 1.0};
                lattice.add_edge(id(i, j, 0), id(i, j, 1));
                if (j > -k) {
                    lattice.add_edge(id(i, j, 0), id(i, j - 1, 1));
                    if (i < k) lattice.add_edge(id(i, j, 0), id(i + 1, j - 1, 1));
                }
            }
        // The seed picks the BFS root near the centre and breaks ties
        // between equidistant sites, so patches differ in shape.
        Rng& shape = rng;
        const long ri = static_cast<long>(shape.index(5)) - 2;
        const long rj = static_cast<long>(shape.index(5)) - 2;
        const auto dist = bfs_distances(lattice, id(ri, rj, 0));
        std::vector<std::uint64_t> tie(total);
        for (auto& x : tie) x = shape.bits();
        std::vector<Vertex> order;
        for (Vertex v = 0; v < total; ++v)
            if (dist[v] != kUnreachable) order.push_back(v);
        if (order.size() < n) continue;
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return dist[a] != dist[b] ? dist[a] < dist[b] : tie[a] < tie[b];
        });
        // The BFS ball must not reach the patch boundary, or it would be lopsided.
        const Distance reach = n ? dist[order[n - 1]] : 0;
        if (reach + 2 >= k) continue;

        std::vector<Sphere> spheres;
        spheres.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Point c = pos[order[i]];
            for (double& x : c) x += rng.uniform(-0.05, 0.05);
            spheres.push_back({std::move(c), rng.uniform(0.6, 0.65)});
        }
        return Arrangement::of_spheres(2, std::move(spheres));
    }
}

PathSystemInstance gen_nested_path_system(std::size_t t, std::size_t r, std::uint64_t seed) {
    require(t >= 1, ErrorCode::kInvalidArgument, "t must be at least 1");
    Rng rng(seed);
    const std::size_t k = t * (r + 1);
    const std::size_t m = r + 1;
    const std::size_t paths = t * t * (r + 1);
    const double K = static_cast<double>(k);

    for (std::size_t attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Sphere> spheres;
        NestedPathSystem sys;
        for (std::size_t i = 0; i < k; ++i) {
            spheres.push_back({Point{0.0, 0.0}, static_cast<double>(i + 1)});
            sys.nested.push_back(i);
        }
        const double step = m > 1 ? (K - 1.0) / static_cast<double>(m - 1) : 0.0;
        const double radius = m > 1 ? step * rng.uniform(0.55, 0.7)
                                    : (K - 1.0) / 2.0 + rng.uniform(0.2, 0.3);
        // First centre far enough out that the path circle does not swallow
        // the innermost circle; last centre on the outermost one.
        const double base = std::max(1.0, radius - 0.5);
        const double stride = m > 1 ? (K - base) / static_cast<double>(m - 1) : 0.0;
        const double sector = 2.0 * M_PI / static_cast<double>(paths);
        for (std::size_t p = 0; p < paths; ++p) {
            const double angle = sector * (static_cast<double>(p) + rng.uniform(-0.1, 0.1));
            std::vector<Vertex> path;
            for (std::size_t i = 0; i < m; ++i) {
                const double rho =
                    m > 1 ? base + stride * static_cast<double>(i) : (1.0 + K) / 2.0;
                path.push_back(spheres.size());
                spheres.push_back({Point{rho * std::cos(angle), rho * std::sin(angle)}, radius});
            }
            sys.paths.push_back(std::move(path));
        }
        bool margins = true;
        for (std::size_t a = 0; a < spheres.size() && margins; ++a)
            for (std::size_t b = a + 1; b < spheres.size(); ++b)
                if (sphere_pair_slack(spheres[a], spheres[b]) < kDefaultMargin) {
                    margins = false;
                    break;
                }
        if (!margins) continue;
        Arrangement arr = Arrangement::of_spheres(2, std::move(spheres));
        const std::string problem = check_nested_path_system(arr, sys, t, r);
        require(problem.empty(), ErrorCode::kHypothesisViolation,
                "generated path system is invalid: " + problem);
        return {std::move(arr), std::move(sys)};
    }
    fail(ErrorCode::kBudgetExceeded, "could not place path system away from tangencies");
}

Graph gen_triangle_free_grid(std::size_t dim, std::size_t side) {
    require(dim >= 1, ErrorCode::kInvalidArgument, "dimension must be at least 1");
    require(side >= 1, ErrorCode::kInvalidArgument, "side must be at least 1");
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) n *= side;
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t stride = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((v / stride) % side + 1 < side) g.add_edge(v, v + stride);
            stride *= side;
        }
    }
    return g;
}

// ── GenSpec ────────────────────────────────────────────────────────

GenSpec GenSpec::parse(const std::string& text) {
    GenSpec spec;
    const auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    require(!spec.kind.empty(), ErrorCode::kParse, "generator spec has no kind: '" + text + "'");
    if (colon == std::string::npos) return spec;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        require(eq != std::string::npos && eq > 0, ErrorCode::kParse,
                "expected key=value in generator spec, got '" + item + "'");
        spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return spec;
}

std::string GenSpec::to_string() const {
    std::string out = kind;
    char sep = ':';
    for (const auto& [k, v] : params) {
        out += sep + k + "=" + v;
        sep = ',';
    }
    return out;
}

std::size_t GenSpec::get_size(const std::string& key, std::size_t fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == it->second.size() && !it->second.empty() && it->second[0] != '-',
            ErrorCode::kParse, "parameter " + key + " must be a non-negative integer");
    return static_cast<std::size_t>(value);
}

double GenSpec::get_real(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == it->second.size() && used > 0 && std::isfinite(value), ErrorCode::kParse,
            "parameter " + key + " must be a number");
    return value;
}

namespace {

void allow_only(const GenSpec& spec, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : spec.params) {
        bool known = false;
        for (const char* allowed : keys) known = known || k == allowed;
        require(known, ErrorCode::kParse,
                "unknown parameter '" + k + "' for generator " + spec.kind);
    }
}

}  // namespace

GeneratedInstance generate(const GenSpec& spec, std::uint64_t seed) {
    GeneratedInstance out;
    const std::string& kind = spec.kind;
    if (kind == "lattice" || kind == "lattice_packing") {
        allow_only(spec, {"d", "side"});
        out.arrangement = gen_lattice_packing(spec.get_size("d", 2), spec.get_size("side", 4));
    } else if (kind == "random_low_ply") {
        allow_only(spec, {"d", "n", "ply", "t", "margin", "density"});
        LowPlyOptions opts;
        if (const std::size_t t = spec.get_size("t", 0)) opts.ktt_free = t;
        opts.margin = spec.get_real("margin", kDefaultMargin);
        opts.density = spec.get_real("density", opts.density);
        out.arrangement = gen_random_low_ply(spec.get_size("d", 2), spec.get_size("n", 100),
                                             spec.get_size("ply", 3), seed, opts);
    } else if (kind == "nested_family") {
        allow_only(spec, {"d", "n", "chains"});
        out.arrangement = gen_nested_family(spec.get_size("d", 2), spec.get_size("n", 5),
                                            spec.get_size("chains", 1), seed);
    } else if (kind == "random_chords") {
        allow_only(spec, {"d", "n", "margin", "clearance"});
        out.arrangement = gen_random_chords(spec.get_size("d", 2), spec.get_size("n", 50), seed,
                                            spec.get_real("margin", kDefaultMargin),
                                            spec.get_real("clearance", 0.02));
    } else if (kind == "random_connected") {
        allow_only(spec, {"d", "n", "margin"});
        out.arrangement = gen_random_connected(spec.get_size("d", 2), spec.get_size("n", 50), seed,
                                               spec.get_real("margin", kDefaultMargin));
    } else if (kind == "honeycomb") {
        allow_only(spec, {"n"});
        out.arrangement = gen_perturbed_honeycomb(spec.get_size("n", 100), seed);
    } else if (kind == "path_system") {
        allow_only(spec, {"t", "r"});
        auto inst = gen_nested_path_system(spec.get_size("t", 2), spec.get_size("r", 1), seed);
        out.arrangement = std::move(inst.arrangement);
        out.system = std::move(inst.system);
    } else if (kind == "triangle_free_grid") {
        allow_only(spec, {"dim", "side"});
        out.graph = gen_triangle_free_grid(spec.get_size("dim", 2), spec.get_size("side", 4));
    } else {
        fail(ErrorCode::kParse, "unknown generator kind '" + kind + "'");
    }
    return out;
}

}  // namespace spheresep
