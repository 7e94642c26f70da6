#pragma once

// Shallow clique minors and balanced separators: the Plotkin-Rao-Smith
// dichotomy, a model verifier, an exhaustive model search for tiny graphs,
// and the separator driver for sphere arrangements.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spheresep/bipartite.hpp"
#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

/// Bags of an r-shallow K_h minor model. Bag i contains roots[i] and induces
/// a connected subgraph in which every vertex is within `depth` of the root.
struct MinorModel {
    std::size_t h = 0;
    std::size_t depth = 0;
    std::vector<std::vector<Vertex>> bags;
    std::vector<Vertex> roots;
};

struct ModelCheck {
    bool ok = false;
    std::string violation;  // empty when ok
};

/// Checks disjointness, rooted height <= m.depth inside each bag, and an
/// edge between every pair of bags.
ModelCheck verify_minor_model(const Graph& g, const MinorModel& m);

/// Height of the BFS tree of G[bag] rooted at root, or nullopt if G[bag]
/// is disconnected or root is not in bag.
std::optional<std::size_t> bag_height(const Graph& g, const std::vector<Vertex>& bag, Vertex root);

struct PrsStats {
    std::size_t iterations = 0;
    std::size_t bags_formed = 0;
    std::size_t bags_discarded = 0;
    std::size_t cuts = 0;
    std::size_t layer_limit = 0;    // BFS radius cap per growth step
    std::size_t cut_vertices = 0;   // vertices removed as thin layers
    std::size_t bag_vertices = 0;   // vertices removed inside bags
    double constant = 0.0;          // |S| / (r h^2 log n + n / r)
};

enum class PrsOutcome { kSeparator, kMinor };

struct SeparatorResult {
    PrsOutcome outcome = PrsOutcome::kSeparator;
    std::vector<Vertex> separator;  // sorted; meaningful for kSeparator
    std::optional<MinorModel> model;
    PrsStats stats;
};

/// Either an r-shallow-ish K_h model (depth recorded, at most the layer
/// limit, which grows like r log n) or a balanced separator. Always returns
/// an output that passes the matching verifier.
SeparatorResult prs_separate(const Graph& g, std::size_t r, std::uint64_t h);

/// Exhaustive search for an r-shallow K_h model on graphs with at most
/// kExhaustiveMinorLimit vertices.
inline constexpr std::size_t kExhaustiveMinorLimit = 12;
std::optional<MinorModel> exhaustive_shallow_clique_minor(const Graph& g, std::size_t r,
                                                          std::size_t h);

// ── separator driver for sphere arrangements ───────────────────────

/// Smallest integer r >= 1 with r^(2d+8) >= n.
std::size_t separator_radius(std::size_t n, std::size_t d);

/// 72 t^5 (3r+2)^(d+3), saturating at UINT64_MAX.
std::uint64_t clique_threshold(std::size_t t, std::size_t r, std::size_t d);

struct PipelineOptions {
    std::optional<std::size_t> r;
    std::optional<std::uint64_t> h;
    double eps = kDefaultEps;
    std::size_t max_retries = 6;
};

enum class PipelineOutcome {
    kSeparator,
    kTheoremViolation,  // verified K_h model at depth <= r
    kInconclusive,      // only deeper models, even after retries
};

struct PipelineResult {
    PipelineOutcome outcome = PipelineOutcome::kSeparator;
    std::size_t n = 0, d = 0, t = 0, r = 0;
    std::uint64_t h = 0;
    std::vector<Vertex> separator;
    std::optional<MinorModel> model;
    std::size_t deep_models = 0;  // models deeper than r that forced a retry
    PrsStats stats;
};

/// Throws kHypothesisViolation if the intersection graph contains K_{t,t}
/// (the copy is named in the message), and kTooLarge if freeness cannot be
/// certified.
PipelineResult sphere_separator_pipeline(const Arrangement& arr, std::size_t t,
                                         const PipelineOptions& opts = {});

/// Same, starting from an already built intersection graph of an
/// arrangement of dimension d.
PipelineResult separator_pipeline_on_graph(const Graph& g, std::size_t d, std::size_t t,
                                           const PipelineOptions& opts = {});

std::string outcome_name(PipelineOutcome outcome);

}  // namespace spheresep
