#pragma once

// Seeded instance generators. Every generator is a pure function of its
// parameters and seed.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "spheresep/bipartite.hpp"
#include "spheresep/geometry.hpp"
#include "spheresep/graph.hpp"

namespace spheresep {

inline constexpr double kDefaultMargin = 1e-6;
inline constexpr std::size_t kRejectionBudget = 100000;

/// Unit-diameter spheres centred at Z^d cap [0, side)^d; tangencies form
/// the grid graph.
Arrangement gen_lattice_packing(std::size_t d, std::size_t side);

struct LowPlyOptions {
    std::optional<std::size_t> ktt_free;  // reject spheres creating a K_{t,t}
    double margin = kDefaultMargin;
    double density = 0.5;                 // expected ball volume per unit of box volume
};

/// Radii log-uniform in [0.1, 2], centres uniform in a box sized from the
/// density; a sphere is redrawn when it would raise the local ply above the
/// target, come within the margin of a predicate boundary, or create a
/// forbidden K_{t,t}. Throws kBudgetExceeded after kRejectionBudget draws.
Arrangement gen_random_low_ply(std::size_t d, std::size_t n, std::size_t target_ply,
                               std::uint64_t seed, const LowPlyOptions& opts = {});

/// `chains` disjoint groups of nested spheres, n in total, each group a
/// containment chain with randomly offset centres.
Arrangement gen_nested_family(std::size_t d, std::size_t n, std::size_t chains,
                              std::uint64_t seed);

/// Random hyperplane sections of S^d with offsets in (-0.9, 0.9), pairwise
/// margin from the predicate boundary, rotated at random until every
/// section clears the north pole by `clearance`.
Arrangement gen_random_chords(std::size_t d, std::size_t n, std::uint64_t seed,
                              double margin = kDefaultMargin, double clearance = 0.02);

/// Connected arrangement: each new sphere meets a uniformly chosen earlier
/// one. Radii log-uniform in [0.1, 2].
Arrangement gen_random_connected(std::size_t d, std::size_t n, std::uint64_t seed,
                                 double margin = kDefaultMargin);

/// Circles at the vertices of a jittered hexagonal tiling (the first n in
/// BFS order from the centre). The graph is the honeycomb: connected,
/// bipartite, girth 6, hence K_{2,2}-free, and the ply is 2.
Arrangement gen_perturbed_honeycomb(std::size_t n, std::uint64_t seed);

struct PathSystemInstance {
    Arrangement arrangement;
    NestedPathSystem system;
};

/// t(r+1) concentric circles of radii 1, 2, ... and t^2(r+1) radial chains
/// of r+1 circles, each chain meeting the innermost and the outermost
/// circle. The system hypotheses are checked before returning.
PathSystemInstance gen_nested_path_system(std::size_t t, std::size_t r, std::uint64_t seed);

/// The grid graph on [0, side)^dim (abstract graph, no geometry).
Graph gen_triangle_free_grid(std::size_t dim, std::size_t side);

/// Parsed form of "kind:key=value,key=value".
struct GenSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    static GenSpec parse(const std::string& text);
    std::string to_string() const;

    std::size_t get_size(const std::string& key, std::size_t fallback) const;
    double get_real(const std::string& key, double fallback) const;
};

struct GeneratedInstance {
    std::optional<Arrangement> arrangement;
    std::optional<Graph> graph;               // set for abstract-graph kinds
    std::optional<NestedPathSystem> system;   // set for path_system
};

/// Kinds: lattice, random_low_ply, nested_family, random_chords,
/// random_connected, honeycomb, path_system, triangle_free_grid.
GeneratedInstance generate(const GenSpec& spec, std::uint64_t seed);

}  // namespace spheresep
