#include <doctest.h>

#include "oracles.hpp"
#include "spheresep/bipartite.hpp"
#include "spheresep/containment.hpp"
#include "spheresep/error.hpp"
#include "spheresep/generators.hpp"

using namespace spheresep;

namespace {

std::size_t triangles(const Graph& g) {
    std::size_t count = 0;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = a + 1; b < g.size(); ++b)
            for (Vertex c = b + 1; c < g.size(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++count;
    return count;
}

}  // namespace

TEST_CASE("lattice packings") {
    const Graph c4 = build_intersection_graph(gen_lattice_packing(2, 2));
    CHECK(c4.size() == 4);
    CHECK(c4.num_edges() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    const Graph p3 = build_intersection_graph(gen_lattice_packing(1, 3));
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    const Graph big = build_intersection_graph(gen_lattice_packing(2, 32));
    CHECK(big.size() == 1024);
    CHECK(big.num_edges() == 2 * 32 * 31);
    CHECK(big == gen_triangle_free_grid(2, 32));
}

TEST_CASE("random low-ply arrangements") {
    const auto apart = gen_random_low_ply(2, 40, 1, 5);
    CHECK(build_intersection_graph(apart).num_edges() == 0);

    const auto arr = gen_random_low_ply(2, 500, 3, 8);
    CHECK(arr.size() == 500);
    CHECK(oracle::disk_ply(arr.spheres()) <= 3);
    Rng rng(1);
    for (int k = 0; k < 10; ++k) {
        std::vector<std::size_t> pick;
        for (int i = 0; i < 22; ++i) pick.push_back(rng.index(500));
        std::sort(pick.begin(), pick.end());
        pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
        CHECK(ply(arr.subset(pick)).ply <= 3);
    }

    const auto again = gen_random_low_ply(2, 500, 3, 8);
    CHECK(again.spheres().size() == arr.spheres().size());
    bool same = true;
    for (std::size_t i = 0; i < arr.size(); ++i)
        same = same && again.spheres()[i].center == arr.spheres()[i].center &&
               again.spheres()[i].radius == arr.spheres()[i].radius;
    CHECK(same);

    LowPlyOptions free;
    free.ktt_free = 2;
    const auto k22 = gen_random_low_ply(2, 200, 4, 3, free);
    CHECK_FALSE(find_ktt(build_intersection_graph(k22), 2).has_value());
}

TEST_CASE("nested path systems") {
    const auto inst = gen_nested_path_system(2, 1, 7);
    CHECK(inst.system.nested.size() == 4);
    CHECK(inst.system.paths.size() == 8);
    CHECK(check_nested_path_system(inst.arrangement, inst.system, 2, 1).empty());

    const auto tiny = gen_nested_path_system(1, 0, 7);
    CHECK(tiny.system.nested.size() == 1);
    CHECK(tiny.system.paths.size() == 1);
    CHECK(check_nested_path_system(tiny.arrangement, tiny.system, 1, 0).empty());

    for (std::size_t t = 1; t <= 3; ++t)
        for (std::size_t r = 0; r <= 2; ++r)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto s = gen_nested_path_system(t, r, seed);
                CHECK(check_nested_path_system(s.arrangement, s.system, t, r).empty());
            }
}

TEST_CASE("triangle-free grids") {
    const Graph g = gen_triangle_free_grid(2, 4);
    CHECK(g.size() == 16);
    CHECK(triangles(g) == 0);
    CHECK(find_ktt(g, 2).has_value());

    const Graph h = gen_triangle_free_grid(2, 5);
    for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t j = 1; j < 4; ++j) {
            const Vertex y = i * 5 + j;
            std::vector<bool> removed(25, false);
            removed[y] = true;
            for (Vertex u : h.neighbors(y)) removed[u] = true;
            // a diagonal neighbour of a corner cuts that corner off
            const bool corner = (i == 1 || i == 3) && (j == 1 || j == 3);
            CHECK(connected_components(h, removed).size() == (corner ? 2u : 1u));
        }
}

TEST_CASE("other generators") {
    const auto chords = gen_random_chords(3, 50, 4);
    CHECK(chords.kind() == ObjectKind::kChord);
    for (const auto& c : chords.chords()) CHECK(pole_clearance(c, 3) >= 0.02);

    const auto conn = gen_random_connected(3, 80, 2);
    CHECK(is_connected(build_intersection_graph(conn)));

    const auto hex = gen_perturbed_honeycomb(300, 5);
    const Graph hg = build_intersection_graph(hex);
    CHECK(is_connected(hg));
    CHECK(triangles(hg) == 0);
    CHECK_FALSE(find_ktt(hg, 2).has_value());
    CHECK(oracle::disk_ply(hex.spheres()) == 2);

    const auto fam = gen_nested_family(2, 12, 3, 1);
    const auto chain = longest_nested_chain(build_poset(fam));
    CHECK(chain.size() == 4);
}

TEST_CASE("generator specs") {
    const auto spec = GenSpec::parse("lattice:d=2,side=3");
    CHECK(spec.kind == "lattice");
    CHECK(spec.get_size("side", 0) == 3);
    CHECK(GenSpec::parse(spec.to_string()).params == spec.params);
    CHECK(generate(spec, 1).arrangement->size() == 9);
    CHECK(generate(GenSpec::parse("triangle_free_grid:dim=2,side=3"), 1).graph->size() == 9);
    CHECK(generate(GenSpec::parse("path_system:t=2,r=1"), 1).system.has_value());

    auto code = [](const std::string& text) {
        try {
            generate(GenSpec::parse(text), 1);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::kInvalidArgument;
    };
    CHECK(code("nonsense:n=3") == ErrorCode::kParse);
    CHECK(code("lattice:d=2,sides=3") == ErrorCode::kParse);
    CHECK(code("lattice:d=two") == ErrorCode::kParse);
    CHECK(code("lattice:d") == ErrorCode::kParse);
}
