#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spheresep/error.hpp"
#include "spheresep/generators.hpp"
#include "spheresep/minors.hpp"

using namespace spheresep;

namespace {

Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("minor model verifier") {
    const Graph k5 = complete(5);
    MinorModel m{5, 0, {{0}, {1}, {2}, {3}, {4}}, {0, 1, 2, 3, 4}};
    CHECK(verify_minor_model(k5, m).ok);

    MinorModel overlap{2, 0, {{0, 1}, {1}}, {0, 1}};
    const auto bad = verify_minor_model(k5, overlap);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("overlap") != std::string::npos);

    // bag {0,1,2} on a path rooted at 0 has height 2
    const Graph p = path(4);
    MinorModel tall{2, 1, {{0, 1, 2}, {3}}, {0, 3}};
    CHECK(bag_height(p, tall.bags[0], 0) == std::optional<std::size_t>(2));
    CHECK_FALSE(verify_minor_model(p, tall).ok);
    tall.depth = 2;
    CHECK(verify_minor_model(p, tall).ok);

    MinorModel apart{2, 0, {{0}, {3}}, {0, 3}};
    CHECK_FALSE(verify_minor_model(p, apart).ok);
}

TEST_CASE("prs on a clique") {
    // With h = 2 the first two singleton bags already form the model.
    const auto res = prs_separate(complete(5), 1, 2);
    REQUIRE(res.outcome == PrsOutcome::kMinor);
    REQUIRE(res.model.has_value());
    CHECK(verify_minor_model(complete(5), *res.model).ok);
    for (const auto& bag : res.model->bags) CHECK(bag.size() == 1);

    // With h = 5 the run stops as soon as the rest is balanced: after two
    // singleton bags the remaining K_3 has 3 <= floor(10/3) vertices.
    const auto sep = prs_separate(complete(5), 1, 5);
    REQUIRE(sep.outcome == PrsOutcome::kSeparator);
    CHECK(sep.separator == std::vector<Vertex>{0, 1});
    CHECK(balanced_separator_check(complete(5), sep.separator));
}

TEST_CASE("prs on a long path gives a small balanced separator") {
    const Graph p = path(1000);
    const auto res = prs_separate(p, 10, 4);
    REQUIRE(res.outcome == PrsOutcome::kSeparator);
    CHECK(balanced_separator_check(p, res.separator));
    CHECK(res.separator.size() <= 100 + 4 * 100 * std::log(1000.0));
    CHECK(res.stats.constant > 0);
}

TEST_CASE("prs on the 32x32 grid") {
    const Graph g = gen_triangle_free_grid(2, 32);
    const auto res = prs_separate(g, 4, 50);
    REQUIRE(res.outcome == PrsOutcome::kSeparator);
    CHECK(balanced_separator_check(g, res.separator));
    MESSAGE("grid separator size " << res.separator.size() << ", C = " << res.stats.constant);
}

TEST_CASE("prs output always verifies") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.index(60);
        const Graph g = oracle::random_graph(n, rng.uniform(0.02, 0.5), rng);
        const std::size_t r = 1 + rng.index(4);
        const std::uint64_t h = 2 + rng.index(6);
        const auto res = prs_separate(g, r, h);
        if (res.outcome == PrsOutcome::kSeparator) {
            CHECK(balanced_separator_check(g, res.separator));
        } else {
            REQUIRE(res.model.has_value());
            CHECK(res.model->h == h);
            CHECK(verify_minor_model(g, *res.model).ok);
            CHECK(res.model->depth <= res.stats.layer_limit);
        }
    }
}

TEST_CASE("exhaustive shallow minor search") {
    CHECK(exhaustive_shallow_clique_minor(complete(4), 0, 4).has_value());
    CHECK_FALSE(exhaustive_shallow_clique_minor(cycle(5), 0, 3).has_value());
    const auto m = exhaustive_shallow_clique_minor(cycle(5), 1, 3);
    REQUIRE(m.has_value());
    CHECK(verify_minor_model(cycle(5), *m).ok);
    CHECK_FALSE(exhaustive_shallow_clique_minor(path(8), 3, 3).has_value());
    CHECK_THROWS_AS(exhaustive_shallow_clique_minor(Graph(13), 1, 2), Error);
}

TEST_CASE("driver parameters") {
    CHECK(separator_radius(1, 2) == 1);
    CHECK(separator_radius(4096, 2) == 2);
    CHECK(separator_radius(4097, 2) == 3);
    CHECK(clique_threshold(2, 1, 2) == 72ull * 32 * 3125);
    CHECK(clique_threshold(100, 100, 30) == UINT64_MAX);
}

TEST_CASE("pipeline rejects K_{2,2} and handles a single sphere") {
    const auto c4 = gen_lattice_packing(2, 2);
    try {
        sphere_separator_pipeline(c4, 2);
        FAIL("expected a hypothesis violation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kHypothesisViolation);
        CHECK(std::string(e.what()).find("K_{2,2}") != std::string::npos);
    }
    const auto one = Arrangement::of_spheres(2, {Sphere{{0, 0}, 1}});
    const auto res = sphere_separator_pipeline(one, 2);
    CHECK(res.outcome == PipelineOutcome::kSeparator);
    CHECK(res.separator.empty());
}

TEST_CASE("pipeline on low-ply spheres") {
    LowPlyOptions opts;
    opts.ktt_free = 2;
    opts.density = 2.0;
    const auto arr = gen_random_low_ply(2, 1000, 3, 4, opts);
    const auto res = sphere_separator_pipeline(arr, 2);
    REQUIRE(res.outcome == PipelineOutcome::kSeparator);
    CHECK(balanced_separator_check(build_intersection_graph(arr), res.separator));
    MESSAGE("separator size " << res.separator.size() << " at r = " << res.r);
}
