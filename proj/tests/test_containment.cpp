#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spheresep/containment.hpp"
#include "spheresep/error.hpp"
#include "spheresep/generators.hpp"
#include "spheresep/random.hpp"

using namespace spheresep;

namespace {

Arrangement disks(std::vector<Sphere> s) { return Arrangement::of_spheres(2, std::move(s)); }

const Arrangement kConcentric = disks({{{0, 0}, 1}, {{0, 0}, 2}, {{0, 0}, 3}});

}  // namespace

TEST_CASE("containment poset") {
    const auto p = build_poset(kConcentric);
    CHECK(p.maximal() == std::vector<Vertex>{2});
    CHECK(longest_nested_chain(p) == std::vector<Vertex>{2, 1, 0});

    const auto apart = build_poset(disks({{{0, 0}, 1}, {{3, 0}, 1}, {{6, 0}, 1}}));
    CHECK(apart.pairs().empty());
    CHECK(apart.maximal().size() == 3);
    CHECK(longest_nested_chain(apart).size() == 1);

    // A=((0,0),10) reaches x=10 but B=((9,0),2) reaches x=11, so A does
    // not contain B; C=((9,0),1) is internally tangent to A.
    const auto abc = build_poset(disks({{{0, 0}, 10}, {{9, 0}, 2}, {{9, 0}, 1}}));
    const std::vector<std::pair<Vertex, Vertex>> expect{{0, 2}, {1, 2}};
    CHECK(abc.pairs() == expect);
    CHECK(abc.maximal() == std::vector<Vertex>{0, 1});
}

TEST_CASE("longest chain matches exhaustive search") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto arr = gen_nested_family(2, 20, 1 + rng.index(4), 100 + trial);
        const auto p = build_poset(arr);
        std::vector<std::uint32_t> comp(arr.size(), 0);
        for (const auto& [a, b] : p.pairs()) {
            comp[a] |= 1u << b;
            comp[b] |= 1u << a;
        }
        const auto chain = longest_nested_chain(p);
        CHECK(chain.size() == oracle::longest_chain_by_subsets(comp));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(p.contains(chain[i], chain[i + 1]));
    }
}

TEST_CASE("antichain decomposition") {
    const auto chain = antichain_decomposition(build_poset(kConcentric));
    CHECK(chain == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
    const auto flat = antichain_decomposition(
        build_poset(disks({{{0, 0}, 1}, {{3, 0}, 1}, {{6, 0}, 1}, {{9, 0}, 1}})));
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].size() == 4);

    const auto mixed = gen_nested_family(2, 10, 3, 9);
    const auto p = build_poset(mixed);
    const auto levels = antichain_decomposition(p);
    CHECK(levels.size() == longest_nested_chain(p).size());
    std::size_t total = 0;
    for (const auto& level : levels) {
        total += level.size();
        for (Vertex a : level)
            for (Vertex b : level) CHECK_FALSE(p.contains(a, b));
    }
    CHECK(total == mixed.size());
}

TEST_CASE("ply of small families") {
    const auto tri = disks({{{0, 0}, 1}, {{1, 0}, 1}, {{0.5, std::sqrt(3.0) / 2}, 1}});
    const auto res = ply(tri);
    CHECK(res.ply == 3);
    CHECK(res.witness.members.size() == 3);
    for (const auto& s : tri.spheres()) CHECK(distance(res.witness.point, s.center) <= 1 + 1e-6);

    CHECK(ply(disks({{{0, 0}, 1}, {{3, 0}, 1}, {{1.5, 2.6}, 1}})).ply == 1);
    const auto nested = ply(kConcentric);
    CHECK(nested.ply == 3);
    CHECK(norm(nested.witness.point) <= 1 + 1e-6);
}

TEST_CASE("ply agrees with the candidate-point oracle") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto arr = gen_random_connected(2, 12, seed);
        CHECK(ply(arr).ply == oracle::disk_ply(arr.spheres()));
        const auto lb = ply_lower_bound(arr);
        CHECK(lb.ply <= ply(arr).ply);
    }
}

TEST_CASE("ply refuses large inputs") {
    const auto big = gen_lattice_packing(2, 5);
    CHECK_THROWS_AS(ply(big, kDefaultEps, 22), Error);
    CHECK(ply(big, kDefaultEps, 25).ply == 2);
}

TEST_CASE("common point decides feasibility") {
    std::vector<Sphere> lens{{{0, 0}, 1}, {{1.9, 0}, 1}};
    CHECK(common_point(lens).feasible);
    std::vector<Sphere> apart{{{0, 0}, 1}, {{2.1, 0}, 1}};
    CHECK_FALSE(common_point(apart).feasible);
    std::vector<Sphere> touching{{{0, 0}, 1}, {{2, 0}, 1}};
    CHECK(common_point(touching).feasible);
}

TEST_CASE("ply-chain bound") {
    CHECK(ply_chain_bound(3, 2) == 12);
}
