#include <doctest.h>

#include "spheresep/error.hpp"
#include "spheresep/generators.hpp"
#include "spheresep/io.hpp"

using namespace spheresep;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("arrangement JSON round trip") {
    const auto arr = gen_random_connected(3, 20, 4);
    const auto back = arrangement_from_json(arrangement_to_json(arr));
    CHECK(back.size() == arr.size());
    CHECK(back.dim() == 3);
    CHECK(back.labels() == arr.labels());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        CHECK(back.spheres()[i].center == arr.spheres()[i].center);
        CHECK(back.spheres()[i].radius == arr.spheres()[i].radius);
    }

    const auto chords = gen_random_chords(2, 10, 1);
    const auto cback = arrangement_from_json(arrangement_to_json(chords));
    CHECK(cback.kind() == ObjectKind::kChord);
    CHECK(build_intersection_graph(cback) == build_intersection_graph(chords));
}

TEST_CASE("arrangement JSON errors") {
    try {
        arrangement_from_json("{\n  \"dim\": 2,\n  \"objects\": [\n    {\"kind\": \"sphere\",, }\n]}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kParse);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    CHECK(code_of([] { arrangement_from_json(R"({"objects": []})"); }) == ErrorCode::kParse);
    CHECK(code_of([] {
              arrangement_from_json(
                  R"({"dim": 2, "objects": [{"kind": "cube", "center": [0, 0], "radius": 1}]})");
          }) == ErrorCode::kParse);
    CHECK(code_of([] {
              arrangement_from_json(
                  R"({"dim": 2, "objects": [{"kind": "sphere", "center": [0, 0, 0], "radius": 1}]})");
          }) == ErrorCode::kDimensionMismatch);
    CHECK(code_of([] {
              arrangement_from_json(R"({"dim": 1, "objects": [
                  {"kind": "sphere", "center": [0], "radius": 1},
                  {"kind": "chord", "normal": [0, 1], "offset": 0}]})");
          }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("edge lists") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    const std::string text = graph_to_edge_list(g);
    CHECK(text == "4 2\n0 1\n2 3\n");
    CHECK(graph_from_edge_list(text).edges() == g.edges());

    WeightedGraph wg{g};
    wg.set_edge(1, 2, 2);
    const auto wback = weighted_graph_from_edge_list(graph_to_edge_list(wg));
    CHECK(wback.weight(1, 2) == 2);
    CHECK(wback.weight(0, 1) == 1);

    CHECK(code_of([] { graph_from_edge_list(""); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 1\n0 5\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 1\n1 1\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 2\n0 1\n1 0\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 2\n0 1\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 1\n0 1\n1 2\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 1\n0 x\n"); }) == ErrorCode::kParse);
    CHECK(code_of([] { graph_from_edge_list("3 1\n0 1 2\n"); }) == ErrorCode::kParse);
}

TEST_CASE("cover and model JSON") {
    Cover c{2.0, 5, {{{0, 1}, {4}}, {{2, 3}}}};
    const Cover back = cover_from_json(cover_to_json(c));
    CHECK(back.r == 2.0);
    CHECK(back.D == 5);
    CHECK(back.families == c.families);

    MinorModel m{2, 1, {{0, 1}, {2}}, {0, 2}};
    const MinorModel mb = model_from_json(model_to_json(m));
    CHECK(mb.bags == m.bags);
    CHECK(mb.roots == m.roots);
    CHECK(mb.depth == 1);

    CHECK(parse_vertex_list("1, 2 3,\n4") == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(parse_vertex_list("").empty());
    CHECK(code_of([] { parse_vertex_list("1,-2"); }) == ErrorCode::kParse);
}
