#include <catch2/catch_amalgamated.hpp>

#include "ringtopo/crosscap.hpp"
#include "ringtopo/isomorphism.hpp"
#include "ringtopo/obstructions.hpp"
#include "ringtopo/ring_graphs.hpp"

using namespace ringtopo;

namespace {
FiniteRing compile(const std::string& spec) { return compile_ring(parse_ring_spec(spec)); }
}  // namespace

TEST_CASE("catalog entries") {
    REQUIRE(obstruction("K5").graph.edge_count() == 10);
    REQUIRE(obstruction("K33").graph.edge_count() == 9);

    const auto& a2 = obstruction("A2").graph;
    REQUIRE(a2.vertex_count() == 7);
    REQUIRE(a2.edge_count() == 18);
    auto z7 = compile("Z7");
    REQUIRE(isomorphic(a2, build_gamma(z7, {1})).has_value());

    const auto& e18 = obstruction("E18").graph;
    REQUIRE(e18.vertex_count() == 8);
    REQUIRE(e18.edge_count() == 15);
    // K44 minus a perfect matching edge
    Graph k44e = complete_bipartite(4, 4);
    Graph trimmed(8);
    for (auto [u, v] : k44e.edges())
        if (!(u == 0 && v == 4)) trimmed.add_edge(u, v);
    REQUIRE(isomorphic(e18, trimmed).has_value());

    const auto& b3 = obstruction("B3").graph;
    REQUIRE(b3.vertex_count() == 8);
    REQUIRE(b3.edge_count() == 18);
    auto deg = b3.degree_sequence();
    REQUIRE(deg == std::vector<int>{6, 6, 4, 4, 4, 4, 4, 4});

    REQUIRE_THROWS_AS(obstruction("K6"), UnknownObstruction);
}

TEST_CASE("projective split of the catalog") {
    // K5 and K33 embed in the projective plane but not the sphere
    for (const char* name : {"K5", "K33"}) {
        const auto& g = obstruction(name).graph;
        REQUIRE(std::holds_alternative<NonPlanar>(planarity(g)));
        REQUIRE(std::holds_alternative<EmbeddingFound>(search_embedding(g, 1, Orientability::nonorientable)));
    }
    // the rest fail projectivity
    for (const char* name : {"K44", "K36", "A2", "B3", "E18"}) {
        INFO(name);
        const auto& g = obstruction(name).graph;
        REQUIRE(std::holds_alternative<NonPlanar>(planarity(g)));
        REQUIRE(std::holds_alternative<ProvedNone>(search_embedding(g, 1, Orientability::nonorientable)));
    }
}

TEST_CASE("detection") {
    auto z3z3 = compile("Z3 x Z3");
    auto e = [&](int a, int b) { return z3z3.encode_tuple({a, b}); };

    // the diagonal-pair graph hosts K44
    auto g1 = build_gamma(z3z3, {e(1, 1), e(2, 2)});
    auto hit = detect_obstruction(g1, {"K44"});
    REQUIRE(std::holds_alternative<DetectedObstruction>(hit));
    REQUIRE(std::get<DetectedObstruction>(hit).name == "K44");
    REQUIRE(verify_subdivision_model(g1, obstruction("K44").graph,
                                     std::get<DetectedObstruction>(hit).model));

    // K5 found in the complete graph built from Z5
    auto z5 = compile("Z5");
    auto g2 = build_gamma(z5, {2, 3});
    auto hit2 = detect_obstruction(g2, {"K5", "K33"});
    REQUIRE(std::get<DetectedObstruction>(hit2).name == "K5");

    // the planar unit graph over Z5 hosts neither Kuratowski graph
    auto g3 = build_gamma(z5, {1});
    REQUIRE(std::holds_alternative<NoObstruction>(detect_obstruction(g3, {"K5", "K33"})));

    // B3 homeomorph sits inside the mixed-pair graph
    auto g4 = build_gamma(z3z3, {e(1, 1), e(1, 2)});
    auto hit4 = detect_obstruction(g4, {"B3"});
    REQUIRE(std::holds_alternative<DetectedObstruction>(hit4));
    REQUIRE(verify_subdivision_model(g4, obstruction("B3").graph,
                                     std::get<DetectedObstruction>(hit4).model));

    // tiny budget
    REQUIRE(std::holds_alternative<DetectBudgetExceeded>(detect_obstruction(g1, {"K44"}, 3)));
}
