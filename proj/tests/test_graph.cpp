#include <catch2/catch_amalgamated.hpp>

#include "ringtopo/graph.hpp"
#include "ringtopo/isomorphism.hpp"
#include "ringtopo/ring_graphs.hpp"
#include "ringtopo/subdivision.hpp"

using namespace ringtopo;

namespace {
FiniteRing compile(const std::string& spec) { return compile_ring(parse_ring_spec(spec)); }
}  // namespace

TEST_CASE("gamma builder basics") {
    auto z5 = compile("Z5");
    auto g = build_gamma(z5, {2, 3});
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.is_complete());

    auto z7 = compile("Z7");
    auto a2 = build_gamma(z7, {1});
    REQUIRE(a2.vertex_count() == 7);
    REQUIRE(a2.edge_count() == 18);
    REQUIRE(a2.degree_sequence() == std::vector<int>{6, 5, 5, 5, 5, 5, 5});
    // vertex 0 is adjacent to every nonzero element
    REQUIRE(a2.neighbor_count(0) == 6);

    auto z2z5 = compile("Z2 x Z5");
    auto g25 = build_gamma(z2z5, {z2z5.one()});
    REQUIRE(g25.edge_count() == 20);
    REQUIRE(g25.is_bipartite());
}

TEST_CASE("unit and unitary Cayley graphs") {
    auto z2 = compile("Z2");
    auto k2 = build_unit_graph(z2);
    REQUIRE(k2.edge_count() == 1);

    auto z4 = compile("Z4");
    auto c4 = build_unit_graph(z4);
    REQUIRE(c4.edge_count() == 4);
    REQUIRE(c4.has_edge(0, 1));
    REQUIRE(c4.has_edge(1, 2));
    REQUIRE(c4.has_edge(2, 3));
    REQUIRE(c4.has_edge(0, 3));

    auto z3z3 = compile("Z3 x Z3");
    auto cay = build_unitary_cayley(z3z3);
    REQUIRE(cay.edge_count() == 18);
    for (int v = 0; v < 9; ++v) REQUIRE(cay.degree(v) == 4);
}

TEST_CASE("comaximal graphs") {
    auto z5 = compile("Z5");
    REQUIRE(build_comaximal(z5).is_complete());

    auto r = compile("Z2 x Z2 x Z3");
    auto g = build_comaximal(r);
    REQUIRE(g.vertex_count() == 12);
    REQUIRE(g.edge_count() == 35);

    auto z2z4 = compile("Z2 x Z4");
    auto c = build_comaximal(z2z4);
    REQUIRE(c.vertex_count() == 8);
    REQUIRE(c.neighbor_count(z2z4.encode_tuple({1, 1})) == 7);
}

TEST_CASE("tensor product") {
    auto k2 = complete_graph(2);
    auto t = tensor(k2, k2);
    REQUIRE(t.vertex_count() == 4);
    REQUIRE(t.edge_count() == 2);
    REQUIRE(t.component_count() == 2);

    // loop-carrying factors: gamma-bar over Z2 and Z5 multiply to the
    // product-ring gamma graph under the mixed-radix vertex coding
    auto z2 = compile("Z2");
    auto z5 = compile("Z5");
    auto gb2 = build_gamma(z2, {1}, true);
    auto gb5 = build_gamma(z5, {1}, true);
    auto prod = tensor(gb2, gb5);
    auto z2z5 = compile("Z2 x Z5");
    auto direct = build_gamma(z2z5, {z2z5.one()});
    REQUIRE(prod.vertex_count() == direct.vertex_count());
    REQUIRE(prod.edge_count() == direct.edge_count());
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) REQUIRE(prod.has_edge(u, v) == direct.has_edge(u, v));

    // 6-regular graph on 12 vertices
    auto z3 = compile("Z3");
    auto gb3 = build_gamma(z3, {1}, true);
    auto tk4 = tensor(gb3, complete_graph(4));
    REQUIRE(tk4.vertex_count() == 12);
    for (int v = 0; v < 12; ++v) REQUIRE(tk4.degree(v) == 6);
}

TEST_CASE("disjoint copies") {
    auto two_k5 = disjoint_copies(complete_graph(5), 2);
    REQUIRE(two_k5.vertex_count() == 10);
    REQUIRE(two_k5.edge_count() == 20);
    REQUIRE(two_k5.component_count() == 2);

    auto three_k2 = disjoint_copies(complete_graph(2), 3);
    REQUIRE(three_k2.vertex_count() == 6);
    REQUIRE(three_k2.edge_count() == 3);
    REQUIRE(three_k2.component_count() == 3);

    auto r = compile("Z2 x Z2 x Z3");
    auto big = build_gamma(r, {r.one()});
    auto z2z3 = compile("Z2 x Z3");
    auto small = build_gamma(z2z3, {z2z3.one()});
    REQUIRE(isomorphic(big, disjoint_copies(small, 2)).has_value());
}

TEST_CASE("structure report") {
    auto z2z7 = compile("Z2 x Z7");
    auto g = build_gamma(z2z7, {z2z7.one()});
    auto rep = structure_report(g);
    REQUIRE(rep.p == 14);
    REQUIRE(rep.q == 42);
    REQUIRE(rep.bipartite);
    REQUIRE(rep.triangle_free);

    auto k5 = structure_report(complete_graph(5));
    REQUIRE(k5.p == 5);
    REQUIRE(k5.q == 10);
    REQUIRE_FALSE(k5.bipartite);
    REQUIRE_FALSE(k5.triangle_free);

    auto z2z9 = compile("Z2 x Z9");
    auto g9 = build_gamma(z2z9, {z2z9.one()});
    auto rep9 = structure_report(g9);
    REQUIRE(rep9.p == 18);
    REQUIRE(rep9.q == 54);
    REQUIRE(rep9.triangle_free);
}

TEST_CASE("complete graph constructions") {
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE(complete_bipartite(3, 3).edge_count() == 9);
    REQUIRE(complete_bipartite(3, 6).edge_count() == 18);
}

TEST_CASE("isomorphism") {
    auto z3z3 = compile("Z3 x Z3");
    auto e = [&](int a, int b) { return z3z3.encode_tuple({a, b}); };
    auto g1 = build_gamma(z3z3, {e(1, 1), e(2, 1)});
    auto g2 = build_gamma(z3z3, {e(1, 1), e(1, 2)});
    auto iso = isomorphic(g1, g2);
    REQUIRE(iso.has_value());
    // mapping preserves adjacency both ways
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) REQUIRE(g1.has_edge(u, v) == g2.has_edge((*iso)[u], (*iso)[v]));

    REQUIRE_FALSE(isomorphic(complete_graph(5), complete_bipartite(3, 3)).has_value());
    REQUIRE(isomorphic(complete_graph(4), complete_graph(4)).has_value());

    // same degree sequence, different graphs: C6 vs 2C3
    Graph c6(6), cc(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    cc.add_edge(0, 1);
    cc.add_edge(1, 2);
    cc.add_edge(0, 2);
    cc.add_edge(3, 4);
    cc.add_edge(4, 5);
    cc.add_edge(3, 5);
    REQUIRE_FALSE(isomorphic(c6, cc).has_value());
}

TEST_CASE("subdivision search") {
    // K4 cannot host a K5 subdivision
    auto none = find_subdivision(complete_graph(4), complete_graph(5));
    REQUIRE(std::holds_alternative<SubdivisionAbsent>(none));

    // the graph itself: identity model
    auto self = find_subdivision(complete_graph(5), complete_graph(5));
    REQUIRE(std::holds_alternative<SubdivisionModel>(self));
    const auto& model = std::get<SubdivisionModel>(self);
    REQUIRE(model.branch_vertices.size() == 5);
    for (const auto& path : model.paths) REQUIRE(path.size() == 2);

    // K5 subdivision with one edge subdivided
    Graph g(6);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1)) g.add_edge(u, v);
    g.add_edge(0, 5);
    g.add_edge(5, 1);
    auto sub = find_subdivision(g, complete_graph(5));
    REQUIRE(std::holds_alternative<SubdivisionModel>(sub));
    const auto& m2 = std::get<SubdivisionModel>(sub);
    bool has_long_path = false;
    for (const auto& path : m2.paths) has_long_path = has_long_path || path.size() == 3;
    REQUIRE(has_long_path);

    // K33 absent from planar graph
    auto planar = find_subdivision(complete_graph(4), complete_bipartite(3, 3));
    REQUIRE(std::holds_alternative<SubdivisionAbsent>(planar));

    // budget exhaustion is distinct from absence
    auto limited = find_subdivision(complete_graph(8), complete_graph(5), 1);
    REQUIRE(std::holds_alternative<SubdivisionBudgetExceeded>(limited));
}

TEST_CASE("subdivision model validity") {
    auto z3z3 = compile("Z3 x Z3");
    auto e = [&](int a, int b) { return z3z3.encode_tuple({a, b}); };
    auto host = build_gamma(z3z3, {e(1, 1), e(2, 2)});
    auto found = find_subdivision(host, complete_bipartite(4, 4));
    REQUIRE(std::holds_alternative<SubdivisionModel>(found));
    REQUIRE(verify_subdivision_model(host, complete_bipartite(4, 4), std::get<SubdivisionModel>(found)));
}

TEST_CASE("edge list round trip") {
    auto z2z4 = compile("Z2 x Z4");
    auto g = build_comaximal(z2z4);
    auto text = graph_to_text(g);
    auto back = graph_from_text(text);
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edge_count() == g.edge_count());
    REQUIRE(graph_to_text(back) == text);
    REQUIRE(back.label(0) == "(0,0)");
}

TEST_CASE("dot export") {
    auto dot = graph_to_dot(complete_graph(3));
    REQUIRE(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("gamma degree bounds and subgraph relations") {
    auto z8 = compile("Z8");
    auto data = validate_S(z8, z8.units(), {3, 5});
    auto g = build_gamma(z8, data);
    auto gbar = build_gamma(z8, data, true);
    const int gsize = static_cast<int>(data.group.size());
    for (int v = 0; v < 8; ++v) {
        REQUIRE(g.degree(v) >= gsize - 1);
        REQUIRE(g.degree(v) <= gsize * static_cast<int>(data.connection.size()));
        REQUIRE(gbar.neighbor_count(v) >= gsize);
    }

    // gamma edges sit inside the co-maximal graph
    auto com = build_comaximal(z8);
    for (const auto& [u, v] : g.edges()) REQUIRE(com.has_edge(u, v));
}
