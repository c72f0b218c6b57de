#include <catch2/catch_amalgamated.hpp>

#include "ringtopo/crosscap.hpp"
#include "ringtopo/embedding.hpp"
#include "ringtopo/genus_search.hpp"
#include "ringtopo/ring_graphs.hpp"

using namespace ringtopo;

namespace {
FiniteRing compile(const std::string& spec) { return compile_ring(parse_ring_spec(spec)); }

SignedScheme planar_k4_scheme() {
    // tetrahedron rotation, all signatures +1
    SignedScheme s;
    s.rotation = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    return s;
}
}  // namespace

TEST_CASE("face tracing on known schemes") {
    auto k4 = complete_graph(4);
    auto trace = trace_faces(k4, planar_k4_scheme());
    REQUIRE(trace.face_count == 4);
    REQUIRE(trace.euler_genus == 0);
    REQUIRE(trace.orientable);

    // single edge: one face of length 2
    auto k2 = complete_graph(2);
    SignedScheme s2;
    s2.rotation = {{1}, {0}};
    auto t2 = trace_faces(k2, s2);
    REQUIRE(t2.face_count == 1);
    REQUIRE(t2.euler_genus == 0);
    REQUIRE(t2.faces.size() == 1);
    REQUIRE(t2.faces[0].size() == 2);

    // triangle with one negative edge: single face, Euler genus 1
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    SignedScheme st;
    st.rotation = {{1, 2}, {0, 2}, {0, 1}};
    st.signatures = {{{0, 1}, -1}};
    auto tt = trace_faces(tri, st);
    REQUIRE(tt.face_count == 1);
    REQUIRE(tt.euler_genus == 1);
    REQUIRE_FALSE(tt.orientable);

    // dart conservation: total face length is 2q
    std::size_t total = 0;
    for (const auto& f : trace.faces) total += f.size();
    REQUIRE(total == 2 * static_cast<std::size_t>(k4.edge_count()));
}

TEST_CASE("malformed schemes are rejected") {
    auto k4 = complete_graph(4);
    SignedScheme bad = planar_k4_scheme();
    bad.rotation[0] = {1, 2};  // missing a neighbor
    REQUIRE_THROWS_AS(trace_faces(k4, bad), MalformedScheme);

    SignedScheme bad2 = planar_k4_scheme();
    bad2.signatures = {{{0, 5}, -1}};
    REQUIRE_THROWS_AS(trace_faces(k4, bad2), MalformedScheme);
}

TEST_CASE("embedding search on the small benchmarks") {
    // K5 embeds in the projective plane
    auto k5 = complete_graph(5);
    auto found = search_embedding(k5, 1, Orientability::nonorientable);
    REQUIRE(std::holds_alternative<EmbeddingFound>(found));
    const auto& cert = std::get<EmbeddingFound>(found).certificate;
    REQUIRE(cert.euler_genus == 1);
    REQUIRE_FALSE(cert.orientable);
    REQUIRE(cert.face_count == 6);
    REQUIRE(verify_certificate(k5, cert).ok);

    // K33 is not planar
    auto k33 = complete_bipartite(3, 3);
    REQUIRE(std::holds_alternative<ProvedNone>(search_embedding(k33, 0, Orientability::orientable)));

    // K5 has no cellular nonorientable embedding on the sphere
    REQUIRE(std::holds_alternative<ProvedNone>(search_embedding(k5, 0, Orientability::either)));

    // budget cut is reported as such
    REQUIRE(std::holds_alternative<SearchBudgetExceeded>(search_embedding(k5, 1, Orientability::nonorientable, 5)));
}

TEST_CASE("search results are reproducible") {
    auto k5 = complete_graph(5);
    auto a = search_embedding(k5, 1, Orientability::nonorientable);
    auto b = search_embedding(k5, 1, Orientability::nonorientable);
    REQUIRE(certificate_to_text(std::get<EmbeddingFound>(a).certificate) ==
            certificate_to_text(std::get<EmbeddingFound>(b).certificate));
}

TEST_CASE("planarity double decision") {
    auto z5 = compile("Z5");
    REQUIRE(std::holds_alternative<Planar>(planarity(build_gamma(z5, {1}))));

    auto z3z3 = compile("Z3 x Z3");
    REQUIRE(std::holds_alternative<Planar>(planarity(build_gamma(z3z3, {z3z3.one()}))));

    auto np = planarity(complete_graph(5));
    REQUIRE(std::holds_alternative<NonPlanar>(np));
    REQUIRE(std::get<NonPlanar>(np).obstruction_name == "K5");

    auto np33 = planarity(complete_bipartite(3, 3));
    REQUIRE(std::get<NonPlanar>(np33).obstruction_name == "K33");

    // disconnected planar graph gets a stitched certificate
    auto two = disjoint_copies(complete_graph(4), 2);
    auto flat = planarity(two);
    REQUIRE(std::holds_alternative<Planar>(flat));
    REQUIRE(std::get<Planar>(flat).certificate.euler_genus == 0);
}

TEST_CASE("crosscap formulas") {
    REQUIRE(kn_crosscap(3) == 0);
    REQUIRE(kn_crosscap(4) == 0);
    REQUIRE(kn_crosscap(5) == 1);
    REQUIRE(kn_crosscap(6) == 1);
    REQUIRE(kn_crosscap(7) == 3);  // the exceptional value
    REQUIRE(kn_crosscap(8) == 4);
    REQUIRE(kmn_crosscap(3, 3) == 1);
    REQUIRE(kmn_crosscap(3, 4) == 1);
    REQUIRE(kmn_crosscap(4, 4) == 2);
    REQUIRE(kmn_crosscap(3, 6) == 2);
    REQUIRE_THROWS_AS(kn_crosscap(2), OutOfRange);
    REQUIRE_THROWS_AS(kmn_crosscap(1, 5), OutOfRange);
}

TEST_CASE("edge-count lower bound") {
    REQUIRE(crosscap_lower_bound_edges(10, 20, 1, true) == 2);
    REQUIRE(crosscap_lower_bound_edges(7, 21, 1, false) == 2);
    REQUIRE(crosscap_lower_bound_edges(16, 48, 1, true) == 10);
    REQUIRE(crosscap_lower_bound_edges(4, 6, 1, false) == 0);  // floored at zero
    REQUIRE_THROWS_AS(crosscap_lower_bound_edges(2, 1, 1, false), TooFewVertices);
}

TEST_CASE("minimum degree consistency") {
    REQUIRE(min_degree_consistency(complete_graph(5), 1));
    REQUIRE(min_degree_consistency(complete_graph(7), 3));
    REQUIRE_FALSE(min_degree_consistency(complete_graph(7), 1));
    REQUIRE_THROWS_AS(min_degree_consistency(complete_graph(2), 0), TooFewVertices);
}

TEST_CASE("stahl composition") {
    // two K5 components
    REQUIRE(stahl_compose({{1, 1}, {1, 1}}) == 2);
    // planar components stay planar
    REQUIRE(stahl_compose({{0, 0}, {0, 0}, {0, 0}}) == 0);
    // components with crosscap exceeding twice the genus add with a shift
    REQUIRE(stahl_compose({{3, 1}, {3, 1}}) == 5);
    // 2 copies with crosscap t > 2*genus: 1 - 2 + 2t
    REQUIRE(stahl_compose({{5, 2}, {5, 2}}) == 9);
    // mixed: K5 and K7
    REQUIRE(stahl_compose({{1, 1}, {3, 1}}) == 3);
}

TEST_CASE("exact crosscap on small graphs") {
    auto r33 = crosscap_exact(complete_bipartite(3, 3));
    REQUIRE(r33.exact);
    REQUIRE(r33.lower == 1);

    auto r4 = crosscap_exact(complete_graph(4));
    REQUIRE(r4.exact);
    REQUIRE(*r4.upper == 0);

    auto z8 = compile("Z8");
    auto g8 = build_gamma(z8, {1});
    auto r8 = crosscap_exact(g8);
    REQUIRE(r8.exact);
    REQUIRE(*r8.upper == 2);
    REQUIRE(r8.lower_reason == "complete bipartite formula");

    // disjoint union of two K5s composes to 2
    auto two_k5 = disjoint_copies(complete_graph(5), 2);
    auto r2k5 = crosscap_exact(two_k5);
    REQUIRE(r2k5.exact);
    REQUIRE(*r2k5.upper == 2);
    REQUIRE(r2k5.upper_reason == "Stahl composition");
}

TEST_CASE("certificate round trip is bit-exact") {
    auto k5 = complete_graph(5);
    auto cert = std::get<EmbeddingFound>(search_embedding(k5, 1, Orientability::nonorientable)).certificate;
    auto text = certificate_to_text(cert);
    auto back = certificate_from_text(text);
    REQUIRE(certificate_to_text(back) == text);
    REQUIRE(verify_certificate(k5, back).ok);

    // fingerprint mismatch is caught
    REQUIRE_FALSE(verify_certificate(complete_bipartite(3, 3), back).ok);

    // tampered face count is caught
    auto tampered = back;
    tampered.face_count += 1;
    REQUIRE_FALSE(verify_certificate(k5, tampered).ok);
}

TEST_CASE("orientable search keeps handles and crosscaps apart") {
    // K5 on the torus (orientable, Euler genus 2) but not on the Klein
    // bottle's orientable side at genus 0
    auto k5 = complete_graph(5);
    auto torus = search_embedding(k5, 2, Orientability::orientable);
    REQUIRE(std::holds_alternative<EmbeddingFound>(torus));
    REQUIRE(std::get<EmbeddingFound>(torus).certificate.orientable);

    // K33 at Euler genus 1, orientable mode, is impossible (odd genus)
    REQUIRE(std::holds_alternative<ProvedNone>(search_embedding(complete_bipartite(3, 3), 1, Orientability::orientable)));
}
