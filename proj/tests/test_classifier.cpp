#include <catch2/catch_amalgamated.hpp>

#include "ringtopo/classifier.hpp"

using namespace ringtopo;

namespace {
FiniteRing compile(const std::string& spec) { return compile_ring(parse_ring_spec(spec)); }
}  // namespace

TEST_CASE("ring isomorphism") {
    REQUIRE(ring_isomorphic(compile("Z6"), compile("Z2 x Z3")).has_value());
    REQUIRE(ring_isomorphic(compile("Z10"), compile("Z2 x Z5")).has_value());
    REQUIRE_FALSE(ring_isomorphic(compile("Z4"), compile("Z2[x]/(x^2)")).has_value());
    REQUIRE_FALSE(ring_isomorphic(compile("Z4"), compile("Z2 x Z2")).has_value());
    REQUIRE_FALSE(ring_isomorphic(compile("GF(4)"), compile("Z4")).has_value());
    REQUIRE_FALSE(ring_isomorphic(compile("Z9"), compile("Z3[x]/(x^2)")).has_value());
    REQUIRE(ring_isomorphic(compile("GF(4)"), compile("Z2[x]/(x^2+x+1)")).has_value());

    // the mapping really is a ring isomorphism
    auto a = compile("Z6");
    auto b = compile("Z2 x Z3");
    auto phi = *ring_isomorphic(a, b);
    for (Elem x = 0; x < 6; ++x)
        for (Elem y = 0; y < 6; ++y) {
            REQUIRE(phi[static_cast<std::size_t>(a.add(x, y))] ==
                    b.add(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]));
            REQUIRE(phi[static_cast<std::size_t>(a.mul(x, y))] ==
                    b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]));
        }
}

TEST_CASE("local decomposition") {
    auto f = local_decomposition(compile("Z12"));
    REQUIRE(f.size() == 2);
    REQUIRE(f[0].order() == 3);
    REQUIRE(f[1].order() == 4);

    auto g = local_decomposition(compile("Z8"));
    REQUIRE(g.size() == 1);
    REQUIRE(g[0].order() == 8);

    auto h = local_decomposition(compile("Z2 x Z2 x Z2"));
    REQUIRE(h.size() == 3);
}

TEST_CASE("canonical decomposition against the catalog") {
    REQUIRE(canonical_decomposition(compile("Z6")).display == "Z2 x Z3");
    REQUIRE(canonical_decomposition(compile("Z12")).display == "Z3 x Z4");
    REQUIRE(canonical_decomposition(compile("Z2[x]/(x^3+x)")).display == "Z2 x Z2[x]/(x^2)");
    REQUIRE(canonical_decomposition(compile("GF(16)")).display == "GF(16)");
    REQUIRE(canonical_decomposition(compile("Z2[x]/(x^4+x^2+1)")).display == "GF4[x]/(x^2)");

    // an order-16 local ring outside the catalog stratum
    REQUIRE_THROWS_AS(canonical_decomposition(compile("Z4[x]/(x^2+2)")), NonCanonicalSpec);
}

TEST_CASE("planar theory table") {
    auto r1 = compile("Z2 x Z2 x Z4");
    REQUIRE(theory_planar_gamma(r1, {r1.one()}));
    REQUIRE(theory_planar_gamma(r1, {r1.neg(r1.one())}));

    auto z5 = compile("Z5");
    REQUIRE(theory_planar_gamma(z5, {1}));
    REQUIRE_FALSE(theory_planar_gamma(z5, {2, 3}));
    REQUIRE_FALSE(theory_planar_gamma(z5, {4}));

    auto z3z3 = compile("Z3 x Z3");
    auto e = [&](int a, int b) { return z3z3.encode_tuple({a, b}); };
    REQUIRE(theory_planar_gamma(z3z3, {e(1, 2)}));
    REQUIRE(theory_planar_gamma(z3z3, {e(2, 1)}));
    REQUIRE(theory_planar_gamma(z3z3, {e(1, 1)}));
    REQUIRE_FALSE(theory_planar_gamma(z3z3, {e(2, 2)}));

    auto f4 = compile("GF(4)");
    REQUIRE(theory_planar_gamma(f4, {2, 3}));

    auto z2f4 = compile("Z2 x GF(4)");
    REQUIRE(theory_planar_gamma(z2f4, {z2f4.one()}));
    REQUIRE_FALSE(theory_planar_gamma(z2f4, {z2f4.encode_tuple({1, 2}), z2f4.encode_tuple({1, 3})}));

    auto z2z9 = compile("Z2 x Z9");
    REQUIRE_FALSE(theory_planar_gamma(z2z9, {z2z9.one()}));
}

TEST_CASE("projective theory table") {
    auto z5 = compile("Z5");
    REQUIRE(theory_projective_gamma(z5, {4}));
    REQUIRE(theory_projective_gamma(z5, {2, 3}));
    REQUIRE_FALSE(theory_projective_gamma(z5, {1}));

    auto z7 = compile("Z7");
    REQUIRE_FALSE(theory_projective_gamma(z7, {1}));
    REQUIRE_FALSE(theory_projective_gamma(z7, {6}));

    auto z3z3 = compile("Z3 x Z3");
    auto e = [&](int a, int b) { return z3z3.encode_tuple({a, b}); };
    REQUIRE(theory_projective_gamma(z3z3, {e(2, 2)}));
    REQUIRE(theory_projective_gamma(z3z3, {e(1, 2), e(2, 2)}));
    REQUIRE(theory_projective_gamma(z3z3, {e(2, 1), e(2, 2)}));
    REQUIRE_FALSE(theory_projective_gamma(z3z3, {e(1, 1), e(2, 2)}));
    REQUIRE_FALSE(theory_projective_gamma(z3z3, {e(1, 2), e(2, 1)}));
    REQUIRE_FALSE(theory_projective_gamma(z3z3, {e(1, 1)}));
}

TEST_CASE("unit and unitary Cayley theory") {
    auto v5 = theory_unit_unitary(compile("Z5"));
    REQUIRE_FALSE(v5.unit_projective);
    REQUIRE(v5.cayley_projective);
    REQUIRE(v5.gamma_units_projective);

    auto v33 = theory_unit_unitary(compile("Z3 x Z3"));
    REQUIRE_FALSE(v33.unit_projective);
    REQUIRE(v33.cayley_projective);
    REQUIRE_FALSE(v33.gamma_units_projective);

    auto v7 = theory_unit_unitary(compile("Z7"));
    REQUIRE_FALSE(v7.unit_projective);
    REQUIRE_FALSE(v7.cayley_projective);
    REQUIRE_FALSE(v7.gamma_units_projective);
}

TEST_CASE("co-maximal theory table") {
    REQUIRE(theory_comaximal(compile("Z2 x Z2 x Z2")) == ComaximalClass::planar);
    REQUIRE(theory_comaximal(compile("Z2 x Z4")) == ComaximalClass::projective);
    REQUIRE(theory_comaximal(compile("Z2 x Z2[x]/(x^2)")) == ComaximalClass::projective);
    REQUIRE(theory_comaximal(compile("Z5")) == ComaximalClass::projective);
    REQUIRE(theory_comaximal(compile("Z2 x Z2 x Z4")) == ComaximalClass::neither);
    REQUIRE(theory_comaximal(compile("GF(4)")) == ComaximalClass::planar);
    REQUIRE(theory_comaximal(compile("Z9")) == ComaximalClass::neither);
}

TEST_CASE("computed classification") {
    auto z5 = compile("Z5");
    REQUIRE(compute_topo_class(build_gamma(z5, {4})).cls == TopoClass::projective);
    REQUIRE(compute_topo_class(build_gamma(z5, {1})).cls == TopoClass::planar);

    auto z7 = compile("Z7");
    REQUIRE(compute_topo_class(build_gamma(z7, {1})).cls == TopoClass::neither);

    auto z2z4 = compile("Z2 x Z4");
    REQUIRE(compute_topo_class(build_comaximal(z2z4)).cls == TopoClass::projective);

    auto r = compile("Z2 x Z2 x Z3");
    REQUIRE(compute_topo_class(build_comaximal(r)).cls == TopoClass::neither);
    REQUIRE(compute_topo_class(build_gamma(r, {r.one()})).cls == TopoClass::planar);
}

TEST_CASE("universe generation") {
    RingUniverse u;
    u.max_order = 18;
    u.max_factors = 4;
    auto members = generate_universe(u);
    REQUIRE(!members.empty());
    std::set<std::string> specs;
    for (const auto& m : members) {
        specs.insert(m.spec);
        auto ring = compile(m.spec);
        REQUIRE(ring.order() <= 18);
        REQUIRE(m.catalog_indices.size() <= 4);
    }
    REQUIRE(specs.count("Z2 x Z9"));
    REQUIRE(specs.count("Z3 x Z3"));
    REQUIRE(specs.count("Z2 x Z2 x Z2 x Z2"));
    REQUIRE(specs.count("GF(16)"));
    REQUIRE(specs.size() == members.size());
}

TEST_CASE("cross validation on a small universe") {
    RingUniverse u;
    u.max_order = 9;
    u.max_factors = 2;
    u.exhaustive_s_max_order = 9;
    auto rows = cross_validate(u);
    REQUIRE(!rows.empty());
    for (const auto& row : rows) {
        INFO(row.ring_spec + " " + row.family + " " + row.s_desc + " theory=" + to_string(row.theory) +
             " computed=" + to_string(row.computed) + " (" + row.witness + ")");
        REQUIRE(row.agreement);
    }
    // rows are sorted canonically
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto key = [](const ClassificationVerdict& v) { return std::tie(v.ring_spec, v.family, v.s_desc); };
        REQUIRE(key(rows[i - 1]) < key(rows[i]));
    }
}

TEST_CASE("size bound audit") {
    std::vector<ExactCrosscapRecord> records;
    records.push_back(make_exact_record(compile("Z5"), "gamma", {4}, 1));
    records.push_back(make_exact_record(compile("Z8"), "gamma", {1}, 2));
    records.push_back(make_exact_record(compile("Z3 x Z3"), "gamma", {8}, 1));
    auto report = size_bound_audit(records);
    REQUIRE(report.checked == 3);
    REQUIRE(report.violations.empty());

    // a fabricated violation is caught
    ExactCrosscapRecord bad;
    bad.ring_spec = "fake";
    bad.ring_order = 64;
    bad.unit_count = 2;
    bad.jacobson_count = 1;
    bad.z2_factor_count = 0;
    bad.other_factor_product = 64;
    bad.crosscap = 1;
    auto rep2 = size_bound_audit({bad});
    REQUIRE_FALSE(rep2.violations.empty());
}
