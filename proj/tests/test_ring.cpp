#include <catch2/catch_amalgamated.hpp>

#include "ringtopo/ring.hpp"

using namespace ringtopo;

namespace {

FiniteRing compile(const std::string& spec) { return compile_ring(parse_ring_spec(spec)); }

// exhaustive ring-axiom check, feasible at catalog sizes
void check_ring_axioms(const FiniteRing& r) {
    const int n = r.order();
    for (Elem a = 0; a < n; ++a) {
        REQUIRE(r.add(a, 0) == a);
        REQUIRE(r.mul(a, r.one()) == a);
        REQUIRE(r.add(a, r.neg(a)) == 0);
        for (Elem b = 0; b < n; ++b) {
            REQUIRE(r.add(a, b) == r.add(b, a));
            REQUIRE(r.mul(a, b) == r.mul(b, a));
            for (Elem c = 0; c < n; ++c) {
                REQUIRE(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
                REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
                REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("modular ring tables") {
    auto z8 = compile("Z8");
    REQUIRE(z8.order() == 8);
    REQUIRE(z8.units() == std::vector<Elem>{1, 3, 5, 7});
    REQUIRE(z8.jacobson_radical() == std::vector<Elem>{0, 2, 4, 6});

    auto z6 = compile("Z6");
    REQUIRE(z6.units() == std::vector<Elem>{1, 5});

    auto z5 = compile("Z5");
    REQUIRE(z5.units() == std::vector<Elem>{1, 2, 3, 4});

    auto z9 = compile("Z9");
    REQUIRE(z9.jacobson_radical() == std::vector<Elem>{0, 3, 6});
}

TEST_CASE("ring axioms hold for every catalog ring") {
    for (const auto& entry : local_ring_catalog()) {
        INFO(entry.spec);
        auto r = compile(entry.spec);
        check_ring_axioms(r);
        // units and zero-divisors partition the ring, 0 is a zero-divisor
        REQUIRE(r.units().size() + r.zero_divisors().size() == static_cast<std::size_t>(r.order()));
        REQUIRE(r.zero_divisors().front() == 0);
    }
}

TEST_CASE("galois fields") {
    auto f4 = compile("GF(4)");
    REQUIRE(f4.order() == 4);
    REQUIRE(f4.units().size() == 3);
    // auto-selected modulus is x^2+x+1: the generator alpha (code 2) satisfies
    // alpha^2 = alpha + 1 (code 3)
    REQUIRE(f4.mul(2, 2) == 3);

    auto f8 = compile("GF(8)");
    REQUIRE(f8.order() == 8);
    REQUIRE(f8.units().size() == 7);
    // least modulus is x^3+x^2+1: alpha^3 = alpha^2 + 1, coded 1 + 4
    REQUIRE(f8.mul(2, f8.mul(2, 2)) == 5);

    auto f9 = compile("GF(9)");
    REQUIRE(f9.units().size() == 8);
    // x^2+1: alpha^2 = -1 = 2
    REQUIRE(f9.mul(3, 3) == 2);

    REQUIRE_THROWS_AS(compile("GF(6)"), RingError);
    REQUIRE_THROWS_AS(compile_ring(galois_field(4, 1)), RingError);  // composite base
    REQUIRE_THROWS_AS(compile_ring(galois_field(2, 2, Poly{{0, 0, 1}})), RingError);  // x^2 reducible
}

TEST_CASE("quotient rings") {
    auto r = compile("Z2[x]/(x^2)");
    REQUIRE(r.order() == 4);
    // J = {0, x}: x has code 2
    REQUIRE(r.jacobson_radical() == std::vector<Elem>{0, 2});

    auto r8 = compile("Z2[x]/(x^3)");
    REQUIRE(r8.order() == 8);
    std::vector<Elem> m;
    REQUIRE(r8.is_local(&m));
    REQUIRE(m.size() == 4);

    REQUIRE_THROWS_AS(compile("Z4[x]/(2x^2+1)"), RingError);  // non-monic
}

TEST_CASE("products use mixed radix with rightmost factor fastest") {
    auto r = compile("Z2 x Z5");
    REQUIRE(r.order() == 10);
    REQUIRE(r.encode_tuple({1, 3}) == 8);
    REQUIRE(r.decode_tuple(8) == std::vector<int>{1, 3});
    REQUIRE(r.one() == r.encode_tuple({1, 1}));

    auto z2f4 = compile("Z2 x GF(4)");
    REQUIRE(z2f4.units().size() == 3);

    // U(R1 x R2) = U(R1) x U(R2), J likewise, checked pointwise
    auto z2z4 = compile("Z2 x Z4");
    auto z2 = compile("Z2");
    auto z4 = compile("Z4");
    for (Elem a = 0; a < 2; ++a)
        for (Elem b = 0; b < 4; ++b) {
            Elem code = z2z4.encode_tuple({a, b});
            REQUIRE(z2z4.is_unit(code) == (z2.is_unit(a) && z4.is_unit(b)));
            bool in_j = std::binary_search(z2z4.jacobson_radical().begin(), z2z4.jacobson_radical().end(), code);
            bool in_j1 = std::binary_search(z2.jacobson_radical().begin(), z2.jacobson_radical().end(), a);
            bool in_j2 = std::binary_search(z4.jacobson_radical().begin(), z4.jacobson_radical().end(), b);
            REQUIRE(in_j == (in_j1 && in_j2));
        }
    REQUIRE(z2z4.jacobson_radical() == std::vector<Elem>{0, 2});

    auto z3z3 = compile("Z3 x Z3");
    REQUIRE(z3z3.jacobson_radical() == std::vector<Elem>{0});

    // nesting flattens
    auto nested = compile_ring(product({modular_int(2), product({modular_int(3), modular_int(5)})}));
    REQUIRE(nested.factor_orders() == std::vector<int>{2, 3, 5});
}

TEST_CASE("compile is deterministic") {
    auto a = compile("Z3 x GF(4)");
    auto b = compile("Z3 x GF(4)");
    REQUIRE(a.order() == b.order());
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem y = 0; y < a.order(); ++y) {
            REQUIRE(a.add(x, y) == b.add(x, y));
            REQUIRE(a.mul(x, y) == b.mul(x, y));
        }
}

TEST_CASE("unit plus nilpotent is a unit") {
    for (const auto& spec : {"Z8", "Z9", "Z2 x Z4", "Z4[x]/(x^2)"}) {
        auto r = compile(spec);
        for (Elem u : r.units())
            for (Elem j : r.jacobson_radical()) REQUIRE(r.is_unit(r.add(u, j)));
    }
}

TEST_CASE("locality") {
    std::vector<Elem> m;
    auto z8 = compile("Z8");
    REQUIRE(z8.is_local(&m));
    REQUIRE(m == std::vector<Elem>{0, 2, 4, 6});

    REQUIRE_FALSE(compile("Z3 x Z3").is_local());
    REQUIRE_FALSE(compile("Z6").is_local());
}

TEST_CASE("index-2 maximal ideals") {
    auto z2z5 = compile("Z2 x Z5");
    auto ideals = z2z5.index2_maximal_ideals();
    REQUIRE(ideals.size() == 1);
    REQUIRE(ideals[0] == std::vector<Elem>{0, 1, 2, 3, 4});  // {0} x Z5

    REQUIRE(compile("Z5").index2_maximal_ideals().empty());
    REQUIRE(compile("Z9").index2_maximal_ideals().empty());

    auto z4 = compile("Z4");
    REQUIRE(z4.index2_maximal_ideals() == std::vector<std::vector<Elem>>{{0, 2}});

    // Z2 x Z2 has three index-2 ideals: two coordinate ones and none else
    auto z2z2 = compile("Z2 x Z2");
    REQUIRE(z2z2.index2_maximal_ideals().size() == 2);
}

TEST_CASE("comaximality") {
    auto z6 = compile("Z6");
    REQUIRE(z6.comaximal(2, 3));
    auto z4 = compile("Z4");
    REQUIRE_FALSE(z4.comaximal(2, 2));
    auto z2z4 = compile("Z2 x Z4");
    REQUIRE(z2z4.comaximal(z2z4.encode_tuple({1, 0}), z2z4.encode_tuple({0, 1})));
}

TEST_CASE("subgroup closure") {
    auto z7 = compile("Z7");
    REQUIRE(z7.subgroup_closure({2}) == std::vector<Elem>{1, 2, 4});
    auto z5 = compile("Z5");
    REQUIRE(z5.subgroup_closure({4}) == std::vector<Elem>{1, 4});
    auto z8 = compile("Z8");
    REQUIRE(z8.subgroup_closure({3, 5}) == std::vector<Elem>{1, 3, 5, 7});
    REQUIRE_THROWS_AS(compile("Z6").subgroup_closure({2}), RingError);
}

TEST_CASE("validate_S") {
    auto z5 = compile("Z5");
    REQUIRE_THROWS_AS(validate_S(z5, z5.units(), {2}), RingError);  // 2^-1 = 3 missing
    auto ok = validate_S(z5, z5.units(), {2, 3});
    REQUIRE(ok.connection == std::vector<Elem>{2, 3});

    auto z3z3 = compile("Z3 x Z3");
    Elem s = z3z3.encode_tuple({2, 2});
    REQUIRE_NOTHROW(validate_S(z3z3, z3z3.units(), {s}));  // self-inverse

    REQUIRE_THROWS_AS(validate_S(z5, z5.units(), {}), RingError);                       // empty
    REQUIRE_THROWS_AS(validate_S(z5, {1, 4}, {2, 3}), RingError);                       // S not in G
    REQUIRE_THROWS_AS(validate_S(z5, std::vector<Elem>{1, 2}, std::vector<Elem>{1}), RingError);  // G not a group
}

TEST_CASE("spec grammar round trip") {
    for (const auto& text : {"Z8", "GF(9)", "Z2[x]/(x^3)", "Z2 x Z3[x]/(x^2)", "Z4[x]/(x^2+2)"}) {
        auto spec = parse_ring_spec(text);
        REQUIRE(spec_to_string(spec) == text);
    }
    REQUIRE_THROWS_AS(parse_ring_spec("Q5"), RingParseError);
    REQUIRE_THROWS_AS(parse_ring_spec("Z2 y Z3"), RingParseError);
    try {
        parse_ring_spec("Z2 x ");
        FAIL("expected parse error");
    } catch (const RingParseError& e) {
        REQUIRE(e.position() >= 4);
    }
}

TEST_CASE("element text I/O") {
    auto r = compile("Z2 x Z4");
    REQUIRE(format_element(r, 6) == "(1,2)");
    REQUIRE(parse_element(r, "(1,2)") == 6);
    REQUIRE(parse_element(r, "6") == 6);
    REQUIRE(parse_element_set(r, "(1,0), (0,1); 7") == std::vector<Elem>{1, 4, 7});

    auto z5 = compile("Z5");
    REQUIRE(format_element(z5, 3) == "3");
}

TEST_CASE("order cap") {
    CompileOptions opts;
    opts.max_order = 100;
    REQUIRE_THROWS_AS(compile_ring(parse_ring_spec("Z128"), opts), RingError);
    REQUIRE_NOTHROW(compile_ring(parse_ring_spec("Z128"), CompileOptions{4096}));
}

TEST_CASE("catalog compiles and the order-16 quotient presents GF(4)[x]/(x^2)") {
    for (const auto& entry : local_ring_catalog()) {
        auto r = compile(entry.spec);
        REQUIRE(r.is_local());
    }
    // Z2[x]/(x^4+x^2+1): local of order 16 with J of size 4 and residue field GF(4)
    auto r = compile("Z2[x]/(x^4+x^2+1)");
    REQUIRE(r.order() == 16);
    std::vector<Elem> m;
    REQUIRE(r.is_local(&m));
    REQUIRE(m.size() == 4);
    REQUIRE(r.jacobson_radical().size() == 4);
}
