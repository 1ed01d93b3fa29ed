#include <doctest.h>

#include <random>

#include "mixgraph/core.hpp"
#include "mixgraph/harness.hpp"

using namespace mixgraph;

TEST_SUITE("core") {

TEST_CASE("sixth roots multiply by adding exponents") {
    CHECK(T6Element::omega() * T6Element::omega_bar() == T6Element::one());
    CHECK(T6Element::omega() * T6Element::omega() * T6Element::omega() == T6Element::minus_one());
    CHECK(T6Element::one() * T6Element::omega() == T6Element::omega());
    CHECK(T6Element(2).conj() == T6Element(4));
    CHECK(-T6Element(1) == T6Element(4));
    CHECK(T6Element(7).exponent() == 1);
    CHECK(T6Element(-1).exponent() == 5);
    CHECK(T6Element(3).str() == "w^3");
}

TEST_CASE("twice the real part") {
    const int expected[6] = {2, 1, -1, -2, -1, 1};
    for (int e = 0; e < 6; ++e) CHECK(T6Element(e).twice_real() == expected[e]);
}

TEST_CASE("roots as Eisenstein numbers") {
    CHECK(to_eisenstein(T6Element(5)) == EisensteinNumber(1, -1));
    CHECK(to_eisenstein(T6Element(3)) == EisensteinNumber(-1, 0));
    CHECK(to_eisenstein(T6Element(0)) == EisensteinNumber(1, 0));
}

TEST_CASE("Eisenstein multiplication uses w^2 = w - 1") {
    CHECK(eis_mul({0, 1}, {0, 1}) == EisensteinNumber(-1, 1));
    CHECK(eis_mul({0, 1}, {1, -1}) == EisensteinNumber(1, 0));
    CHECK(eis_mul({2, 0}, {0, 3}) == EisensteinNumber(0, 6));
    const EisensteinNumber z(3, -2);
    CHECK(z * z.inverse() == EisensteinNumber(1, 0));
    CHECK(z.norm() == Rational(7));
    CHECK((z * z.conj()).is_real());
}

TEST_CASE("parse and serialize") {
    const MixedGraph m = parse_graph("3 3\n0 1 U\n1 2 F\n2 0 F\n");
    CHECK(m.order() == 3);
    CHECK(m.size() == 3);
    CHECK(m.gain(0, 1) == T6Element::one());
    CHECK(m.gain(1, 2) == T6Element::omega());
    CHECK(m.gain(2, 0) == T6Element::omega());
    CHECK(m.gain(0, 2) == T6Element::omega_bar());

    const MixedGraph k1 = parse_graph("1 0\n");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    CHECK_THROWS_AS(parse_graph("2 2\n0 1 U\n0 1 F\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 0 U\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2 U\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 X\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1 U\n"), ParseError);

    // B is the reverse arc and comments are skipped
    const MixedGraph b = parse_graph("# c\n2 1\n0 1 B\n");
    CHECK(b.gain(1, 0) == T6Element::omega());
    CHECK(parse_graph(serialize_graph(b)) == b);
}

TEST_CASE("serialization round trip on random graphs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const MixedGraph m = random_mixed_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
        CHECK(parse_graph(serialize_graph(m)) == m);
    }
    const auto stream = parse_graph_stream("2 1\n0 1 U\n3 0\n");
    REQUIRE(stream.size() == 2);
    CHECK(stream[1].order() == 3);
}

TEST_CASE("converse") {
    const MixedGraph arc = parse_graph("2 1\n0 1 F\n");
    CHECK(converse(arc) == parse_graph("2 1\n1 0 F\n"));
    const MixedGraph und = parse_graph("3 2\n0 1 U\n1 2 U\n");
    CHECK(converse(und) == und);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const MixedGraph m = random_mixed_graph(6, 0.6, rng);
        CHECK(converse(converse(m)) == m);
    }
}

TEST_CASE("neighbourhoods split by edge type") {
    const MixedGraph arc = parse_graph("2 1\n0 1 F\n");
    const Neighborhoods a = neighborhoods(arc, 0);
    CHECK(a.undirected.empty());
    CHECK(a.out == std::vector<Vertex>{1});
    CHECK(a.in.empty());
    CHECK(neighborhoods(arc, 1).in == std::vector<Vertex>{0});

    const MixedGraph und = parse_graph("2 1\n0 1 U\n");
    CHECK(neighborhoods(und, 1).undirected == std::vector<Vertex>{0});

    const Neighborhoods iso = neighborhoods(parse_graph("1 0\n"), 0);
    CHECK(iso.undirected.empty());
    CHECK(iso.out.empty());
    CHECK(iso.in.empty());
}

TEST_CASE("derived graphs") {
    const MixedGraph m = parse_graph("4 4\n0 1 F\n1 2 U\n2 3 F\n3 0 U\n");
    const MixedGraph cut = m.without_vertices({1});
    CHECK(cut.order() == 3);
    CHECK(cut.size() == 2);
    CHECK(m.without_edge(0, 1).size() == 3);
    CHECK(m.undirected().gain(0, 1) == T6Element::one());
    const MixedGraph r = m.relabelled({1, 2, 3, 0});
    CHECK(r.gain(1, 2) == T6Element::omega());
    const MixedGraph u = disjoint_union(m, parse_graph("2 1\n0 1 F\n"));
    CHECK(u.order() == 6);
    CHECK(u.gain(4, 5) == T6Element::omega());
    CHECK(u.underlying().component_count() == 2);
}

}  // TEST_SUITE
