#include <doctest.h>

#include <algorithm>
#include <random>

#include "mixgraph/catalog.hpp"
#include "mixgraph/cycles.hpp"
#include "mixgraph/harness.hpp"
#include "oracles.hpp"

using namespace mixgraph;

TEST_SUITE("cycles") {

TEST_CASE("enumeration counts") {
    const MixedGraph k4 = parse_graph("4 6\n0 1 U\n0 2 U\n0 3 U\n1 2 U\n1 3 U\n2 3 U\n");
    CHECK(enumerate_cycles(k4.underlying(), 4).size() == 7);
    CHECK(oracle::brute_cycle_count(k4, 4) == 7);
    CHECK(enumerate_cycles(parse_graph("4 3\n0 1 U\n1 2 U\n1 3 U\n").underlying()).empty());
    CHECK(enumerate_cycles(build_family({Family::CycleKind, {5}, '0'}).underlying()).size() == 1);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const MixedGraph m = random_mixed_graph(3 + static_cast<int>(rng() % 6), 0.5, rng);
        for (int len : {3, std::min(4, m.order()), m.order()})
            CHECK(static_cast<long long>(enumerate_cycles(m.underlying(), len).size()) == oracle::brute_cycle_count(m, len));
    }
}

TEST_CASE("canonical form") {
    CHECK(canonical_cycle({3, 1, 2, 0}).vertices == std::vector<Vertex>{0, 2, 1, 3});
    CHECK(canonical_cycle({0, 3, 2, 1}).vertices == std::vector<Vertex>{0, 1, 2, 3});
    const auto through = cycles_through_vertex(parse_graph("5 6\n0 1 U\n1 2 U\n0 2 U\n2 3 U\n3 4 U\n2 4 U\n").underlying(), 0);
    CHECK(through.size() == 1);
}

TEST_CASE("weights and classes") {
    const MixedGraph und = build_family({Family::CycleKind, {5}, '0'});
    const auto c = enumerate_cycles(und.underlying()).front();
    CHECK(cycle_weight(und, c) == T6Element::one());
    CHECK(classify_cycle(cycle_weight(und, c)) == CycleClass::Positive);

    const MixedGraph directed = parse_graph("3 3\n0 1 F\n1 2 F\n2 0 F\n");
    const auto t = enumerate_cycles(directed.underlying()).front();
    CHECK(cycle_weight(directed, t) == T6Element::minus_one());
    CHECK(classify_cycle(cycle_weight(directed, t)) == CycleClass::Negative);

    for (int n = 3; n <= 8; ++n) {
        const MixedGraph plus = build_family({Family::CycleKind, {n}, '+'});
        const auto cyc = enumerate_cycles(plus.underlying()).front();
        CHECK(classify_cycle(cycle_weight(plus, cyc)) == CycleClass::SemiPositive);
        const MixedGraph minus = build_family({Family::CycleKind, {n}, '-'});
        CHECK(classify_cycle(cycle_weight(minus, cyc)) == CycleClass::SemiNegative);
        const MixedGraph neg = build_family({Family::CycleKind, {n}, '='});
        CHECK(classify_cycle(cycle_weight(neg, cyc)) == CycleClass::Negative);
    }

    CHECK(classify_cycle(T6Element(0)) == CycleClass::Positive);
    CHECK(classify_cycle(T6Element(2)) == CycleClass::SemiNegative);
    CHECK(classify_cycle(T6Element(5)) == CycleClass::SemiPositive);
    CHECK(classify_cycle(T6Element(4)) == CycleClass::SemiNegative);
    CHECK(to_string(CycleClass::SemiNegative) == "SemiNegative");

    CHECK_THROWS_AS(cycle_weight(und, CycleDescriptor{{0, 2, 4}}), UsageError);
    CHECK(cycle_report_line(directed, t) == "cycle: 0 1 2 class=Negative weight=w^3");
}

TEST_CASE("chordless cycles") {
    const MixedGraph k4 = parse_graph("4 6\n0 1 U\n0 2 U\n0 3 U\n1 2 U\n1 3 U\n2 3 U\n");
    CHECK(chordless_cycles(k4.underlying()).size() == 4);
    const MixedGraph domino = parse_graph("6 7\n0 1 U\n1 2 U\n3 4 U\n4 5 U\n0 3 U\n1 4 U\n2 5 U\n");
    CHECK(enumerate_cycles(domino.underlying()).size() == 3);
    CHECK(chordless_cycles(domino.underlying()).size() == 2);
}

TEST_CASE("real parts of cycle weights decide cospectrality") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const MixedGraph m = random_mixed_graph(6, 0.5, rng);
        const auto v = cospectral_by_real_weights(m, converse(m));
        CHECK(v.cospectral);
        CHECK(v.reason == "ok");
    }
    const MixedGraph a = parse_graph("4 3\n0 1 F\n1 2 U\n2 3 F\n");
    const MixedGraph b = parse_graph("4 3\n0 1 U\n1 2 F\n3 2 F\n");
    CHECK(cospectral_by_real_weights(a, b).cospectral);
    const auto pos = build_family({Family::CycleKind, {4}, '0'});
    const auto neg = build_family({Family::CycleKind, {4}, '='});
    CHECK(cospectral_by_real_weights(pos, neg).reason == "weight-mismatch");
    CHECK(cospectral_by_real_weights(pos, a).reason == "underlying-mismatch");
}

}  // TEST_SUITE
