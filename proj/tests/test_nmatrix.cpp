#include <doctest.h>

#include <cmath>
#include <random>

#include "mixgraph/catalog.hpp"
#include "mixgraph/harness.hpp"
#include "mixgraph/nmatrix.hpp"
#include "oracles.hpp"

using namespace mixgraph;

namespace {

const char* kSemiNegativeTriangle = "3 3\n0 1 F\n1 2 F\n0 2 U\n";

CharPoly from_oracle(const std::vector<long long>& ascending) {
    std::vector<BigInt> low;
    for (long long c : ascending) low.emplace_back(static_cast<long>(c));
    return CharPoly::from_ascending(low);
}

}  // namespace

TEST_SUITE("nmatrix") {

TEST_CASE("N-matrix entries") {
    const NMatrix e = build_nmatrix(parse_graph("2 1\n0 1 U\n"));
    CHECK(e.at(0, 1) == EisensteinNumber(1, 0));
    CHECK(e.at(1, 0) == EisensteinNumber(1, 0));
    CHECK(e.at(0, 0).is_zero());

    const NMatrix a = build_nmatrix(parse_graph("2 1\n0 1 F\n"));
    CHECK(a.at(0, 1) == EisensteinNumber(0, 1));
    CHECK(a.at(1, 0) == EisensteinNumber(1, -1));
    CHECK(a.is_hermitian());

    const NMatrix z = build_nmatrix(MixedGraph(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(z.at(r, c).is_zero());
}

TEST_CASE("golden characteristic polynomials") {
    const MixedGraph t = parse_graph(kSemiNegativeTriangle);
    CHECK(charpoly_exact(t) == CharPoly({1, 0, -3, 1}));
    CHECK(charpoly_subgraphs(t) == CharPoly({1, 0, -3, 1}));
    CHECK(charpoly_exact(parse_graph("2 1\n0 1 U\n")) == CharPoly({1, 0, -1}));
    const MixedGraph c4 = parse_graph("4 4\n0 1 U\n1 2 U\n2 3 U\n0 3 U\n");
    CHECK(charpoly_exact(c4) == CharPoly({1, 0, -4, 0, 0}));
    CHECK(charpoly_subgraphs(c4) == CharPoly({1, 0, -4, 0, 0}));
    const MixedGraph p4 = parse_graph("4 3\n0 1 F\n2 1 F\n2 3 U\n");
    CHECK(charpoly_subgraphs(p4) == CharPoly({1, 0, -3, 0, 1}));
    CHECK(charpoly_exact(t).machine_line() == "charpoly: 1 0 -3 1");
    CHECK(charpoly_exact(t).str() == "x^3 - 3*x + 1");
}

TEST_CASE("both routes agree with the Leibniz expansion") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 150; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const MixedGraph m = random_mixed_graph(n, 0.3 + 0.1 * (i % 6), rng);
        const CharPoly expected = from_oracle(oracle::leibniz_charpoly(m));
        CHECK(charpoly_exact(m) == expected);
        CHECK(charpoly_exact(build_nmatrix(m)) == expected);
        CHECK(charpoly_subgraphs(m) == expected);
        CHECK(charpoly_exact(m).c(1) == 0);
        CHECK(charpoly_exact(m).c(2) == -m.size());
    }
}

TEST_CASE("large coefficients leave the 64-bit path") {
    // K_{20,20}: the last coefficient is far beyond 64 bits on the way
    const MixedGraph k = complete_bipartite(20, 20);
    const CharPoly p = charpoly_exact(k);
    CHECK(p == CharPoly::x_power(38) * CharPoly({1, 0, -400}));
}

TEST_CASE("recurrences") {
    const MixedGraph t = parse_graph(kSemiNegativeTriangle);
    for (Vertex u = 0; u < 3; ++u) CHECK(vertex_recurrence_residual(t, u).is_zero());

    const MixedGraph c6 = build_family({Family::CycleKind, {6}, '='});
    for (Vertex u = 0; u < 6; ++u) CHECK(vertex_recurrence_residual(c6, u).is_zero());

    const MixedGraph c4 = build_family({Family::CycleKind, {4}, '+'});
    for (const auto& e : c4.edges()) CHECK(edge_recurrence_residual(c4, e.u, e.v).is_zero());

    const MixedGraph k2 = parse_graph("2 1\n0 1 U\n");
    CHECK(edge_recurrence_residual(k2, 0, 1).is_zero());
    CHECK(cut_edge_residual(k2, 0, 1).is_zero());

    // triangle with a pendant path: 2-3 and 3-4 are cut edges, 0-1 is not
    const MixedGraph tail = parse_graph("5 5\n0 1 F\n1 2 U\n0 2 U\n2 3 F\n3 4 U\n");
    CHECK(is_cut_edge(tail, 2, 3));
    CHECK(is_cut_edge(tail, 3, 4));
    CHECK_FALSE(is_cut_edge(tail, 0, 1));
    CHECK(cut_edge_residual(tail, 2, 3).is_zero());
    CHECK(vertex_recurrence_residual(tail, 4).is_zero());
    CHECK_THROWS_AS(cut_edge_residual(tail, 0, 1), UsageError);
}

TEST_CASE("complement") {
    const MixedGraph c = complement(MixedGraph(4));
    CHECK(c.size() == 6);
    for (const auto& e : c.edges()) CHECK(e.gain == T6Element::one());

    const MixedGraph arc = parse_graph("2 1\n0 1 F\n");
    CHECK(complement(arc) == parse_graph("2 1\n1 0 F\n"));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const MixedGraph m = random_mixed_graph(6, 0.5, rng);
        CHECK(complement(complement(m)) == m);
        CHECK(build_nmatrix(complement(m)) == complement_nmatrix(build_nmatrix(m)));
    }
}

TEST_CASE("numeric eigenvalues") {
    const Spectrum p3 = eigenvalues(parse_graph("3 2\n0 1 F\n1 2 U\n"));
    REQUIRE(p3.eigenvalues.size() == 3);
    CHECK(p3.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(p3.eigenvalues[1]) < 1e-12);
    CHECK(p3.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));

    CHECK(spectral_radius(eigenvalues(build_family({Family::CycleKind, {4}, '='}))) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(spectral_radius(eigenvalues(complete_bipartite(1, 3))) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    CHECK(spectral_radius(eigenvalues(complete_bipartite(1, 4))) == doctest::Approx(2.0).epsilon(1e-10));

    const auto roots = oracle::bisection_roots({1, -3, 0, 1}, -3, 3);
    REQUIRE(roots.size() == 3);
    CHECK(spectral_radius(eigenvalues(parse_graph(kSemiNegativeTriangle))) == doctest::Approx(-roots.front()).epsilon(1e-9));
    CHECK(-roots.front() == doctest::Approx(1.879).epsilon(1e-3));
}

TEST_CASE("eigenvalues are roots of the exact polynomial") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        const MixedGraph m = random_mixed_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
        const auto lam = eigenvalues(m).eigenvalues;
        const auto low = charpoly_exact(m).ascending();
        std::vector<double> asc;
        for (const auto& c : low) asc.push_back(c.get_d());
        double sum_sq = 0;
        for (double x : lam) {
            double v = 0;
            for (std::size_t k = asc.size(); k-- > 0;) v = v * x + asc[k];
            CHECK(std::fabs(v) < 1e-6 * std::pow(10.0, m.order() / 3));
            sum_sq += x * x;
        }
        CHECK(sum_sq == doctest::Approx(2.0 * m.size()).epsilon(1e-9));
    }
}

TEST_CASE("Sturm counting") {
    const CharPoly k2({1, 0, -1});
    CHECK(count_roots_in(k2, QuadraticSurd::integer(-2), QuadraticSurd::integer(2)) == 2);
    const CharPoly c4({1, 0, -4, 0, 0});
    // (-2, 2] keeps 2 and 0, drops -2
    CHECK(count_roots_in(c4, QuadraticSurd::integer(-2), QuadraticSurd::integer(2)) == 2);
    CHECK(count_roots_with_multiplicity(c4, QuadraticSurd::integer(-2), QuadraticSurd::integer(2)) == 3);
    CHECK(root_multiplicity_at(c4, QuadraticSurd::integer(0)) == 2);

    const CharPoly neg = charpoly_exact(build_family({Family::CycleKind, {4}, '='}));
    CHECK(neg == CharPoly({1, 0, -4, 0, 4}));
    const auto s3 = QuadraticSurd::sqrt_of(3);
    CHECK(count_roots_with_multiplicity(neg, -s3, s3) == 4);
    CHECK(count_roots_in(neg, -s3, s3) == 2);
    const auto s2 = QuadraticSurd::sqrt_of(2);
    CHECK(sign_at(neg, s2) == 0);
    CHECK(root_multiplicity_at(neg, s2) == 2);

    const auto parts = squarefree_decomposition(c4);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == CharPoly({1, 0, -4}));
    CHECK(parts[1] == CharPoly({1, 0}));

    CHECK(QuadraticSurd::sqrt_of(8).str() == "2*sqrt(2)");
    CHECK(QuadraticSurd::sqrt_of(4).is_rational());
    CHECK_THROWS_AS(count_roots_in(k2, QuadraticSurd::integer(1), QuadraticSurd::integer(1)), UsageError);
}

TEST_CASE("radius thresholds") {
    CHECK(radius_strictly_below(parse_graph("2 1\n0 1 U\n"), 2));
    CHECK_FALSE(radius_strictly_below(complete_bipartite(1, 3), 3));
    CHECK(radius_strictly_below(complete_bipartite(1, 3), 4));
    CHECK_FALSE(radius_strictly_below(build_family({Family::CycleKind, {7}, '0'}), 4));
    CHECK(radius_strictly_below(build_family({Family::CycleKind, {7}, '+'}), 4));
    CHECK_FALSE(radius_strictly_below(build_family({Family::CycleKind, {4}, '0'}), 4));
    CHECK(radius_strictly_below(parse_graph(kSemiNegativeTriangle), 4));
}

TEST_CASE("trace of the square") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) CHECK(trace_square_check(random_mixed_graph(1 + static_cast<int>(rng() % 8), 0.5, rng)));
    CHECK(trace_square_check(MixedGraph(4)));
    CHECK(charpoly_exact(parse_graph(kSemiNegativeTriangle)).c(2) == -3);
    CHECK(rank_from_charpoly(CharPoly({1, 0, -4, 0, 0})) == 2);
}

}  // TEST_SUITE
