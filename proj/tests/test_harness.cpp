#include <doctest.h>

#include <random>

#include "mixgraph/catalog.hpp"
#include "mixgraph/harness.hpp"
#include "mixgraph/nmatrix.hpp"
#include "mixgraph/switching.hpp"
#include "oracles.hpp"

using namespace mixgraph;

namespace {

// number of classes under the brute-force relation
int brute_classes(const std::vector<MixedGraph>& all) {
    std::vector<MixedGraph> reps;
    for (const auto& m : all) {
        bool found = false;
        for (const auto& r : reps)
            if (oracle::brute_switching_equivalent(r, m)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(m);
    }
    return static_cast<int>(reps.size());
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("graph counts") {
    const int all[] = {1, 1, 2, 4, 11, 34, 156};
    const int connected[] = {1, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(all_graphs(n).size()) == all[n]);
        CHECK(static_cast<int>(connected_graphs(n).size()) == connected[n]);
    }
    CHECK_THROWS_AS(all_graphs(8), UsageError);
}

TEST_CASE("orientation enumeration") {
    const SimpleGraph k2(2, {{0, 1}});
    const auto o = enumerate_orientations(k2);
    REQUIRE(o.size() == 3);
    CHECK(o[0] == parse_graph("2 1\n0 1 U\n"));
    CHECK(o[1] == parse_graph("2 1\n0 1 F\n"));
    CHECK(o[2] == parse_graph("2 1\n1 0 F\n"));

    const SimpleGraph c3(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto all3 = enumerate_orientations(c3);
    CHECK(all3.size() == 27);
    CHECK(brute_classes(all3) == 4);
    CHECK(enumerate_orientations(c3, Dedupe::Switching).size() == 4);

    const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto all4 = enumerate_orientations(c4);
    CHECK(all4.size() == 81);
    CHECK(brute_classes(all4) == 4);
    CHECK(enumerate_orientations(c4, Dedupe::Switching).size() == 4);

    std::vector<std::pair<Vertex, Vertex>> many;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) many.emplace_back(u, v);
    CHECK_THROWS_AS(for_each_orientation(SimpleGraph(7, many), [](const MixedGraph&) {}), UsageError);
}

TEST_CASE("switching dedupe matches the brute-force relation") {
    for (const auto& g : connected_graphs(5)) {
        if (g.size() > 5) continue;
        CHECK(static_cast<int>(enumerate_orientations(g, Dedupe::Switching).size()) ==
              brute_classes(enumerate_orientations(g)));
    }
}

TEST_CASE("cospectral grouping") {
    const MixedGraph a = complete_bipartite(4, 9);
    const MixedGraph b = complete_bipartite(6, 6, 1);
    const auto r = find_cospectral({a, b});
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes.front().subclasses.size() == 2);
    CHECK(r.witnesses().size() == 1);

    const SimpleGraph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    const auto t = find_cospectral(enumerate_orientations(tree));
    REQUIRE(t.classes.size() == 1);
    CHECK(t.classes.front().members.size() == 81);
    CHECK(t.classes.front().subclasses.size() == 1);

    const auto c = find_cospectral({build_family({Family::CycleKind, {4}, '0'}), build_family({Family::CycleKind, {4}, '='})});
    CHECK(c.classes.size() == 2);
}

TEST_CASE("suites") {
    SweepSpec spec;
    spec.n_max = 12;
    CHECK(verify_suite("nullity-cycles", spec).passed);
    spec.n_max = 4;
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        const SuiteReport r = verify_suite(name, spec);
        CHECK(r.passed);
        CHECK(r.checked > 0);
    }
    // n <= 5 has no graph outside the catalog
    spec.n_max = 5;
    CHECK(verify_suite("radius-catalogs", spec).passed);
    CHECK_THROWS_AS(verify_suite("no-such-suite", spec), UsageError);
}

TEST_CASE("suite reports are deterministic") {
    SweepSpec spec;
    spec.n_max = 4;
    CHECK(verify_suite("recurrences", spec).str() == verify_suite("recurrences", spec).str());
    CHECK(verify_suite("interlacing", spec).str() == verify_suite("interlacing", spec).str());
    const auto s = verify_suite("nullity-cycles", spec).str();
    CHECK(s.rfind("suite: nullity-cycles result=PASS checked=", 0) == 0);
}

TEST_CASE("report carries the counterexample") {
    SuiteReport r{"demo"};
    r.fail("first", parse_graph("2 1\n0 1 F\n"));
    r.fail("second", MixedGraph(1));
    CHECK_FALSE(r.passed);
    CHECK(r.failure == "first");
    CHECK(r.str() == "suite: demo result=FAIL checked=0\nfailure: first\ncounterexample:\n2 1\n0 1 F\n");
}

TEST_CASE("explicit inputs") {
    SweepSpec spec;
    spec.graphs = {build_family({Family::CycleKind, {5}, '-'}), sporadic("Q10=")};
    CHECK(suite_charpoly_dual(spec).checked == 2);
    CHECK(suite_delta_bound(spec).passed);
}

TEST_CASE("random generators") {
    std::mt19937_64 a(1), b(1);
    CHECK(random_mixed_graph(8, 0.5, a) == random_mixed_graph(8, 0.5, b));
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 9; ++n) {
        const MixedGraph t = random_mixed_tree(n, rng);
        CHECK(t.size() == n - 1);
        CHECK(t.underlying().connected());
    }
}

}  // TEST_SUITE
