#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixgraph/core.hpp"
#include "mixgraph/poly.hpp"

namespace mixgraph {

/// Non-isomorphic graphs of order n (n <= 7), in a fixed deterministic order.
const std::vector<SimpleGraph>& all_graphs(int n);
std::vector<SimpleGraph> connected_graphs(int n);

inline constexpr int kMaxOrientationEdges = 20;

/// Gain exponents {0, 1, 5} in lexicographic order over the sorted edge list (first edge most significant).
void for_each_orientation(const SimpleGraph& g, const std::function<void(const MixedGraph&)>& visit);

enum class Dedupe { None, Switching };

std::vector<MixedGraph> enumerate_orientations(const SimpleGraph& g, Dedupe dedupe = Dedupe::None);

struct CospectralReport {
    struct Class {
        CharPoly poly;
        std::vector<int> members;                  // indices into the input
        std::vector<std::vector<int>> subclasses;  // isomorphism + switching classes
    };
    std::vector<Class> classes;

    /// Classes with more than one subclass.
    std::vector<const Class*> witnesses() const;
    std::string str() const;
};

/// Groups by exact characteristic polynomial, then by isomorphism followed by switching.
CospectralReport find_cospectral(const std::vector<MixedGraph>& graphs);

struct SweepSpec {
    int n_max = 5;
    /// 0 runs every threshold; otherwise 2, 3 or 4.
    int alpha2 = 0;
    /// Random instances per underlying graph for the sampled suites.
    int samples = 3;
    std::uint64_t seed = 20240611;
    /// When nonempty, suites that accept explicit inputs use these graphs instead of the sweep.
    std::vector<MixedGraph> graphs;
};

struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string name) : suite(std::move(name)) {}

    std::string suite;
    bool passed = true;
    long long checked = 0;
    std::vector<std::string> notes;
    std::string failure;
    std::optional<MixedGraph> counterexample;

    void fail(const std::string& why, const MixedGraph& m);
    /// "suite: NAME result=PASS checked=N", notes, then the counterexample in graph format.
    std::string str() const;
};

const std::vector<std::string>& suite_names();
SuiteReport verify_suite(const std::string& name, const SweepSpec& spec);

// Individual suites, also used by the acceptance binary.
SuiteReport suite_charpoly_dual(const SweepSpec& spec);
SuiteReport suite_recurrences(const SweepSpec& spec);
SuiteReport suite_switching_invariance(const SweepSpec& spec);
SuiteReport suite_interlacing(const SweepSpec& spec);
SuiteReport suite_delta_bound(const SweepSpec& spec);
SuiteReport suite_rank_table(const SweepSpec& spec);
SuiteReport suite_nullity_cycles(const SweepSpec& spec);
SuiteReport suite_radius_catalogs(const SweepSpec& spec);
SuiteReport suite_cospectral_families(const SweepSpec& spec);

/// Parts of the above that acceptance criteria cite separately.
SuiteReport check_tree_nullity(int n_max, int samples, std::uint64_t seed);
SuiteReport check_rank_classifiers(int n_max);
SuiteReport check_catalog_forward(int max_order);
/// Catalog membership both ways over the connected class sweep, plus check_catalog_forward(10).
SuiteReport check_radius_catalogs(const SweepSpec& spec);
/// Spectrum (x^2 - 1)^(n/2) iff perfect matching, over every graph of order <= n_max.
SuiteReport check_pm_one_spectrum(int n_max);

/// Matching number of a forest.
int forest_matching_number(const SimpleGraph& g);

/// Random mixed graph: each pair an edge with probability p, gains uniform in {1, w, conj(w)}.
MixedGraph random_mixed_graph(int n, double p, std::mt19937_64& rng);
/// Random labelled tree (Pruefer sequence) with random gains.
MixedGraph random_mixed_tree(int n, std::mt19937_64& rng);

/// K_{a,b} plus t isolated vertices, all undirected.
MixedGraph complete_bipartite(int a, int b, int t = 0);

}  // namespace mixgraph
