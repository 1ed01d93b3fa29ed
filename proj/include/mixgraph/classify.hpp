#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixgraph/core.hpp"
#include "mixgraph/switching.hpp"

namespace mixgraph {

struct RankResult {
    int rank = 0;
    int nullity = 0;
};

/// Gaussian elimination over Q(w), cross-checked against the multiplicity of 0 in the
/// characteristic polynomial (std::logic_error on mismatch).
RankResult rank_exact(const MixedGraph& m);

/// nullity(M) == nullity(M - u - v) for a pendant edge uv.
bool pendant_reduction_check(const MixedGraph& m, Vertex u, Vertex v);

struct Rank2Shape {
    int a = 0;  // a <= b
    int b = 0;
    int t = 0;  // isolated vertices
    SwitchingWitness witness;  // switches M to its all-undirected version
};

/// Structural recognition of "switching equivalent to K_{a,b} plus t isolated vertices":
/// one nontrivial component, complete bipartite, every cycle weight 1.
std::optional<Rank2Shape> rank2_recognize(const MixedGraph& m);

/// Structural recognition for connected graphs: the twin reduction is a triangle ("triangle")
/// or a K4 whose spanning quadrangles are two positive and one semi-negative ("K4-ef").
std::optional<std::string> rank3_recognize(const MixedGraph& m);

enum class ExtremalMode { PositiveCase, NegativeCase };

/// Labels per vertex; mode (i) puts arcs u->v between V_j and V_{conj(w) j}, mode (ii)
/// requires undirected edges between V_j and V_{-j} and arcs from V_j to V_{-conj(w) j}.
struct ExtremalPartition {
    ExtremalMode mode = ExtremalMode::PositiveCase;
    std::vector<T6Element> label;

    bool verify(const MixedGraph& m) const;
    /// "extremal: mode=i parts=w^0:0,1 w^5:2"
    std::string str() const;
};

struct DeltaBoundReport {
    bool bound_holds = false;
    bool radius_equals_delta = false;
    std::optional<ExtremalPartition> extremal;
};

/// Exact check of rho <= Delta; for connected graphs also searches the extremal partition
/// by propagation from vertex 0.
DeltaBoundReport delta_bound_report(const MixedGraph& m);

/// The partition search alone (connected graphs only).
std::optional<ExtremalPartition> find_extremal_partition(const MixedGraph& m);

}  // namespace mixgraph
