#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixgraph/core.hpp"

namespace mixgraph {

/// theta : V -> T6, acting by gain'(u,v) = conj(theta(u)) * gain(u,v) * theta(v).
struct SwitchingFunction {
    std::vector<T6Element> theta;
};

/// Raised when a switching precondition fails; the message names the offending edge.
class SwitchingError : public UsageError {
public:
    SwitchingError(const std::string& what, Edge edge) : UsageError(what), edge_(edge) {}
    const Edge& edge() const noexcept { return edge_; }

private:
    Edge edge_;
};

struct SwitchOutcome {
    std::optional<MixedGraph> graph;
    /// First edge whose new gain is -1, -w or -conj(w); gain holds that new value.
    std::optional<Edge> violation;

    bool ok() const { return graph.has_value(); }
};

SwitchOutcome apply_switching(const MixedGraph& m, const SwitchingFunction& theta);

/// in_w[v] marks W. Arcs W->U become undirected, undirected W-U edges become arcs U->W.
/// Throws SwitchingError on an arc from U into W.
MixedGraph two_way_switch(const MixedGraph& m, const std::vector<bool>& in_w);

/// Vertex v belongs to the part labelled label[v].
struct AdmissiblePartition {
    std::vector<T6Element> label;
};

bool is_admissible(const MixedGraph& m, const AdmissiblePartition& p);

/// Applies the replacement rules: undirected (j, wj) -> arc, arc (j, conj(w)j) -> undirected,
/// arc (j, -wj) -> reversed arc. Throws SwitchingError naming the first inadmissible edge.
MixedGraph three_way_switch(const MixedGraph& m, const AdmissiblePartition& p);

struct SwitchingWitness {
    SwitchingFunction theta;
    bool converse = false;
};

struct EquivalenceVerdict {
    bool equivalent = false;
    /// "equivalent", "underlying-mismatch" or "cycle-weights-differ".
    std::string reason;
    std::optional<SwitchingWitness> witness;
};

/// Same vertex labelling; allows one converse.
EquivalenceVerdict switching_equivalent(const MixedGraph& m1, const MixedGraph& m2);

/// Replays a witness: apply_switching(converse?(m1), theta).
std::optional<MixedGraph> replay_witness(const MixedGraph& m1, const SwitchingWitness& w);

/// "theta: v0=w^0 v1=w^5 converse=false"
std::string render_witness(const SwitchingWitness& w);

/// Invariant of the switching+converse class among graphs with the same underlying graph.
/// Tree edges of the BFS forest are normalised to 1; the key lists the remaining gains,
/// minimised against their conjugates.
std::vector<std::uint8_t> switching_class_key(const MixedGraph& m);

struct IsoSwitchWitness {
    std::vector<Vertex> perm;  // vertex v of m1 maps to perm[v] of m2
    SwitchingWitness switching;  // acts on m1.relabelled(perm)
};

/// Isomorphism followed by switching (and optional converse).
std::optional<IsoSwitchWitness> find_switching_isomorphism(const MixedGraph& m1, const MixedGraph& m2);

struct TwinPair {
    Vertex u = 0;
    Vertex v = 0;
    T6Element s;  // row(u) = s * row(v)

    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

std::vector<TwinPair> twin_pairs(const MixedGraph& m);

struct TwinReduction {
    std::vector<Vertex> representative;  // original vertex -> kept original vertex
    std::vector<Vertex> kept;            // original indices of the reduced graph's vertices
    MixedGraph reduced;
};

/// Removes the second vertex of the lexicographically first twin pair until none remain.
TwinReduction twin_reduction(const MixedGraph& m);

struct UnderlyingVerdict {
    bool cospectral = false;
    std::optional<SwitchingWitness> witness;
};

/// Whether M is switching equivalent to its all-undirected underlying graph. Requires a connected graph.
UnderlyingVerdict underlying_cospectral(const MixedGraph& m);

/// Searches theta making every gain a mixed-graph entry; edges may carry any sixth root.
std::optional<MixedGraph> realize_gain_graph(int n, const std::vector<Edge>& gains);

}  // namespace mixgraph
