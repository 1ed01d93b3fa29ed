#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mixgraph/core.hpp"

namespace mixgraph {

/// Cycle as a vertex sequence: smallest vertex first, then its smaller cycle neighbour.
struct CycleDescriptor {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const CycleDescriptor&, const CycleDescriptor&) = default;
    friend auto operator<=>(const CycleDescriptor& a, const CycleDescriptor& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() <=> b.vertices.size();
        return a.vertices <=> b.vertices;
    }
};

/// Rotates and reflects an arbitrary cyclic sequence into canonical form.
CycleDescriptor canonical_cycle(std::vector<Vertex> sequence);

/// Every cycle of length 3..max_len exactly once (max_len < 0 means n).
std::vector<CycleDescriptor> enumerate_cycles(const SimpleGraph& g, int max_len = -1);

/// Cycles through the given vertex / edge.
std::vector<CycleDescriptor> cycles_through_vertex(const SimpleGraph& g, Vertex u);
std::vector<CycleDescriptor> cycles_through_edge(const SimpleGraph& g, Vertex u, Vertex v);

/// Product of N-matrix entries along the stored order (closing pair included).
T6Element cycle_weight(const MixedGraph& m, const CycleDescriptor& c);

enum class CycleClass { Positive, Negative, SemiPositive, SemiNegative };

CycleClass classify_cycle(T6Element w);
std::string_view to_string(CycleClass c);

bool is_chordless(const SimpleGraph& g, const CycleDescriptor& c);
std::vector<CycleDescriptor> chordless_cycles(const SimpleGraph& g);

struct RealWeightVerdict {
    bool cospectral = false;
    /// "ok", "underlying-mismatch" or "weight-mismatch".
    std::string reason;
};

/// Sufficient test: identical underlying graphs and equal real parts of every cycle weight.
/// A positive verdict is cross-checked against the exact characteristic polynomials.
RealWeightVerdict cospectral_by_real_weights(const MixedGraph& m1, const MixedGraph& m2);

/// "cycle: 0 1 2 class=SemiNegative weight=w^2"
std::string cycle_report_line(const MixedGraph& m, const CycleDescriptor& c);

}  // namespace mixgraph
