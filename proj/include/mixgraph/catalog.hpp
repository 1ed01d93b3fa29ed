#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixgraph/core.hpp"

namespace mixgraph {

enum class Family { Path, YTree, CycleKind, Box };

/// Path: {n}. YTree: {a, b, c}. CycleKind: {n} with kind in {'0', '+', '-', '='}. Box: {a, b, c, d}.
struct FamilyParams {
    Family family = Family::Path;
    std::vector<int> params;
    char kind = '0';
};

/// P_n, Y_{a,b,c}, C_n / C_n^+ / C_n^- / C_n^=, or the box graph (negative quadrangle
/// 0-1-2-3 with undirected paths of lengths a, b, c, d hung on vertices 0, 1, 2, 3).
MixedGraph build_family(const FamilyParams& p);

/// Catalog tag of a family member: "P5", "Y_{2,1,1}", "C6=", "Box_{2,0,1,0}".
std::string family_tag(const FamilyParams& p);

struct CatalogEntry {
    std::string tag;
    MixedGraph graph;
};

/// Named graphs reconstructed from their descriptions: the connected graphs with
/// spectral radius below 2 that are not in an infinite family, plus the reference
/// graphs Z1, Z2, Q7, Q8, Q9 whose radii exceed 2.
const std::vector<CatalogEntry>& sporadic_graphs();
const MixedGraph& sporadic(const std::string& tag);

/// Connected catalog members of the given order for threshold alpha2 in {2, 3, 4}.
std::vector<CatalogEntry> catalog_members(int alpha2, int order);

struct RadiusClass {
    int alpha2 = 4;
    bool below = false;
    /// Catalog tag; components of a disconnected graph are joined with '|'.
    std::optional<std::string> tag;

    /// "radius<2: yes tag=Box_{2,1,0,0}"
    std::string str() const;
};

/// Exact verdict plus catalog identification (isomorphism followed by switching).
/// Throws std::logic_error if a "below" graph matches no catalog member.
RadiusClass small_radius_classify(const MixedGraph& m, int alpha2);

/// Catalog tag of a connected graph, or nullopt.
std::optional<std::string> catalog_match(const MixedGraph& m, int alpha2);

/// Characteristic polynomial (x^2 - 1)^(n/2); asserts agreement with the underlying graph
/// being a perfect matching.
bool pm_one_spectrum_recognize(const MixedGraph& m);

}  // namespace mixgraph
