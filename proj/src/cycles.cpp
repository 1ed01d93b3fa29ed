#include "mixgraph/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mixgraph/nmatrix.hpp"

namespace mixgraph {

CycleDescriptor canonical_cycle(std::vector<Vertex> seq) {
    if (seq.size() < 3) throw UsageError("a cycle needs at least three vertices");
    const auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
    return {std::move(seq)};
}

namespace {

// Cycles whose minimum vertex is `start`, closed in the direction with the smaller second vertex.
void grow(const SimpleGraph& g, Vertex start, int max_len, std::vector<Vertex>& path, std::vector<char>& on_path,
          std::vector<CycleDescriptor>& out) {
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
        if (w == start) {
            if (path.size() >= 3 && path[1] < tail) out.push_back({path});
            continue;
        }
        if (w < start || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
        on_path[w] = 1;
        path.push_back(w);
        grow(g, start, max_len, path, on_path, out);
        path.pop_back();
        on_path[w] = 0;
    }
}

}  // namespace

std::vector<CycleDescriptor> enumerate_cycles(const SimpleGraph& g, int max_len) {
    const int n = g.order();
    if (max_len < 0) max_len = n;
    if (max_len > n) throw UsageError("max_len exceeds the order");
    std::vector<CycleDescriptor> out;
    std::vector<char> on_path(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> path{s};
        on_path[s] = 1;
        grow(g, s, max_len, path, on_path, out);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycleDescriptor> cycles_through_vertex(const SimpleGraph& g, Vertex u) {
    std::vector<CycleDescriptor> out;
    for (auto& c : enumerate_cycles(g))
        if (std::find(c.vertices.begin(), c.vertices.end(), u) != c.vertices.end()) out.push_back(std::move(c));
    return out;
}

std::vector<CycleDescriptor> cycles_through_edge(const SimpleGraph& g, Vertex u, Vertex v) {
    std::vector<CycleDescriptor> out;
    for (auto& c : enumerate_cycles(g)) {
        const auto& vs = c.vertices;
        const std::size_t k = vs.size();
        bool hit = false;
        for (std::size_t i = 0; i < k && !hit; ++i) {
            const Vertex x = vs[i], y = vs[(i + 1) % k];
            hit = (x == u && y == v) || (x == v && y == u);
        }
        if (hit) out.push_back(std::move(c));
    }
    return out;
}

T6Element cycle_weight(const MixedGraph& m, const CycleDescriptor& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) throw UsageError("a cycle needs at least three vertices");
    int e = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vertex x = vs[i], y = vs[(i + 1) % vs.size()];
        if (x < 0 || y < 0 || x >= m.order() || y >= m.order() || !m.adjacent(x, y))
            throw UsageError("descriptor is not a cycle of the graph");
        e += m.gain_exponent(x, y);
    }
    return T6Element(e);
}

CycleClass classify_cycle(T6Element w) {
    switch (w.exponent()) {
        case 0: return CycleClass::Positive;
        case 3: return CycleClass::Negative;
        case 1:
        case 5: return CycleClass::SemiPositive;
        default: return CycleClass::SemiNegative;
    }
}

std::string_view to_string(CycleClass c) {
    switch (c) {
        case CycleClass::Positive: return "Positive";
        case CycleClass::Negative: return "Negative";
        case CycleClass::SemiPositive: return "SemiPositive";
        case CycleClass::SemiNegative: return "SemiNegative";
    }
    return "?";
}

bool is_chordless(const SimpleGraph& g, const CycleDescriptor& c) {
    const auto& vs = c.vertices;
    const std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(vs[i], vs[j])) return false;
        }
    return true;
}

std::vector<CycleDescriptor> chordless_cycles(const SimpleGraph& g) {
    std::vector<CycleDescriptor> out;
    for (auto& c : enumerate_cycles(g))
        if (is_chordless(g, c)) out.push_back(std::move(c));
    return out;
}

RealWeightVerdict cospectral_by_real_weights(const MixedGraph& m1, const MixedGraph& m2) {
    if (!(m1.underlying() == m2.underlying())) return {false, "underlying-mismatch"};
    for (const auto& c : enumerate_cycles(m1.underlying()))
        if (cycle_weight(m1, c).twice_real() != cycle_weight(m2, c).twice_real()) return {false, "weight-mismatch"};
    if (!(charpoly_exact(m1) == charpoly_exact(m2)))
        throw std::logic_error("equal real cycle weights but different characteristic polynomials");
    return {true, "ok"};
}

std::string cycle_report_line(const MixedGraph& m, const CycleDescriptor& c) {
    std::ostringstream out;
    out << "cycle:";
    for (Vertex v : c.vertices) out << ' ' << v;
    const T6Element w = cycle_weight(m, c);
    out << " class=" << to_string(classify_cycle(w)) << " weight=" << w.str();
    return out.str();
}

}  // namespace mixgraph
