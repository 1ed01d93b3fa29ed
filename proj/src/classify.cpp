#include "mixgraph/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mixgraph/cycles.hpp"
#include "mixgraph/nmatrix.hpp"

namespace mixgraph {

namespace {

int elimination_rank(const MixedGraph& m) {
    const int n = m.order();
    NMatrix a = build_nmatrix(m);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
        const EisensteinNumber inv = a.at(rank, col).inverse();
        for (int r = rank + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            const EisensteinNumber f = a.at(r, col) * inv;
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

RankResult rank_exact(const MixedGraph& m) {
    const int rank = elimination_rank(m);
    if (rank != rank_from_charpoly(charpoly_exact(m)))
        throw std::logic_error("elimination rank disagrees with the characteristic polynomial");
    return {rank, m.order() - rank};
}

bool pendant_reduction_check(const MixedGraph& m, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= m.order() || v >= m.order() || !m.adjacent(u, v))
        throw UsageError("not an edge");
    if (m.degree(u) != 1 && m.degree(v) != 1) throw UsageError("edge is not pendant");
    return rank_exact(m).nullity == rank_exact(m.without_vertices({u, v})).nullity;
}

std::optional<Rank2Shape> rank2_recognize(const MixedGraph& m) {
    const int n = m.order();
    const auto ids = m.underlying().component_ids();
    int nontrivial = -1;
    int isolated = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (m.degree(v) == 0) {
            ++isolated;
            continue;
        }
        if (nontrivial < 0) nontrivial = ids[v];
        else if (ids[v] != nontrivial) return std::nullopt;
    }
    if (nontrivial < 0) return std::nullopt;

    // 2-colour the component and demand every cross pair adjacent
    std::vector<int> side(n, -1);
    std::vector<Vertex> comp;
    for (Vertex v = 0; v < n; ++v)
        if (m.degree(v) > 0) comp.push_back(v);
    side[comp.front()] = 0;
    std::vector<Vertex> queue{comp.front()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : m.neighbors(x)) {
            if (side[y] < 0) {
                side[y] = 1 - side[x];
                queue.push_back(y);
            } else if (side[y] == side[x]) {
                return std::nullopt;
            }
        }
    }
    int a = 0, b = 0;
    for (Vertex v : comp) (side[v] == 0 ? a : b)++;
    if (m.size() != a * b) return std::nullopt;

    auto verdict = switching_equivalent(m, m.undirected());
    if (!verdict.equivalent) return std::nullopt;
    if (a > b) std::swap(a, b);
    return Rank2Shape{a, b, isolated, *verdict.witness};
}

std::optional<std::string> rank3_recognize(const MixedGraph& m) {
    if (!m.underlying().connected()) throw UsageError("rank3_recognize expects a connected graph");
    const MixedGraph t = twin_reduction(m).reduced;
    if (t.order() == 3 && t.size() == 3) return std::string("triangle");
    if (t.order() == 4 && t.size() == 6) {
        int positive = 0, semi_negative = 0;
        for (const auto& c : enumerate_cycles(t.underlying(), 4)) {
            if (c.length() != 4) continue;
            const CycleClass k = classify_cycle(cycle_weight(t, c));
            if (k == CycleClass::Positive) ++positive;
            if (k == CycleClass::SemiNegative) ++semi_negative;
        }
        if (positive == 2 && semi_negative == 1) return std::string("K4-ef");
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

bool ExtremalPartition::verify(const MixedGraph& m) const {
    if (static_cast<int>(label.size()) != m.order()) return false;
    const T6Element sign = mode == ExtremalMode::PositiveCase ? T6Element::one() : T6Element::minus_one();
    for (const auto& e : m.edges()) {
        // label(v) = +-conj(N_uv) label(u) covers both the undirected and the arc rules
        if (label[e.v] != sign * e.gain.conj() * label[e.u]) return false;
    }
    return true;
}

std::string ExtremalPartition::str() const {
    std::map<int, std::vector<Vertex>> parts;
    for (Vertex v = 0; v < static_cast<Vertex>(label.size()); ++v) parts[label[v].exponent()].push_back(v);
    std::ostringstream out;
    out << "extremal: mode=" << (mode == ExtremalMode::PositiveCase ? "i" : "ii") << " parts=";
    bool first = true;
    for (const auto& [e, vs] : parts) {
        if (!first) out << ' ';
        first = false;
        out << T6Element(e).str() << ':';
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    }
    return out.str();
}

std::optional<ExtremalPartition> find_extremal_partition(const MixedGraph& m) {
    const int n = m.order();
    if (!m.underlying().connected()) throw UsageError("extremal partitions are defined for connected graphs");
    if (n == 0) return std::nullopt;
    const int delta = m.underlying().max_degree();
    for (Vertex v = 0; v < n; ++v)
        if (m.degree(v) != delta) return std::nullopt;
    for (ExtremalMode mode : {ExtremalMode::PositiveCase, ExtremalMode::NegativeCase}) {
        const T6Element sign = mode == ExtremalMode::PositiveCase ? T6Element::one() : T6Element::minus_one();
        // labels are forced along any spanning tree once vertex 0 is fixed
        ExtremalPartition p{mode, std::vector<T6Element>(n)};
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : m.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = 1;
                p.label[y] = sign * m.gain(x, y)->conj() * p.label[x];
                queue.push_back(y);
            }
        }
        if (p.verify(m)) return p;
    }
    return std::nullopt;
}

DeltaBoundReport delta_bound_report(const MixedGraph& m) {
    DeltaBoundReport r;
    const CharPoly p = charpoly_exact(m);
    const int delta = m.underlying().max_degree();
    const QuadraticSurd hi = QuadraticSurd::integer(delta);
    const QuadraticSurd lo = QuadraticSurd::integer(-delta);
    if (m.order() == 0) {
        r.bound_holds = true;
        return r;
    }
    if (delta == 0) {
        r.bound_holds = true;
        r.radius_equals_delta = true;
    } else {
        const int at_lo = root_multiplicity_at(p, lo);
        const int inside = count_roots_with_multiplicity(p, lo, hi);  // (lo, hi]
        r.bound_holds = at_lo + inside == p.degree();
        r.radius_equals_delta = at_lo > 0 || sign_at(p, hi) == 0;
    }
    if (m.underlying().connected()) r.extremal = find_extremal_partition(m);
    return r;
}

}  // namespace mixgraph
