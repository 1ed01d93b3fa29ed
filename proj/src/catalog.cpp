#include "mixgraph/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "mixgraph/nmatrix.hpp"
#include "mixgraph/switching.hpp"

namespace mixgraph {

namespace {

class GainBuilder {
public:
    explicit GainBuilder(int n) : n_(n) {}

    GainBuilder& edge(Vertex u, Vertex v, int exponent = 0) {
        edges_.push_back({u, v, T6Element(exponent)});
        return *this;
    }
    GainBuilder& cycle(const std::vector<Vertex>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) edge(vs[i], vs[(i + 1) % vs.size()]);
        return *this;
    }
    /// Undirected path of `length` new vertices hung on `at`.
    GainBuilder& hang(Vertex at, int length) {
        Vertex prev = at;
        for (int i = 0; i < length; ++i) {
            edge(prev, n_);
            prev = n_++;
        }
        return *this;
    }
    /// Multiplies the gain of an existing edge (u, v) by w^exponent.
    GainBuilder& twist(Vertex u, Vertex v, int exponent) {
        for (auto& e : edges_) {
            if (e.u == u && e.v == v) e.gain = e.gain * T6Element(exponent);
            else if (e.u == v && e.v == u) e.gain = e.gain * T6Element(-exponent);
            else continue;
            return *this;
        }
        throw std::logic_error("twist on a missing edge");
    }

    MixedGraph realize() const {
        auto m = realize_gain_graph(n_, edges_);
        if (!m) throw std::logic_error("gain graph is not switching equivalent to a mixed graph");
        return *m;
    }

private:
    int n_;
    std::vector<Edge> edges_;
};

// 2 x 3 grid: top 0 1 2, bottom 3 4 5; squares 0-1-4-3 and 1-2-5-4.
GainBuilder domino(int left_twist, int right_twist) {
    GainBuilder b(6);
    b.edge(0, 1).edge(1, 2).edge(3, 4).edge(4, 5).edge(0, 3).edge(1, 4).edge(2, 5);
    b.twist(0, 3, left_twist).twist(2, 5, right_twist);
    return b;
}

// Cube on 0..7 (bit labels) with vertex 7 removed; the three faces through 0 made negative.
GainBuilder cube_minus_vertex() {
    GainBuilder b(7);
    for (Vertex u = 0; u < 7; ++u)
        for (int bit = 1; bit < 8; bit <<= 1) {
            const Vertex v = u ^ bit;
            if (u < v && v < 7) b.edge(u, v);
        }
    b.twist(1, 3, 3).twist(1, 5, 3).twist(2, 6, 3);
    return b;
}

GainBuilder k23_semi_negative() {
    GainBuilder b(5);
    for (Vertex u : {0, 1})
        for (Vertex v : {2, 3, 4}) b.edge(u, v);
    b.twist(1, 3, 2).twist(1, 4, 4);
    return b;
}

GainBuilder k4(int e12, int e13, int e23) {
    GainBuilder b(4);
    b.edge(0, 1).edge(0, 2).edge(0, 3).edge(1, 2, e12).edge(1, 3, e13).edge(2, 3, e23);
    return b;
}

std::vector<CatalogEntry> build_sporadics() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string tag, const GainBuilder& b) { out.push_back({std::move(tag), b.realize()}); };

    add("Q1-", GainBuilder(4).cycle({0, 1, 2, 3}).twist(0, 1, 2).hang(0, 1));
    add("Q7-", GainBuilder(4).cycle({0, 1, 2, 3}).twist(0, 1, 2).hang(0, 2));
    add("Q5-", domino(2, 3));
    add("Q15-", k23_semi_negative());
    add("Q17-", k23_semi_negative().hang(2, 1));
    add("Q1=", domino(3, 3));
    add("Q4=", domino(3, 3).hang(0, 1));
    add("Q5=", cube_minus_vertex());
    add("Q6=", cube_minus_vertex().hang(3, 1));
    add("Q8=", domino(3, 3).hang(0, 1).hang(5, 1));
    add("Q9=", domino(3, 3).hang(0, 2));
    {
        // 2 x 4 ladder, top 0..3 over bottom 4..7; each top edge closes one negative square
        GainBuilder ladder(8);
        for (Vertex i = 0; i < 3; ++i) ladder.edge(i, i + 1, 3).edge(i + 4, i + 5);
        for (Vertex i = 0; i < 4; ++i) ladder.edge(i, i + 4);
        add("Q10=", ladder);
    }
    {
        // quadrangle 0-1-2-3 and hexagon 0-1-4-5-6-7 sharing the edge 0-1
        GainBuilder b(8);
        b.cycle({0, 1, 2, 3}).edge(1, 4).edge(4, 5).edge(5, 6).edge(6, 7).edge(7, 0);
        b.twist(2, 3, 3).twist(5, 6, 3);
        add("Q11=", b);
    }
    add("H1", GainBuilder(6).cycle({0, 1, 2, 3, 4, 5}).twist(0, 1, 3).hang(0, 1));
    add("H2", GainBuilder(6).cycle({0, 1, 2, 3, 4, 5}).twist(0, 1, 3).hang(0, 1).hang(3, 1));

    // reference graphs with radius above 2
    add("Z1", GainBuilder(3).cycle({0, 1, 2}).twist(0, 1, 1).hang(0, 1));
    add("Z2", GainBuilder(3).cycle({0, 1, 2}).twist(0, 1, 2).hang(0, 1));
    add("Q7", k4(1, 1, 1));
    add("Q8", k4(1, 2, 2));
    add("Q9", k4(2, 2, 2));
    return out;
}

bool is_reference_only(const std::string& tag) {
    return tag == "Z1" || tag == "Z2" || tag == "Q7" || tag == "Q8" || tag == "Q9";
}

}  // namespace

MixedGraph build_family(const FamilyParams& p) {
    const auto& q = p.params;
    auto need = [&](std::size_t k) {
        if (q.size() != k) throw UsageError("wrong number of family parameters");
    };
    switch (p.family) {
        case Family::Path: {
            need(1);
            if (q[0] < 1) throw UsageError("path order must be positive");
            GainBuilder b(1);
            b.hang(0, q[0] - 1);
            return b.realize();
        }
        case Family::YTree: {
            need(3);
            if (q[0] < 1 || q[1] < 1 || q[2] < 1) throw UsageError("Y-tree arms must be positive");
            GainBuilder b(1);
            b.hang(0, q[0]).hang(0, q[1]).hang(0, q[2]);
            return b.realize();
        }
        case Family::CycleKind: {
            need(1);
            const int n = q[0];
            if (n < 3) throw UsageError("cycle order must be at least 3");
            int arcs = 0;
            switch (p.kind) {
                case '0': arcs = 0; break;
                case '+': arcs = 1; break;
                case '-': arcs = 2; break;
                case '=': arcs = 3; break;
                default: throw UsageError("cycle kind must be one of 0 + - =");
            }
            std::vector<Edge> edges;
            for (Vertex i = 0; i < n; ++i)
                edges.push_back({i, (i + 1) % n, i < arcs ? T6Element::omega() : T6Element::one()});
            return MixedGraph(n, std::move(edges));
        }
        case Family::Box: {
            need(4);
            for (int x : q)
                if (x < 0) throw UsageError("box path lengths must be nonnegative");
            std::vector<Edge> edges{{0, 1, T6Element::omega()},
                                    {1, 2, T6Element::omega()},
                                    {2, 3, T6Element::omega()},
                                    {3, 0, T6Element::one()}};
            int n = 4;
            for (Vertex at = 0; at < 4; ++at) {
                Vertex prev = at;
                for (int i = 0; i < q[at]; ++i) {
                    edges.push_back({prev, n, T6Element::one()});
                    prev = n++;
                }
            }
            return MixedGraph(n, std::move(edges));
        }
    }
    throw UsageError("unknown family");
}

std::string family_tag(const FamilyParams& p) {
    const auto& q = p.params;
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
        return s;
    };
    switch (p.family) {
        case Family::Path: return "P" + std::to_string(q.at(0));
        case Family::YTree: return "Y_{" + join() + "}";
        case Family::CycleKind: return "C" + std::to_string(q.at(0)) + (p.kind == '0' ? std::string() : std::string(1, p.kind));
        case Family::Box: return "Box_{" + join() + "}";
    }
    return "?";
}

const std::vector<CatalogEntry>& sporadic_graphs() {
    static const std::vector<CatalogEntry> all = build_sporadics();
    return all;
}

const MixedGraph& sporadic(const std::string& tag) {
    for (const auto& e : sporadic_graphs())
        if (e.tag == tag) return e.graph;
    throw UsageError("unknown sporadic graph " + tag);
}

std::vector<CatalogEntry> catalog_members(int alpha2, int order) {
    if (alpha2 < 2 || alpha2 > 4) throw UsageError("alpha2 must be 2, 3 or 4");
    std::vector<CatalogEntry> out;
    if (order < 1) return out;
    auto add = [&](const FamilyParams& p) { out.push_back({family_tag(p), build_family(p)}); };
    if (alpha2 == 2) {
        if (order <= 2) add({Family::Path, {order}});
        return out;
    }
    if (alpha2 == 3) {
        if (order <= 4) add({Family::Path, {order}});
        if (order == 4) add({Family::CycleKind, {4}, '='});
        return out;
    }
    if (order >= 3) {
        add({Family::CycleKind, {order}, '+'});
        add({Family::CycleKind, {order}, '-'});
        if (order % 2 == 0) add({Family::CycleKind, {order}, '='});
    }
    add({Family::Path, {order}});
    if (order >= 4) add({Family::YTree, {order - 3, 1, 1}});
    for (int a = 2; a <= 4; ++a)
        if (a + 4 == order) add({Family::YTree, {a, 2, 1}});
    for (int c = 0; 2 * c + 4 <= order; ++c) add({Family::Box, {order - 4 - c, 0, c, 0}});
    for (const auto& q : std::vector<std::vector<int>>{{3, 1, 0, 0}, {2, 1, 1, 0}, {2, 1, 0, 0},
                                                       {1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}}) {
        if (q[0] + q[1] + q[2] + q[3] + 4 == order) add({Family::Box, q});
    }
    for (const auto& e : sporadic_graphs())
        if (!is_reference_only(e.tag) && e.graph.order() == order) out.push_back(e);
    return out;
}

std::string RadiusClass::str() const {
    const char* threshold = alpha2 == 2 ? "sqrt2" : alpha2 == 3 ? "sqrt3" : "2";
    std::string s = std::string("radius<") + threshold + ": " + (below ? "yes" : "no");
    if (tag) s += " tag=" + *tag;
    return s;
}

std::optional<std::string> catalog_match(const MixedGraph& m, int alpha2) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<CatalogEntry>> cache;
    std::vector<CatalogEntry> members;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(alpha2, m.order());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, catalog_members(alpha2, m.order())).first;
        members = it->second;
    }
    for (const auto& e : members)
        if (find_switching_isomorphism(e.graph, m)) return e.tag;
    return std::nullopt;
}

RadiusClass small_radius_classify(const MixedGraph& m, int alpha2) {
    RadiusClass r;
    r.alpha2 = alpha2;
    r.below = radius_strictly_below(m, alpha2);
    if (!r.below || m.order() == 0) return r;
    const auto ids = m.underlying().component_ids();
    const int k = m.underlying().component_count();
    std::string tag;
    for (int c = 0; c < k; ++c) {
        std::vector<bool> keep(m.order());
        for (Vertex v = 0; v < m.order(); ++v) keep[v] = ids[v] == c;
        const auto t = catalog_match(m.induced(keep), alpha2);
        if (!t) throw std::logic_error("graph below the threshold matches no catalog member");
        tag += (c ? "|" : "") + *t;
    }
    r.tag = tag;
    return r;
}

bool pm_one_spectrum_recognize(const MixedGraph& m) {
    const int n = m.order();
    bool spectral = false;
    if (n % 2 == 0) {
        CharPoly target = CharPoly::constant(1);
        for (int i = 0; i < n / 2; ++i) target = target * CharPoly{1, 0, -1};
        spectral = charpoly_exact(m) == target;
    }
    bool matching = n % 2 == 0;
    for (Vertex v = 0; v < n && matching; ++v) matching = m.degree(v) == 1;
    if (spectral != matching) throw std::logic_error("+-1 spectrum disagrees with the perfect-matching structure");
    return spectral;
}

}  // namespace mixgraph
