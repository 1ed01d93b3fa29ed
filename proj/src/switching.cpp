#include "mixgraph/switching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mixgraph/nmatrix.hpp"

namespace mixgraph {

namespace {

std::string edge_text(Vertex u, Vertex v) { return std::to_string(u) + " " + std::to_string(v); }

bool is_entry(T6Element g) {
    const int e = g.exponent();
    return e == 0 || e == 1 || e == 5;
}

struct Forest {
    std::vector<Vertex> order;   // BFS order, components rooted at their lowest vertex
    std::vector<Vertex> parent;  // -1 for roots
};

Forest bfs_forest(const MixedGraph& m) {
    const int n = m.order();
    Forest f{{}, std::vector<Vertex>(n, -1)};
    std::vector<char> seen(n, 0);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::size_t head = f.order.size();
        f.order.push_back(r);
        while (head < f.order.size()) {
            const Vertex x = f.order[head++];
            for (Vertex y : m.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = 1;
                f.parent[y] = x;
                f.order.push_back(y);
            }
        }
    }
    return f;
}

T6Element entry(const MixedGraph& m, Vertex u, Vertex v) { return T6Element(m.gain_exponent(u, v)); }

// theta on m1's vertices forcing conj(theta_u) g1 theta_v = g2 on the BFS forest.
std::vector<T6Element> tree_match(const MixedGraph& m1, const MixedGraph& m2, const Forest& f) {
    std::vector<T6Element> theta(m1.order());
    for (Vertex v : f.order) {
        const Vertex p = f.parent[v];
        if (p < 0) continue;
        theta[v] = theta[p] * entry(m2, p, v) * entry(m1, p, v).conj();
    }
    return theta;
}

}  // namespace

SwitchOutcome apply_switching(const MixedGraph& m, const SwitchingFunction& sf) {
    if (static_cast<int>(sf.theta.size()) != m.order()) throw UsageError("switching function has the wrong length");
    std::vector<Edge> out;
    out.reserve(m.edges().size());
    for (const auto& e : m.edges()) {
        const T6Element g = sf.theta[e.u].conj() * e.gain * sf.theta[e.v];
        if (!is_entry(g)) return {std::nullopt, Edge{e.u, e.v, g}};
        out.push_back({e.u, e.v, g});
    }
    return {MixedGraph(m.order(), std::move(out)), std::nullopt};
}

MixedGraph two_way_switch(const MixedGraph& m, const std::vector<bool>& in_w) {
    if (static_cast<int>(in_w.size()) != m.order()) throw UsageError("vertex set has the wrong length");
    std::vector<Edge> out;
    for (const auto& e : m.edges()) {
        if (in_w[e.u] == in_w[e.v]) {
            out.push_back(e);
            continue;
        }
        // orient the pair as (w, u) with w in W
        const Vertex w = in_w[e.u] ? e.u : e.v;
        const Vertex u = in_w[e.u] ? e.v : e.u;
        const int g = m.gain_exponent(w, u);
        if (g == 0) out.push_back({u, w, T6Element::omega()});        // undirected -> arc u->w
        else if (g == 1) out.push_back({w, u, T6Element::one()});     // arc w->u -> undirected
        else throw SwitchingError("arc " + edge_text(u, w) + " runs from U into W", {u, w, T6Element::omega()});
    }
    return MixedGraph(m.order(), std::move(out));
}

bool is_admissible(const MixedGraph& m, const AdmissiblePartition& p) {
    return apply_switching(m, SwitchingFunction{p.label}).ok();
}

MixedGraph three_way_switch(const MixedGraph& m, const AdmissiblePartition& p) {
    if (static_cast<int>(p.label.size()) != m.order()) throw UsageError("partition has the wrong length");
    std::vector<Edge> out;
    for (const auto& e : m.edges()) {
        Vertex tail = e.u, head = e.v;
        const int g = e.gain.exponent();
        if (g == 5) std::swap(tail, head);
        // label(head) = j * label(tail) with j = ratio
        const int ratio = (p.label[head] * p.label[tail].conj()).exponent();
        const std::string type =
            "(" + p.label[tail].str() + ", " + p.label[head].str() + ")";
        if (g == 0) {
            if (ratio == 0) out.push_back(e);
            else if (ratio == 1) out.push_back({tail, head, T6Element::omega()});
            else if (ratio == 5) out.push_back({head, tail, T6Element::omega()});
            else throw SwitchingError("undirected edge " + edge_text(tail, head) + " has inadmissible type " + type, e);
        } else {
            if (ratio == 0) out.push_back(e);
            else if (ratio == 5) out.push_back({tail, head, T6Element::one()});
            else if (ratio == 4) out.push_back({head, tail, T6Element::omega()});
            else throw SwitchingError("arc " + edge_text(tail, head) + " has inadmissible type " + type, e);
        }
    }
    return MixedGraph(m.order(), std::move(out));
}

std::optional<MixedGraph> replay_witness(const MixedGraph& m1, const SwitchingWitness& w) {
    auto outcome = apply_switching(w.converse ? converse(m1) : m1, w.theta);
    return outcome.graph;
}

EquivalenceVerdict switching_equivalent(const MixedGraph& m1, const MixedGraph& m2) {
    if (!(m1.underlying() == m2.underlying())) return {false, "underlying-mismatch", std::nullopt};
    const Forest f = bfs_forest(m1);
    for (bool use_converse : {false, true}) {
        const MixedGraph src = use_converse ? converse(m1) : m1;
        const auto theta = tree_match(src, m2, f);
        bool ok = true;
        for (const auto& e : src.edges()) {
            if (theta[e.u].conj() * e.gain * theta[e.v] != entry(m2, e.u, e.v)) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, "equivalent", SwitchingWitness{{theta}, use_converse}};
    }
    return {false, "cycle-weights-differ", std::nullopt};
}

std::string render_witness(const SwitchingWitness& w) {
    std::ostringstream out;
    out << "theta:";
    for (std::size_t v = 0; v < w.theta.theta.size(); ++v) out << " v" << v << '=' << w.theta.theta[v].str();
    out << " converse=" << (w.converse ? "true" : "false");
    return out.str();
}

std::vector<std::uint8_t> switching_class_key(const MixedGraph& m) {
    const Forest f = bfs_forest(m);
    std::vector<T6Element> theta(m.order());
    for (Vertex v : f.order) {
        const Vertex p = f.parent[v];
        if (p >= 0) theta[v] = theta[p] * entry(m, p, v).conj();
    }
    std::vector<std::uint8_t> key, conj_key;
    for (const auto& e : m.edges()) {
        if (f.parent[e.v] == e.u || f.parent[e.u] == e.v) continue;
        const T6Element g = theta[e.u].conj() * e.gain * theta[e.v];
        key.push_back(static_cast<std::uint8_t>(g.exponent()));
        conj_key.push_back(static_cast<std::uint8_t>(g.conj().exponent()));
    }
    return std::min(key, conj_key);
}

// ---------------------------------------------------------------------------

namespace {

class IsoSwitchSearch {
public:
    IsoSwitchSearch(const MixedGraph& m1, const MixedGraph& m2)
        : m1_(m1), m2_(m2), n_(m1.order()), order_(bfs_forest(m1).order), pos_(n_), perm_(n_, -1),
          used_(n_, 0), theta_(n_) {
        for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;
    }

    std::optional<IsoSwitchWitness> run() {
        if (!assign(0)) return std::nullopt;
        // theta_ is indexed by m1 vertices; re-index to the relabelled graph.
        std::vector<T6Element> theta(n_);
        for (Vertex v = 0; v < n_; ++v) theta[perm_[v]] = theta_[v];
        return IsoSwitchWitness{perm_, SwitchingWitness{{theta}, false}};
    }

private:
    bool assign(int i) {
        if (i == n_) return true;
        const Vertex v = order_[i];
        // earlier neighbours in the search order
        Vertex anchor = -1;
        for (Vertex a : m1_.neighbors(v))
            if (pos_[a] < i) {
                anchor = a;
                break;
            }
        for (Vertex c = 0; c < n_; ++c) {
            if (used_[c] || m2_.degree(c) != m1_.degree(v)) continue;
            if (anchor >= 0 && !m2_.adjacent(perm_[anchor], c)) continue;
            T6Element th;
            if (anchor >= 0)
                th = theta_[anchor] * entry(m2_, perm_[anchor], c) * entry(m1_, anchor, v).conj();
            bool ok = true;
            int earlier_nbrs = 0;
            for (Vertex a : m1_.neighbors(v)) {
                if (pos_[a] >= i) continue;
                ++earlier_nbrs;
                if (!m2_.adjacent(perm_[a], c) ||
                    theta_[a].conj() * entry(m1_, a, v) * th != entry(m2_, perm_[a], c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            // the image must not pick up extra adjacencies to assigned vertices
            int earlier_image_nbrs = 0;
            for (Vertex b : m2_.neighbors(c))
                if (used_[b]) ++earlier_image_nbrs;
            if (earlier_image_nbrs != earlier_nbrs) continue;
            used_[c] = 1;
            perm_[v] = c;
            theta_[v] = th;
            if (assign(i + 1)) return true;
            used_[c] = 0;
            perm_[v] = -1;
        }
        return false;
    }

    const MixedGraph& m1_;
    const MixedGraph& m2_;
    int n_;
    std::vector<Vertex> order_;
    std::vector<int> pos_;
    std::vector<Vertex> perm_;
    std::vector<char> used_;
    std::vector<T6Element> theta_;
};

std::vector<int> degree_sequence(const MixedGraph& m) {
    std::vector<int> d;
    for (Vertex v = 0; v < m.order(); ++v) d.push_back(m.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::optional<IsoSwitchWitness> find_switching_isomorphism(const MixedGraph& m1, const MixedGraph& m2) {
    if (m1.order() != m2.order() || m1.size() != m2.size()) return std::nullopt;
    if (degree_sequence(m1) != degree_sequence(m2)) return std::nullopt;
    if (!(charpoly_exact(m1) == charpoly_exact(m2))) return std::nullopt;
    for (bool use_converse : {false, true}) {
        const MixedGraph src = use_converse ? converse(m1) : m1;
        auto found = IsoSwitchSearch(src, m2).run();
        if (found) {
            found->switching.converse = use_converse;
            return found;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<TwinPair> twin_pairs(const MixedGraph& m) {
    std::vector<TwinPair> out;
    const int n = m.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (m.adjacent(u, v) || m.neighbors(u) != m.neighbors(v)) continue;
            T6Element s;
            if (!m.neighbors(u).empty()) {
                const Vertex j = m.neighbors(u).front();
                s = entry(m, u, j) * entry(m, v, j).conj();
            }
            bool ok = true;
            for (Vertex j : m.neighbors(u))
                if (entry(m, u, j) != s * entry(m, v, j)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back({u, v, s});
        }
    return out;
}

TwinReduction twin_reduction(const MixedGraph& m) {
    TwinReduction r;
    r.representative.resize(m.order());
    for (Vertex v = 0; v < m.order(); ++v) r.representative[v] = v;
    r.kept.resize(m.order());
    for (Vertex v = 0; v < m.order(); ++v) r.kept[v] = v;
    r.reduced = m;
    while (true) {
        const auto pairs = twin_pairs(r.reduced);
        if (pairs.empty()) break;
        const TwinPair& p = pairs.front();
        r.representative[r.kept[p.v]] = r.kept[p.u];
        r.reduced = r.reduced.without_vertices({p.v});
        r.kept.erase(r.kept.begin() + p.v);
    }
    // follow chains to a surviving vertex
    for (Vertex v = 0; v < m.order(); ++v) {
        Vertex x = v;
        while (r.representative[x] != x) x = r.representative[x];
        r.representative[v] = x;
    }
    if (rank_from_charpoly(charpoly_exact(r.reduced)) != rank_from_charpoly(charpoly_exact(m)))
        throw std::logic_error("twin reduction changed the rank");
    return r;
}

UnderlyingVerdict underlying_cospectral(const MixedGraph& m) {
    if (!m.underlying().connected()) throw UsageError("underlying graph must be connected");
    const MixedGraph g = m.undirected();
    auto verdict = switching_equivalent(m, g);
    if (!verdict.equivalent) return {false, std::nullopt};
    if (!(charpoly_exact(m) == charpoly_exact(g)))
        throw std::logic_error("switching equivalent to the underlying graph but not cospectral");
    if (m.order() > 0) {
        const double l1 = eigenvalues(m).eigenvalues.front();
        const double l2 = eigenvalues(g).eigenvalues.front();
        if (std::fabs(l1 - l2) > 1e-8) throw std::logic_error("largest eigenvalues differ");
    }
    return {true, verdict.witness};
}

std::optional<MixedGraph> realize_gain_graph(int n, const std::vector<Edge>& gains) {
    if (n < 0) throw UsageError("negative vertex count");
    // dense gain table, -1 when absent
    std::vector<int> g(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::vector<Vertex>> nbrs(n);
    for (const auto& e : gains) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw UsageError("bad edge");
        g[static_cast<std::size_t>(e.u) * n + e.v] = e.gain.exponent();
        g[static_cast<std::size_t>(e.v) * n + e.u] = e.gain.conj().exponent();
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    for (auto& l : nbrs) std::sort(l.begin(), l.end());
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    std::vector<char> is_root(n, 0);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        is_root[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            const Vertex x = order[head++];
            for (Vertex y : nbrs[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
        }
    }
    std::vector<int> theta(n, -1);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        const Vertex v = order[i];
        const int first = 0, last = is_root[v] ? 0 : 5;
        for (int t = first; t <= last; ++t) {
            bool ok = true;
            for (Vertex a : nbrs[v]) {
                if (theta[a] < 0) continue;
                const int e = ((6 - theta[a]) + g[static_cast<std::size_t>(a) * n + v] + t) % 6;
                if (!is_entry(T6Element(e))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            theta[v] = t;
            if (assign(i + 1)) return true;
            theta[v] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    std::vector<Edge> out;
    for (const auto& e : gains)
        out.push_back({e.u, e.v, T6Element(theta[e.u]).conj() * e.gain * T6Element(theta[e.v])});
    return MixedGraph(n, std::move(out));
}

}  // namespace mixgraph
