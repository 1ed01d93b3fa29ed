#include "mixgraph/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mixgraph {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string T6Element::str() const { return "w^" + std::to_string(exp_); }

EisensteinNumber EisensteinNumber::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero Eisenstein number");
    const Rational n = norm();
    EisensteinNumber c = conj();
    return {c.a_ / n, c.b_ / n};
}

EisensteinNumber& EisensteinNumber::operator+=(const EisensteinNumber& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

EisensteinNumber& EisensteinNumber::operator-=(const EisensteinNumber& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

EisensteinNumber& EisensteinNumber::operator*=(const EisensteinNumber& o) {
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc + bd)w
    Rational bd = b_ * o.b_;
    Rational re = a_ * o.a_ - bd;
    Rational im = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(re);
    b_ = std::move(im);
    return *this;
}

std::string EisensteinNumber::str() const {
    if (sgn(b_) == 0) return a_.get_str();
    if (sgn(a_) == 0) return b_.get_str() + "*w";
    return a_.get_str() + (sgn(b_) > 0 ? " + " : " - ") + Rational(abs(b_)).get_str() + "*w";
}

EisensteinNumber eis_mul(const EisensteinNumber& x, const EisensteinNumber& y) { return x * y; }

EisensteinNumber to_eisenstein(T6Element x) {
    static const int table[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    const auto& t = table[x.exponent()];
    return {Rational(t[0]), Rational(t[1])};
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {
    if (n < 0) throw UsageError("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw UsageError("vertex out of range");
        if (u == v) throw UsageError("self-loop");
        if (u > v) std::swap(u, v);
        auto& slot = adj_[static_cast<std::size_t>(u) * n + v];
        if (slot) throw UsageError("parallel edge");
        slot = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
        edges_.emplace_back(u, v);
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (const auto& list : nbrs_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

std::vector<int> SimpleGraph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : nbrs_[x]) {
                if (comp[y] < 0) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

int SimpleGraph::component_count() const {
    const auto ids = component_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

// ---------------------------------------------------------------------------

MixedGraph::MixedGraph(int n, std::vector<Edge> edges)
    : n_(n), entry_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), -1), nbrs_(std::max(n, 0)) {
    if (n < 0) throw UsageError("negative vertex count");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw UsageError("vertex out of range");
        if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            e.gain = e.gain.conj();
        }
        const int g = e.gain.exponent();
        if (g != 0 && g != 1 && g != 5)
            throw UsageError("gain " + e.gain.str() + " is not a mixed-graph entry");
        if (entry_[index(e.u, e.v)] >= 0)
            throw UsageError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        entry_[index(e.u, e.v)] = static_cast<std::int8_t>(g);
        entry_[index(e.v, e.u)] = static_cast<std::int8_t>(e.gain.conj().exponent());
        pairs.emplace_back(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
    edges_ = std::move(edges);
    underlying_ = SimpleGraph(n, pairs);
    for (Vertex v = 0; v < n; ++v) nbrs_[v] = underlying_.neighbors(v);
}

MixedGraph MixedGraph::undirected() const {
    std::vector<Edge> out = edges_;
    for (auto& e : out) e.gain = T6Element::one();
    return MixedGraph(n_, std::move(out));
}

MixedGraph MixedGraph::induced(const std::vector<bool>& keep) const {
    std::vector<int> map(n_, -1);
    int k = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (keep[v]) map[v] = k++;
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (map[e.u] >= 0 && map[e.v] >= 0) out.push_back({map[e.u], map[e.v], e.gain});
    return MixedGraph(k, std::move(out));
}

MixedGraph MixedGraph::without_vertices(const std::vector<Vertex>& removed) const {
    std::vector<bool> keep(n_, true);
    for (Vertex v : removed) {
        if (v < 0 || v >= n_) throw UsageError("vertex out of range");
        keep[v] = false;
    }
    return induced(keep);
}

MixedGraph MixedGraph::without_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    std::vector<Edge> out;
    bool found = false;
    for (const auto& e : edges_) {
        if (e.u == u && e.v == v) {
            found = true;
            continue;
        }
        out.push_back(e);
    }
    if (!found) throw UsageError("edge " + std::to_string(u) + " " + std::to_string(v) + " not present");
    return MixedGraph(n_, std::move(out));
}

MixedGraph MixedGraph::relabelled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw UsageError("permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v], e.gain});
    return MixedGraph(n_, std::move(out));
}

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
    std::vector<Edge> out = a.edges();
    for (const auto& e : b.edges()) out.push_back({e.u + a.order(), e.v + a.order(), e.gain});
    return MixedGraph(a.order() + b.order(), std::move(out));
}

MixedGraph converse(const MixedGraph& m) {
    std::vector<Edge> out = m.edges();
    for (auto& e : out) e.gain = e.gain.conj();
    return MixedGraph(m.order(), std::move(out));
}

Neighborhoods neighborhoods(const MixedGraph& m, Vertex v) {
    if (v < 0 || v >= m.order()) throw UsageError("vertex " + std::to_string(v) + " out of range");
    Neighborhoods out;
    for (Vertex u : m.neighbors(v)) {
        switch (m.gain_exponent(v, u)) {
            case 0: out.undirected.push_back(u); break;
            case 1: out.out.push_back(u); break;  // N_{vu} = w: arc v -> u
            default: out.in.push_back(u); break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-blank, non-comment line; false at end of input.
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            out = line.substr(first);
            return true;
        }
        return false;
    }
};

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, int line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
    return value;
}

std::optional<MixedGraph> parse_one(LineReader& reader) {
    std::string_view line;
    if (!reader.next(line)) return std::nullopt;
    const int header_line = reader.line_no;
    auto head = tokens(line);
    if (head.size() != 2) throw ParseError(header_line, "expected header 'n m'");
    const long n = parse_int(head[0], header_line);
    const long m = parse_int(head[1], header_line);
    if (n < 0 || m < 0) throw ParseError(header_line, "negative count in header");
    std::vector<Edge> edges;
    std::vector<std::int8_t> seen(static_cast<std::size_t>(n) * n, 0);
    for (long i = 0; i < m; ++i) {
        if (!reader.next(line)) throw ParseError(reader.line_no, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        const int ln = reader.line_no;
        auto tok = tokens(line);
        if (tok.size() != 3) throw ParseError(ln, "expected 'u v K'");
        const long u = parse_int(tok[0], ln);
        const long v = parse_int(tok[1], ln);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(ln, "vertex out of range");
        if (u == v) throw ParseError(ln, "self-loop");
        auto& mark = seen[static_cast<std::size_t>(std::min(u, v)) * n + std::max(u, v)];
        if (mark) throw ParseError(ln, "duplicate edge " + tok[0] + " " + tok[1]);
        mark = 1;
        T6Element gain;
        if (tok[2] == "U") gain = T6Element::one();
        else if (tok[2] == "F") gain = T6Element::omega();
        else if (tok[2] == "B") gain = T6Element::omega_bar();
        else throw ParseError(ln, "edge kind must be U, F or B, got '" + tok[2] + "'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), gain});
    }
    return MixedGraph(static_cast<int>(n), std::move(edges));
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
    LineReader reader{text};
    auto g = parse_one(reader);
    if (!g) throw ParseError(reader.line_no, "empty input");
    return *std::move(g);
}

std::vector<MixedGraph> parse_graph_stream(std::string_view text) {
    LineReader reader{text};
    std::vector<MixedGraph> out;
    while (auto g = parse_one(reader)) out.push_back(*std::move(g));
    return out;
}

std::string serialize_graph(const MixedGraph& m) {
    std::ostringstream out;
    out << m.order() << ' ' << m.size() << '\n';
    for (const auto& e : m.edges()) {
        switch (e.gain.exponent()) {
            case 0: out << e.u << ' ' << e.v << " U\n"; break;
            case 1: out << e.u << ' ' << e.v << " F\n"; break;
            default: out << e.v << ' ' << e.u << " F\n"; break;  // tail first
        }
    }
    return out.str();
}

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}  // namespace

MixedGraph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::vector<MixedGraph> read_graph_stream_file(const std::string& path) { return parse_graph_stream(slurp(path)); }

std::ostream& operator<<(std::ostream& os, const MixedGraph& m) { return os << serialize_graph(m); }

}  // namespace mixgraph
