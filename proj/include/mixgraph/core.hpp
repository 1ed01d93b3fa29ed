#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mixgraph {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its documented domain.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph text; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Sixth root of unity stored as an exponent of omega = (1 + i*sqrt(3)) / 2.
/// Exponents 0..5 are 1, w, -conj(w), -1, -w, conj(w).
class T6Element {
public:
    constexpr T6Element() = default;
    constexpr explicit T6Element(int exponent) : exp_(static_cast<std::uint8_t>(((exponent % 6) + 6) % 6)) {}

    static constexpr T6Element one() { return T6Element(0); }
    static constexpr T6Element omega() { return T6Element(1); }
    static constexpr T6Element omega_bar() { return T6Element(5); }
    static constexpr T6Element minus_one() { return T6Element(3); }

    constexpr int exponent() const { return exp_; }
    constexpr T6Element conj() const { return T6Element(6 - exp_); }
    constexpr T6Element operator-() const { return T6Element(exp_ + 3); }

    friend constexpr T6Element operator*(T6Element x, T6Element y) { return T6Element(x.exp_ + y.exp_); }
    friend constexpr bool operator==(T6Element, T6Element) = default;
    friend constexpr auto operator<=>(T6Element, T6Element) = default;

    /// Real part times two: 2, 1, -1, -2, -1, 1.
    constexpr int twice_real() const {
        constexpr int table[6] = {2, 1, -1, -2, -1, 1};
        return table[exp_];
    }

    /// "w^k" rendering used by every report line.
    std::string str() const;

private:
    std::uint8_t exp_ = 0;
};

constexpr T6Element t6_mul(T6Element x, T6Element y) { return x * y; }

/// Exact element a + b*w of Q(w), reduced by w^2 = w - 1.
class EisensteinNumber {
public:
    EisensteinNumber() = default;
    EisensteinNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit EisensteinNumber(long a) : a_(a), b_(0) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_real() const { return sgn(b_) == 0; }

    EisensteinNumber conj() const { return {a_ + b_, -b_}; }
    /// z * conj(z) = a^2 + ab + b^2.
    Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }
    EisensteinNumber inverse() const;

    EisensteinNumber& operator+=(const EisensteinNumber& o);
    EisensteinNumber& operator-=(const EisensteinNumber& o);
    EisensteinNumber& operator*=(const EisensteinNumber& o);

    friend EisensteinNumber operator+(EisensteinNumber x, const EisensteinNumber& y) { return x += y; }
    friend EisensteinNumber operator-(EisensteinNumber x, const EisensteinNumber& y) { return x -= y; }
    friend EisensteinNumber operator*(EisensteinNumber x, const EisensteinNumber& y) { return x *= y; }
    EisensteinNumber operator-() const { return {-a_, -b_}; }
    friend bool operator==(const EisensteinNumber& x, const EisensteinNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    Rational a_{0};
    Rational b_{0};
};

EisensteinNumber eis_mul(const EisensteinNumber& x, const EisensteinNumber& y);
EisensteinNumber to_eisenstein(T6Element x);

using Vertex = int;

/// Stored edge: u < v, gain is the (u, v) entry of the N-matrix.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    T6Element gain;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with sorted neighbour lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
    int max_degree() const;
    /// Sorted pairs (u, v), u < v.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    std::vector<int> component_ids() const;
    int component_count() const;
    bool connected() const { return n_ <= 1 || component_count() == 1; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Simple underlying graph with one gain in {1, w, conj(w)} per edge.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n) : MixedGraph(n, {}) {}
    /// Edges may be given in either orientation; (v, u, g) is stored as (u, v, conj(g)).
    MixedGraph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return entry_[index(u, v)] >= 0; }
    /// N-matrix entry (u, v) as a sixth root, or nullopt for non-adjacent pairs.
    std::optional<T6Element> gain(Vertex u, Vertex v) const {
        const auto e = entry_[index(u, v)];
        if (e < 0) return std::nullopt;
        return T6Element(e);
    }
    /// Raw entry exponent, -1 when absent.
    int gain_exponent(Vertex u, Vertex v) const { return entry_[index(u, v)]; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

    const SimpleGraph& underlying() const { return underlying_; }
    /// Same underlying graph, every edge undirected.
    MixedGraph undirected() const;

    /// Induced subgraph on the kept vertices, relabelled in increasing order.
    MixedGraph induced(const std::vector<bool>& keep) const;
    MixedGraph without_vertices(const std::vector<Vertex>& removed) const;
    MixedGraph without_edge(Vertex u, Vertex v) const;
    /// Vertex v of the result is perm-image: result has edge (perm[u], perm[v]) for every (u, v).
    MixedGraph relabelled(const std::vector<Vertex>& perm) const;

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int8_t> entry_;
    std::vector<std::vector<Vertex>> nbrs_;
    SimpleGraph underlying_;
};

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b);

MixedGraph converse(const MixedGraph& m);

struct Neighborhoods {
    std::vector<Vertex> undirected;  // N^0
    std::vector<Vertex> out;         // N^+ : arcs v -> u
    std::vector<Vertex> in;          // N^- : arcs u -> v
};

Neighborhoods neighborhoods(const MixedGraph& m, Vertex v);

/// Parse the first graph of `text`. Format: "n m" then m lines "u v K", K in {U, F, B}.
MixedGraph parse_graph(std::string_view text);
/// Parse consecutive graphs from one text blob.
std::vector<MixedGraph> parse_graph_stream(std::string_view text);
std::string serialize_graph(const MixedGraph& m);

MixedGraph read_graph_file(const std::string& path);
std::vector<MixedGraph> read_graph_stream_file(const std::string& path);

std::ostream& operator<<(std::ostream& os, const MixedGraph& m);

}  // namespace mixgraph
