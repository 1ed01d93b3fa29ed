#include "mixgraph/nmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mixgraph/cycles.hpp"

namespace mixgraph {

bool NMatrix::is_hermitian() const {
    for (int r = 0; r < n_; ++r) {
        if (!at(r, r).is_real()) return false;
        for (int c = r + 1; c < n_; ++c)
            if (!(at(r, c) == at(c, r).conj())) return false;
    }
    return true;
}

NMatrix build_nmatrix(const MixedGraph& m) {
    NMatrix out(m.order());
    for (const auto& e : m.edges()) {
        out.at(e.u, e.v) = to_eisenstein(e.gain);
        out.at(e.v, e.u) = to_eisenstein(e.gain.conj());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Faddeev-LeVerrier over Z[w] / Q(w).

namespace {

struct Overflow {};

struct I64 {
    long long v = 0;
};

I64 operator+(I64 x, I64 y) {
    long long r;
    if (__builtin_add_overflow(x.v, y.v, &r)) throw Overflow{};
    return {r};
}
I64 operator-(I64 x, I64 y) {
    long long r;
    if (__builtin_sub_overflow(x.v, y.v, &r)) throw Overflow{};
    return {r};
}
I64 operator*(I64 x, I64 y) {
    long long r;
    if (__builtin_mul_overflow(x.v, y.v, &r)) throw Overflow{};
    return {r};
}

bool divide_exact(I64 x, long k, I64& out) {
    if (x.v % k != 0) return false;
    out.v = x.v / k;
    return true;
}
bool divide_exact(const BigInt& x, long k, BigInt& out) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(k))) return false;
    out = x / k;
    return true;
}
bool divide_exact(const Rational& x, long k, Rational& out) {
    out = x / k;
    return true;
}

bool is_zero(I64 x) { return x.v == 0; }
bool is_zero(const BigInt& x) { return sgn(x) == 0; }
bool is_zero(const Rational& x) { return sgn(x) == 0; }

BigInt to_big(I64 x) { return BigInt(static_cast<long>(x.v)); }
BigInt to_big(const BigInt& x) { return x; }
BigInt to_big(const Rational& x) {
    if (x.get_den() != 1) throw std::logic_error("characteristic polynomial coefficient is not an integer");
    return x.get_num();
}

template <class T>
struct Zw {
    T a{}, b{};
};

template <class T>
Zw<T> operator*(const Zw<T>& x, const Zw<T>& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}
template <class T>
Zw<T>& operator+=(Zw<T>& x, const Zw<T>& y) {
    x.a = x.a + y.a;
    x.b = x.b + y.b;
    return x;
}

template <class T>
struct SparseEntry {
    int col;
    Zw<T> value;
};

template <class T>
using SparseRows = std::vector<std::vector<SparseEntry<T>>>;

template <class T>
CharPoly faddeev(const SparseRows<T>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Zw<T>> mk(static_cast<std::size_t>(n) * n);
    std::vector<Zw<T>> am(mk.size());
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i].a = T(1);
    std::vector<BigInt> desc{BigInt(1)};
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Zw<T> acc{};
                for (const auto& e : rows[i]) acc += e.value * mk[static_cast<std::size_t>(e.col) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = acc;
            }
        }
        Zw<T> tr{};
        for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * n + i];
        if (!is_zero(tr.b)) throw std::logic_error("trace in Faddeev-LeVerrier step is not real");
        T ck{};
        if (!divide_exact(tr.a, k, ck)) throw std::logic_error("trace in Faddeev-LeVerrier step is not divisible by k");
        ck = T(0) - ck;
        desc.push_back(to_big(ck));
        mk.swap(am);
        for (int i = 0; i < n; ++i) {
            auto& d = mk[static_cast<std::size_t>(i) * n + i];
            d.a = d.a + ck;
        }
    }
    return CharPoly(desc);
}

template <class T>
SparseRows<T> graph_rows(const MixedGraph& m) {
    static const long table[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    SparseRows<T> rows(m.order());
    for (Vertex u = 0; u < m.order(); ++u)
        for (Vertex v : m.neighbors(u)) {
            const int e = m.gain_exponent(u, v);
            rows[u].push_back({v, Zw<T>{T(table[e][0]), T(table[e][1])}});
        }
    return rows;
}

}  // namespace

CharPoly charpoly_exact(const MixedGraph& m) {
    try {
        return faddeev(graph_rows<I64>(m));
    } catch (const Overflow&) {
        return faddeev(graph_rows<BigInt>(m));
    }
}

CharPoly charpoly_exact(const NMatrix& nm) {
    const int n = nm.order();
    bool integral = true;
    for (int i = 0; i < n && integral; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& z = nm.at(i, j);
            if (z.a().get_den() != 1 || z.b().get_den() != 1) {
                integral = false;
                break;
            }
        }
    if (integral) {
        SparseRows<BigInt> rows(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& z = nm.at(i, j);
                if (!z.is_zero()) rows[i].push_back({j, {z.a().get_num(), z.b().get_num()}});
            }
        return faddeev(rows);
    }
    SparseRows<Rational> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& z = nm.at(i, j);
            if (!z.is_zero()) rows[i].push_back({j, {z.a(), z.b()}});
        }
    return faddeev(rows);
}

// ---------------------------------------------------------------------------
// Elementary-subgraph expansion.

namespace {

class ElementaryExpansion {
public:
    explicit ElementaryExpansion(const MixedGraph& m) : m_(m), n_(m.order()), used_(n_, 0), coeff_(n_ + 1, 0) {}

    std::vector<long long> run() {
        recurse(0, {});
        return coeff_;
    }

private:
    struct Tally {
        int k = 0;       // vertices covered
        int comps = 0;   // components
        int lp = 0, ln = 0, lsp = 0, lsn = 0;
    };

    void record(const Tally& t) {
        const int r = t.k - t.comps;  // rank of the underlying forest-of-cycles
        const int sign_exp = -t.k + r + t.lsn + t.ln;
        long long term = 1LL << (t.lp + t.ln);
        if (((sign_exp % 2) + 2) % 2 == 1) term = -term;
        coeff_[t.k] += term;
    }

    void recurse(Vertex v, Tally t) {
        while (v < n_ && used_[v]) ++v;
        if (v == n_) {
            record(t);
            return;
        }
        used_[v] = 1;
        recurse(v + 1, t);  // v stays outside the subgraph

        for (Vertex w : m_.neighbors(v)) {
            if (used_[w]) continue;
            used_[w] = 1;
            Tally next = t;
            next.k += 2;
            next.comps += 1;
            recurse(v + 1, next);
            used_[w] = 0;
        }

        std::vector<Vertex> path{v};
        extend_cycle(v, t, path);
        used_[v] = 0;
    }

    // Grows a path from path[0] through unused vertices; every vertex smaller
    // than path[0] is already decided, so each cycle has path[0] as its minimum.
    void extend_cycle(Vertex start, const Tally& t, std::vector<Vertex>& path) {
        const Vertex tail = path.back();
        for (Vertex w : m_.neighbors(tail)) {
            if (w == start && path.size() >= 3 && path[1] < tail) {
                int e = 0;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) e += m_.gain_exponent(path[i], path[i + 1]);
                e += m_.gain_exponent(tail, start);
                Tally next = t;
                next.k += static_cast<int>(path.size());
                next.comps += 1;
                switch (classify_cycle(T6Element(e))) {
                    case CycleClass::Positive: ++next.lp; break;
                    case CycleClass::Negative: ++next.ln; break;
                    case CycleClass::SemiPositive: ++next.lsp; break;
                    case CycleClass::SemiNegative: ++next.lsn; break;
                }
                recurse(start + 1, next);
                continue;
            }
            if (used_[w] || w < start) continue;
            used_[w] = 1;
            path.push_back(w);
            extend_cycle(start, t, path);
            path.pop_back();
            used_[w] = 0;
        }
    }

    const MixedGraph& m_;
    int n_;
    std::vector<char> used_;
    std::vector<long long> coeff_;
};

}  // namespace

CharPoly charpoly_subgraphs(const MixedGraph& m) {
    if (m.order() > kSubgraphOrderCap)
        throw UsageError("subgraph expansion is capped at order " + std::to_string(kSubgraphOrderCap));
    const auto c = ElementaryExpansion(m).run();
    std::vector<BigInt> desc;
    for (long long v : c) desc.emplace_back(static_cast<long>(v));
    return CharPoly(desc);
}

// ---------------------------------------------------------------------------
// Recurrences.

namespace {

CharPoly cycle_sum(const MixedGraph& m, const std::vector<CycleDescriptor>& cycles) {
    CharPoly sum;
    for (const auto& z : cycles) {
        const int twice_real = cycle_weight(m, z).twice_real();
        sum += BigInt(twice_real) * charpoly_exact(m.without_vertices(z.vertices));
    }
    return sum;
}

void check_vertex(const MixedGraph& m, Vertex u) {
    if (u < 0 || u >= m.order()) throw UsageError("vertex out of range");
}

}  // namespace

CharPoly vertex_recurrence_residual(const MixedGraph& m, Vertex u) {
    check_vertex(m, u);
    CharPoly rhs = CharPoly::x_power(1) * charpoly_exact(m.without_vertices({u}));
    for (Vertex v : m.neighbors(u)) rhs -= charpoly_exact(m.without_vertices({u, v}));
    rhs -= cycle_sum(m, cycles_through_vertex(m.underlying(), u));
    return charpoly_exact(m) - rhs;
}

CharPoly edge_recurrence_residual(const MixedGraph& m, Vertex u, Vertex v) {
    check_vertex(m, u);
    check_vertex(m, v);
    if (!m.adjacent(u, v)) throw UsageError("edge " + std::to_string(u) + " " + std::to_string(v) + " not present");
    CharPoly rhs = charpoly_exact(m.without_edge(u, v));
    rhs -= charpoly_exact(m.without_vertices({u, v}));
    rhs -= cycle_sum(m, cycles_through_edge(m.underlying(), u, v));
    return charpoly_exact(m) - rhs;
}

bool is_cut_edge(const MixedGraph& m, Vertex u, Vertex v) {
    if (!m.adjacent(u, v)) return false;
    const auto ids = m.without_edge(u, v).underlying().component_ids();
    return ids[u] != ids[v];
}

CharPoly cut_edge_residual(const MixedGraph& m, Vertex u, Vertex v) {
    check_vertex(m, u);
    check_vertex(m, v);
    if (!is_cut_edge(m, u, v)) throw UsageError("edge " + std::to_string(u) + " " + std::to_string(v) + " is not a cut edge");
    const auto ids = m.without_edge(u, v).underlying().component_ids();
    std::vector<bool> side1(m.order()), side2(m.order());
    for (Vertex x = 0; x < m.order(); ++x) {
        side1[x] = ids[x] == ids[u];
        side2[x] = !side1[x];
    }
    const MixedGraph g1 = m.induced(side1);
    const MixedGraph g2 = m.induced(side2);
    auto g1_minus_u = side1;
    g1_minus_u[u] = false;
    auto g2_minus_v = side2;
    g2_minus_v[v] = false;
    CharPoly rhs = charpoly_exact(g1) * charpoly_exact(g2) -
                   charpoly_exact(m.induced(g1_minus_u)) * charpoly_exact(m.induced(g2_minus_v));
    return charpoly_exact(m) - rhs;
}

// ---------------------------------------------------------------------------

NMatrix complement_nmatrix(const NMatrix& nm) {
    const int n = nm.order();
    NMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = EisensteinNumber(i == j ? 0 : 1) - nm.at(i, j);
    return out;
}

MixedGraph complement(const MixedGraph& m) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < m.order(); ++u)
        for (Vertex v = u + 1; v < m.order(); ++v) {
            const int e = m.gain_exponent(u, v);
            if (e < 0) out.push_back({u, v, T6Element::one()});
            else if (e != 0) out.push_back({u, v, T6Element(e).conj()});  // 1 - w = conj(w)
        }
    return MixedGraph(m.order(), std::move(out));
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi on the real embedding [[A, -B], [B, A]].

Spectrum eigenvalues(const NMatrix& nm, double tol) {
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    const int n = nm.order();
    const int N = 2 * n;
    std::vector<double> a(static_cast<std::size_t>(N) * N, 0.0);
    auto A = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * N + c]; };
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& z = nm.at(r, c);
            const double re = z.a().get_d() + z.b().get_d() / 2.0;
            const double im = z.b().get_d() * half_sqrt3;
            A(r, c) = re;
            A(r + n, c + n) = re;
            A(r, c + n) = -im;
            A(r + n, c) = im;
        }

    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += 2.0 * A(p, q) * A(p, q);
        if (std::sqrt(off) < tol) {
            converged = true;
            break;
        }
        if (sweep == kMaxSweeps) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
            }
    }
    if (!converged) throw NumericError("Jacobi iteration did not converge");

    std::vector<double> diag(N);
    for (int i = 0; i < N; ++i) diag[i] = A(i, i);
    std::sort(diag.begin(), diag.end(), std::greater<>());
    Spectrum out;
    out.tolerance = tol;
    for (int i = 0; i < n; ++i) out.eigenvalues.push_back((diag[2 * i] + diag[2 * i + 1]) / 2.0);
    return out;
}

Spectrum eigenvalues(const MixedGraph& m, double tol) { return eigenvalues(build_nmatrix(m), tol); }

double spectral_radius(const Spectrum& s) {
    if (s.eigenvalues.empty()) throw UsageError("spectral radius of an empty spectrum");
    return std::max(std::fabs(s.eigenvalues.front()), std::fabs(s.eigenvalues.back()));
}

bool radius_strictly_below(const CharPoly& p, int alpha2) {
    if (alpha2 < 2 || alpha2 > 4) throw UsageError("alpha2 must be 2, 3 or 4");
    const QuadraticSurd t = QuadraticSurd::sqrt_of(alpha2);
    if (sign_at(p, t) == 0 || sign_at(p, -t) == 0) return false;
    if (p.degree() == 0) return true;
    return count_roots_with_multiplicity(p, -t, t) == p.degree();
}

bool radius_strictly_below(const MixedGraph& m, int alpha2) { return radius_strictly_below(charpoly_exact(m), alpha2); }

bool trace_square_check(const MixedGraph& m) { return charpoly_exact(m).c(2) == -m.size(); }

int rank_from_charpoly(const CharPoly& p) { return p.degree() - p.zero_multiplicity(); }

}  // namespace mixgraph
