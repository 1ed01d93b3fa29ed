#pragma once

#include <vector>

#include "mixgraph/core.hpp"
#include "mixgraph/poly.hpp"

namespace mixgraph {

/// Dense Hermitian matrix over Q(w).
class NMatrix {
public:
    NMatrix() = default;
    explicit NMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

    int order() const { return n_; }
    const EisensteinNumber& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
    EisensteinNumber& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * n_ + c]; }

    bool is_hermitian() const;

    friend bool operator==(const NMatrix&, const NMatrix&) = default;

private:
    int n_ = 0;
    std::vector<EisensteinNumber> entries_;
};

NMatrix build_nmatrix(const MixedGraph& m);

/// det(xI - N) by Faddeev-LeVerrier over Q(w). Throws std::logic_error if a
/// coefficient comes out non-real or non-integral.
CharPoly charpoly_exact(const NMatrix& n);
/// Same route on the graph directly; uses 64-bit arithmetic until it would overflow.
CharPoly charpoly_exact(const MixedGraph& m);

/// Coefficients from the elementary-subgraph expansion. Order capped at 12.
CharPoly charpoly_subgraphs(const MixedGraph& m);
inline constexpr int kSubgraphOrderCap = 12;

/// P(M) - [x P(M-u) - sum_{v~u} P(M-u-v) - sum_{Z through u} 2Re(wt Z) P(M-V(Z))].
CharPoly vertex_recurrence_residual(const MixedGraph& m, Vertex u);
/// P(M) - [P(M-uv) - P(M-u-v) - sum_{Z through uv} 2Re(wt Z) P(M-V(Z))].
CharPoly edge_recurrence_residual(const MixedGraph& m, Vertex u, Vertex v);
/// For a cut edge uv splitting M into G1 (with u) and G2 (with v):
/// P(M) - [P(G1) P(G2) - P(G1-u) P(G2-v)]. Throws UsageError if uv is not a cut edge.
CharPoly cut_edge_residual(const MixedGraph& m, Vertex u, Vertex v);
bool is_cut_edge(const MixedGraph& m, Vertex u, Vertex v);

/// J - N - I.
NMatrix complement_nmatrix(const NMatrix& n);
/// Mixed graph whose N-matrix is J - N - I.
MixedGraph complement(const MixedGraph& m);

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double tolerance = 1e-12;
};

/// Thrown when Jacobi sweeps hit the cap before converging.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Spectrum eigenvalues(const NMatrix& n, double tol = 1e-12);
Spectrum eigenvalues(const MixedGraph& m, double tol = 1e-12);
double spectral_radius(const Spectrum& s);

/// Every eigenvalue in (-sqrt(alpha2), sqrt(alpha2)), decided exactly. alpha2 in {2,3,4}.
bool radius_strictly_below(const MixedGraph& m, int alpha2);
bool radius_strictly_below(const CharPoly& p, int alpha2);

/// c_2 == -m.
bool trace_square_check(const MixedGraph& m);

/// n minus the multiplicity of the root 0.
int rank_from_charpoly(const CharPoly& p);

}  // namespace mixgraph
