#include "mixgraph/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mixgraph/catalog.hpp"
#include "mixgraph/classify.hpp"
#include "mixgraph/cycles.hpp"
#include "mixgraph/nmatrix.hpp"
#include "mixgraph/switching.hpp"

namespace mixgraph {

// ---------------------------------------------------------------------------
// Graph generation: vertex augmentation with a brute-force canonical form.

namespace {

constexpr int kMaxGeneratedOrder = 7;

using Code = std::uint32_t;

int pair_bit(int i, int j, int n) {
    // row-major index of (i, j), i < j, in the upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Code canonical_code(const std::vector<std::uint8_t>& adj, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Code best = ~Code{0};
    do {
        Code c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[perm[i] * n + perm[j]]) c |= Code{1} << pair_bit(i, j, n);
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SimpleGraph from_code(Code c, int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c >> pair_bit(i, j, n) & 1) edges.emplace_back(i, j);
    return SimpleGraph(n, edges);
}

}  // namespace

const std::vector<SimpleGraph>& all_graphs(int n) {
    static std::vector<std::vector<SimpleGraph>> memo;
    if (n < 0 || n > kMaxGeneratedOrder) throw UsageError("graph generation supports orders 0.." + std::to_string(kMaxGeneratedOrder));
    if (memo.empty()) memo.push_back({SimpleGraph(0, {})});
    while (static_cast<int>(memo.size()) <= n) {
        const int k = static_cast<int>(memo.size());  // new order
        std::set<Code> codes;
        for (const auto& g : memo.back()) {
            std::vector<std::uint8_t> adj(static_cast<std::size_t>(k) * k, 0);
            for (auto [u, v] : g.edges()) adj[u * k + v] = adj[v * k + u] = 1;
            for (Code mask = 0; mask < (Code{1} << (k - 1)); ++mask) {
                for (int u = 0; u < k - 1; ++u) adj[u * k + (k - 1)] = adj[(k - 1) * k + u] = (mask >> u) & 1;
                codes.insert(canonical_code(adj, k));
            }
        }
        std::vector<SimpleGraph> level;
        for (Code c : codes) level.push_back(from_code(c, k));
        memo.push_back(std::move(level));
    }
    return memo[n];
}

std::vector<SimpleGraph> connected_graphs(int n) {
    std::vector<SimpleGraph> out;
    for (const auto& g : all_graphs(n))
        if (g.connected()) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kDigitGain[3] = {0, 1, 5};

int gain_digit(int exponent) { return exponent == 0 ? 0 : exponent == 1 ? 1 : 2; }

MixedGraph orientation_from_digits(const SimpleGraph& g, const std::vector<int>& digits) {
    std::vector<Edge> edges;
    edges.reserve(digits.size());
    const auto& pairs = g.edges();
    for (std::size_t i = 0; i < pairs.size(); ++i)
        edges.push_back({pairs[i].first, pairs[i].second, T6Element(kDigitGain[digits[i]])});
    return MixedGraph(g.order(), std::move(edges));
}

bool next_digits(std::vector<int>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < 3) return true;
        digits[i] = 0;
    }
    return false;
}

std::uint64_t orientation_code(const MixedGraph& m) {
    std::uint64_t c = 0;
    for (const auto& e : m.edges()) c = c * 3 + gain_digit(e.gain.exponent());
    return c;
}

std::uint64_t pow3(int m) {
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) r *= 3;
    return r;
}

}  // namespace

void for_each_orientation(const SimpleGraph& g, const std::function<void(const MixedGraph&)>& visit) {
    if (g.size() > kMaxOrientationEdges)
        throw UsageError("orientation sweep is capped at " + std::to_string(kMaxOrientationEdges) + " edges");
    std::vector<int> digits(g.size(), 0);
    do {
        visit(orientation_from_digits(g, digits));
    } while (next_digits(digits));
}

std::vector<MixedGraph> enumerate_orientations(const SimpleGraph& g, Dedupe dedupe) {
    std::vector<MixedGraph> out;
    std::set<std::vector<std::uint8_t>> seen;
    for_each_orientation(g, [&](const MixedGraph& m) {
        if (dedupe == Dedupe::Switching && !seen.insert(switching_class_key(m)).second) return;
        out.push_back(m);
    });
    return out;
}

// ---------------------------------------------------------------------------

std::vector<const CospectralReport::Class*> CospectralReport::witnesses() const {
    std::vector<const Class*> out;
    for (const auto& c : classes)
        if (c.subclasses.size() > 1) out.push_back(&c);
    return out;
}

std::string CospectralReport::str() const {
    std::ostringstream out;
    for (const auto& c : classes) {
        out << "class: " << c.poly.machine_line() << " members=" << c.members.size()
            << " subclasses=" << c.subclasses.size() << '\n';
        for (const auto& s : c.subclasses) {
            out << "subclass:";
            for (int i : s) out << ' ' << i;
            out << '\n';
        }
    }
    out << "cospectral-witnesses: " << witnesses().size() << '\n';
    return out.str();
}

CospectralReport find_cospectral(const std::vector<MixedGraph>& graphs) {
    std::map<CharPoly, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(graphs.size()); ++i) groups[charpoly_exact(graphs[i])].push_back(i);
    CospectralReport r;
    for (auto& [poly, members] : groups) {
        CospectralReport::Class c{poly, members, {}};
        for (int i : members) {
            bool placed = false;
            for (auto& sub : c.subclasses)
                if (find_switching_isomorphism(graphs[sub.front()], graphs[i])) {
                    sub.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) c.subclasses.push_back({i});
        }
        r.classes.push_back(std::move(c));
    }
    return r;
}

// ---------------------------------------------------------------------------

void SuiteReport::fail(const std::string& why, const MixedGraph& m) {
    if (!passed) return;
    passed = false;
    failure = why;
    counterexample = m;
}

std::string SuiteReport::str() const {
    std::ostringstream out;
    out << "suite: " << suite << " result=" << (passed ? "PASS" : "FAIL") << " checked=" << checked << '\n';
    for (const auto& n : notes) out << "note: " << n << '\n';
    if (!passed) {
        out << "failure: " << failure << '\n';
        if (counterexample) out << "counterexample:\n" << serialize_graph(*counterexample);
    }
    return out.str();
}

namespace {

void merge(SuiteReport& into, const SuiteReport& part) {
    into.checked += part.checked;
    for (const auto& n : part.notes) into.notes.push_back(n);
    if (!part.passed && into.passed) {
        into.passed = false;
        into.failure = part.failure;
        into.counterexample = part.counterexample;
    }
}

template <class F>
void for_each_connected_orientation(int n_max, F&& f) {
    for (int n = 1; n <= n_max; ++n)
        for (const auto& g : connected_graphs(n)) for_each_orientation(g, f);
}

std::string poly_text(const CharPoly& p) { return p.str(); }

}  // namespace

SuiteReport suite_charpoly_dual(const SweepSpec& spec) {
    SuiteReport r{"charpoly-dual"};
    auto check = [&](const MixedGraph& m) {
        ++r.checked;
        const CharPoly a = charpoly_exact(m);
        const CharPoly b = charpoly_subgraphs(m);
        if (!(a == b)) r.fail("determinant route " + poly_text(a) + " vs subgraph route " + poly_text(b), m);
    };
    if (!spec.graphs.empty()) {
        for (const auto& m : spec.graphs) check(m);
        return r;
    }
    for_each_connected_orientation(spec.n_max, check);
    return r;
}

SuiteReport suite_recurrences(const SweepSpec& spec) {
    SuiteReport r{"recurrences"};
    std::mt19937_64 rng(spec.seed);
    auto check = [&](const MixedGraph& m) {
        ++r.checked;
        for (Vertex u = 0; u < m.order(); ++u) {
            const CharPoly res = vertex_recurrence_residual(m, u);
            if (!res.is_zero()) return r.fail("vertex recurrence residual " + res.str() + " at " + std::to_string(u), m);
        }
        for (const auto& e : m.edges()) {
            const CharPoly res = edge_recurrence_residual(m, e.u, e.v);
            if (!res.is_zero())
                return r.fail("edge recurrence residual " + res.str() + " at " + std::to_string(e.u) + " " + std::to_string(e.v), m);
            if (is_cut_edge(m, e.u, e.v)) {
                const CharPoly cut = cut_edge_residual(m, e.u, e.v);
                if (!cut.is_zero()) return r.fail("cut-edge product residual " + cut.str(), m);
            }
        }
    };
    if (!spec.graphs.empty()) {
        for (const auto& m : spec.graphs) check(m);
        return r;
    }
    for (int n = 1; n <= spec.n_max; ++n)
        for (const auto& g : connected_graphs(n))
            for (int s = 0; s < spec.samples; ++s) {
                std::vector<int> digits(g.size());
                for (auto& d : digits) d = static_cast<int>(rng() % 3);
                check(orientation_from_digits(g, digits));
            }
    return r;
}

namespace {

// Every admissible labelling with label 1 on each component root.
void for_each_admissible(const MixedGraph& m, const std::function<void(const AdmissiblePartition&)>& visit) {
    const int n = m.order();
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0), root(n, 0);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = root[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            const Vertex x = order[head++];
            for (Vertex y : m.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
        }
    }
    AdmissiblePartition p{std::vector<T6Element>(n)};
    std::vector<char> done(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            visit(p);
            return;
        }
        const Vertex v = order[i];
        for (int t = 0; t < (root[v] ? 1 : 6); ++t) {
            const T6Element th(t);
            bool ok = true;
            for (Vertex a : m.neighbors(v)) {
                if (!done[a]) continue;
                const int e = (p.label[a].conj() * T6Element(m.gain_exponent(a, v)) * th).exponent();
                if (e != 0 && e != 1 && e != 5) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            p.label[v] = th;
            done[v] = 1;
            rec(i + 1);
            done[v] = 0;
        }
    };
    rec(0);
}

}  // namespace

SuiteReport suite_switching_invariance(const SweepSpec& spec) {
    SuiteReport r{"switching-invariance"};
    long long two_way = 0, three_way = 0, converses = 0;
    for (int n = 1; n <= spec.n_max && r.passed; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (!r.passed) break;
            std::vector<CharPoly> polys;
            polys.reserve(pow3(g.size()));
            for_each_orientation(g, [&](const MixedGraph& m) { polys.push_back(charpoly_exact(m)); });
            std::uint64_t idx = 0;
            for_each_orientation(g, [&](const MixedGraph& m) {
                const CharPoly& p = polys[idx++];
                if (!r.passed) return;
                ++r.checked;
                ++converses;
                if (!(polys[orientation_code(converse(m))] == p)) return r.fail("converse changed the spectrum", m);

                for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
                    std::vector<bool> in_w(n);
                    SwitchingFunction theta{std::vector<T6Element>(n)};
                    for (Vertex v = 0; v < n; ++v) {
                        in_w[v] = (mask >> v) & 1;
                        theta.theta[v] = in_w[v] ? T6Element::one() : T6Element::omega_bar();
                    }
                    const SwitchOutcome via_theta = apply_switching(m, theta);
                    std::optional<MixedGraph> out;
                    try {
                        out = two_way_switch(m, in_w);
                    } catch (const SwitchingError&) {
                    }
                    if (out.has_value() != via_theta.ok()) return r.fail("two-way precondition disagrees with its diagonal form", m);
                    if (!out) continue;
                    ++two_way;
                    if (!(*out == *via_theta.graph)) return r.fail("two-way switch disagrees with its diagonal form", m);
                    if (!(polys[orientation_code(*out)] == p)) return r.fail("two-way switch changed the spectrum", m);
                }

                for_each_admissible(m, [&](const AdmissiblePartition& part) {
                    if (!r.passed) return;
                    ++three_way;
                    const MixedGraph out = three_way_switch(m, part);
                    const SwitchOutcome via_theta = apply_switching(m, SwitchingFunction{part.label});
                    if (!via_theta.ok() || !(*via_theta.graph == out))
                        return r.fail("three-way switch disagrees with its diagonal form", m);
                    if (!(polys[orientation_code(out)] == p)) return r.fail("three-way switch changed the spectrum", m);
                });
            });
        }
    r.notes.push_back("converses=" + std::to_string(converses) + " two-way=" + std::to_string(two_way) +
                      " three-way=" + std::to_string(three_way));
    return r;
}

SuiteReport suite_interlacing(const SweepSpec& spec) {
    SuiteReport r{"interlacing"};
    std::mt19937_64 rng(spec.seed);
    const int n_hi = std::max(spec.n_max, 8);
    const int trials = std::max(1, spec.samples) * 100;
    for (int t = 0; t < trials && r.passed; ++t) {
        const int n = 2 + static_cast<int>(rng() % (n_hi - 1));
        const MixedGraph m = random_mixed_graph(n, 0.5, rng);
        ++r.checked;
        const CharPoly p = charpoly_exact(m);
        const auto lam = eigenvalues(m).eigenvalues;

        const Vertex u = static_cast<Vertex>(rng() % n);
        const auto mu = eigenvalues(m.without_vertices({u})).eigenvalues;
        for (int i = 0; i + 1 < n; ++i)
            if (mu[i] > lam[i] + 1e-8 || mu[i] < lam[i + 1] - 1e-8) {
                r.fail("eigenvalues of M-" + std::to_string(u) + " do not interlace", m);
                break;
            }

        double scale = 0;
        for (const auto& c : p.coeffs()) scale = std::max(scale, std::fabs(c.get_d()));
        double sum_sq = 0;
        for (double x : lam) {
            long double v = 0;
            for (const auto& c : p.coeffs()) v = v * x + c.get_d();
            if (std::fabs(static_cast<double>(v)) >= 1e-6 * n * scale) r.fail("numeric eigenvalue is not a root", m);
            sum_sq += x * x;
        }
        if (std::fabs(sum_sq - 2.0 * m.size()) > 1e-8 * std::max(1, m.size())) r.fail("sum of squared eigenvalues is not 2m", m);
        if (!trace_square_check(m)) r.fail("c_2 != -m", m);
        if (!(p.c(1) == 0)) r.fail("c_1 != 0", m);

        // bipartite symmetry
        std::vector<int> side(n, -1);
        bool bipartite = true;
        for (Vertex s = 0; s < n && bipartite; ++s) {
            if (side[s] >= 0) continue;
            side[s] = 0;
            std::vector<Vertex> q{s};
            for (std::size_t h = 0; h < q.size() && bipartite; ++h)
                for (Vertex y : m.neighbors(q[h])) {
                    if (side[y] < 0) {
                        side[y] = 1 - side[q[h]];
                        q.push_back(y);
                    } else if (side[y] == side[q[h]]) {
                        bipartite = false;
                    }
                }
        }
        if (bipartite)
            for (int k = 1; k <= n; k += 2)
                if (p.c(k) != 0) r.fail("bipartite graph with a nonzero odd coefficient", m);

        const MixedGraph other = random_mixed_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
        if (!(charpoly_exact(disjoint_union(m, other)) == p * charpoly_exact(other)))
            r.fail("disjoint union is not the product", m);
        if (!(build_nmatrix(complement(m)) == complement_nmatrix(build_nmatrix(m))))
            r.fail("complement relation J - N - I fails", m);
    }
    for (int n = 3; n <= 11 && r.passed; n += 2) {
        ++r.checked;
        const CharPoly neg = charpoly_exact(build_family({Family::CycleKind, {n}, '='}));
        const CharPoly pos = charpoly_exact(build_family({Family::CycleKind, {n}, '0'}));
        if (!(neg == BigInt(-1) * pos.reflected()))
            r.fail("odd negative cycle is not the negated positive cycle", build_family({Family::CycleKind, {n}, '='}));
    }
    return r;
}

SuiteReport suite_delta_bound(const SweepSpec& spec) {
    SuiteReport r{"delta-bound"};
    long long extremal = 0;
    auto check = [&](const MixedGraph& m) {
        if (!r.passed) return;
        ++r.checked;
        const DeltaBoundReport d = delta_bound_report(m);
        if (!d.bound_holds) return r.fail("spectral radius exceeds the maximum degree", m);
        if (!m.underlying().connected()) return;
        if (d.radius_equals_delta != d.extremal.has_value())
            return r.fail(d.radius_equals_delta ? "radius equals Delta without an extremal partition"
                                                : "extremal partition found but radius is below Delta",
                          m);
        if (d.extremal) {
            ++extremal;
            if (!d.extremal->verify(m)) return r.fail("extremal partition fails verification", m);
        }
        if (m.order() > 0) {
            const double rho = spectral_radius(eigenvalues(m));
            const bool numeric_equal = std::fabs(rho - m.underlying().max_degree()) < 1e-7;
            if (numeric_equal != d.radius_equals_delta) return r.fail("exact and numeric radius disagree", m);
        }
    };
    if (!spec.graphs.empty()) {
        for (const auto& m : spec.graphs) check(m);
    } else {
        for_each_connected_orientation(spec.n_max, check);
    }
    r.notes.push_back("extremal=" + std::to_string(extremal));
    return r;
}

int forest_matching_number(const SimpleGraph& g) {
    // greedy: match a leaf with its neighbour, repeat
    const int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int matched = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v] || deg[v] != 1) continue;
            Vertex w = -1;
            for (Vertex x : g.neighbors(v))
                if (!gone[x]) w = x;
            gone[v] = gone[w] = 1;
            for (Vertex y : {v, w})
                for (Vertex x : g.neighbors(y))
                    if (!gone[x]) --deg[x];
            ++matched;
            progress = true;
        }
    }
    return matched;
}

SuiteReport check_tree_nullity(int n_max, int samples, std::uint64_t seed) {
    SuiteReport r{"tree-nullity"};
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples && r.passed; ++s) {
        const int n = 1 + static_cast<int>(rng() % n_max);
        const MixedGraph t = random_mixed_tree(n, rng);
        ++r.checked;
        const int expected = n - 2 * forest_matching_number(t.underlying());
        const int got = rank_exact(t).nullity;
        if (got != expected)
            r.fail("tree nullity " + std::to_string(got) + " but n - 2mu = " + std::to_string(expected), t);
    }
    return r;
}

SuiteReport check_rank_classifiers(int n_max) {
    SuiteReport r{"rank-classifiers"};
    long long rank2 = 0, rank3 = 0;
    for (int n = 1; n <= n_max && r.passed; ++n)
        for (const auto& g : all_graphs(n)) {
            if (!r.passed) break;
            const bool connected = g.connected();
            for_each_orientation(g, [&](const MixedGraph& m) {
                if (!r.passed) return;
                ++r.checked;
                const RankResult rr = rank_exact(m);
                const auto r2 = rank2_recognize(m);
                if ((rr.rank == 2) != r2.has_value())
                    return r.fail("rank " + std::to_string(rr.rank) + " but rank-2 recognizer says " + (r2 ? "yes" : "no"), m);
                if (r2) {
                    ++rank2;
                    const auto replay = replay_witness(m, r2->witness);
                    if (!replay || !(*replay == m.undirected())) return r.fail("rank-2 witness does not replay", m);
                }
                if (connected) {
                    const auto r3 = rank3_recognize(m);
                    if ((rr.rank == 3) != r3.has_value())
                        return r.fail("rank " + std::to_string(rr.rank) + " but rank-3 recognizer says " + (r3 ? *r3 : "no"), m);
                    if (r3) ++rank3;
                }
                for (const auto& e : m.edges())
                    if ((m.degree(e.u) == 1 || m.degree(e.v) == 1) && !pendant_reduction_check(m, e.u, e.v))
                        return r.fail("pendant edge changed the nullity", m);
                if (n > 1 && rank_exact(m.without_vertices({n - 1})).rank > rr.rank)
                    return r.fail("induced subgraph has larger rank", m);
            });
        }
    r.notes.push_back("rank2=" + std::to_string(rank2) + " rank3=" + std::to_string(rank3));
    return r;
}

SuiteReport suite_rank_table(const SweepSpec& spec) {
    SuiteReport r{"rank-table"};
    merge(r, check_rank_classifiers(spec.n_max));
    merge(r, check_tree_nullity(std::max(9, spec.n_max), std::max(500, spec.samples), spec.seed));
    return r;
}

SuiteReport suite_nullity_cycles(const SweepSpec& spec) {
    SuiteReport r{"nullity-cycles"};
    const std::pair<char, CycleClass> kinds[] = {{'0', CycleClass::Positive},
                                                 {'=', CycleClass::Negative},
                                                 {'+', CycleClass::SemiPositive},
                                                 {'-', CycleClass::SemiNegative}};
    for (int n = 3; n <= std::max(12, spec.n_max); ++n)
        for (auto [kind, cls] : kinds) {
            ++r.checked;
            const MixedGraph c = build_family({Family::CycleKind, {n}, kind});
            const auto cycles = enumerate_cycles(c.underlying());
            if (cycles.size() != 1 || classify_cycle(cycle_weight(c, cycles.front())) != cls) {
                r.fail("cycle constructor produced the wrong class", c);
                continue;
            }
            int expected = 0;
            if (n % 4 == 2 && cls == CycleClass::Negative) expected = 2;
            if (n % 4 == 0 && cls == CycleClass::Positive) expected = 2;
            const int from_poly = charpoly_exact(c).zero_multiplicity();
            const int from_rank = rank_exact(c).nullity;
            if (from_poly != expected || from_rank != expected)
                r.fail("nullity " + std::to_string(from_poly) + " for " + std::string(to_string(cls)) + " C" +
                           std::to_string(n) + ", table says " + std::to_string(expected),
                       c);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Class sweep over all orientations, keyed by the switching class.

namespace {

struct SweepPlan {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> order;
    std::vector<int> parent_edge;  // per vertex, -1 for roots
    std::vector<Vertex> parent;
    std::vector<int> nontree;      // edge indices, in edge order
};

SweepPlan make_plan(const SimpleGraph& g) {
    SweepPlan p;
    const int n = g.order();
    p.edges = g.edges();
    p.parent_edge.assign(n, -1);
    p.parent.assign(n, -1);
    std::map<std::pair<Vertex, Vertex>, int> index;
    for (int i = 0; i < static_cast<int>(p.edges.size()); ++i) index[p.edges[i]] = i;
    std::vector<char> seen(n, 0), tree(p.edges.size(), 0);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::size_t head = p.order.size();
        p.order.push_back(r);
        while (head < p.order.size()) {
            const Vertex x = p.order[head++];
            for (Vertex y : g.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = 1;
                p.parent[y] = x;
                p.parent_edge[y] = index[{std::min(x, y), std::max(x, y)}];
                tree[p.parent_edge[y]] = 1;
                p.order.push_back(y);
            }
        }
    }
    for (int i = 0; i < static_cast<int>(p.edges.size()); ++i)
        if (!tree[i]) p.nontree.push_back(i);
    return p;
}

// Same normalisation as switching_class_key, packed base 6.
std::uint64_t fast_key(const SweepPlan& p, const std::vector<int>& exps, std::vector<int>& theta) {
    for (Vertex v : p.order) {
        const int i = p.parent_edge[v];
        if (i < 0) {
            theta[v] = 0;
            continue;
        }
        const Vertex par = p.parent[v];
        const int g = par == p.edges[i].first ? exps[i] : (6 - exps[i]) % 6;
        theta[v] = (theta[par] - g + 6) % 6;
    }
    std::uint64_t key = 0, ckey = 0;
    for (int i : p.nontree) {
        const int val = (6 - theta[p.edges[i].first] + exps[i] + theta[p.edges[i].second]) % 6;
        key = key * 6 + val;
        ckey = ckey * 6 + (6 - val) % 6;
    }
    return std::min(key, ckey);
}

std::uint64_t pack_key(const std::vector<std::uint8_t>& key) {
    std::uint64_t k = 0;
    for (auto d : key) k = k * 6 + d;
    return k;
}

struct ClassVisit {
    const SimpleGraph* g;
    std::uint64_t key;
    const MixedGraph* rep;
    const CharPoly* poly;
    int poly_id;
    long long members;  // orientations in this class (known only at the end; 0 during the sweep)
};

// Calls `on_class` once per switching class of each (connected) underlying graph.
// Returns the number of orientations visited.
long long sweep_classes(int n_max, const std::function<void(const ClassVisit&)>& on_class,
                        std::map<CharPoly, int>& poly_ids, bool connected_only = true) {
    long long visited = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& g : all_graphs(n)) {
            if (connected_only && !g.connected()) continue;
            const SweepPlan plan = make_plan(g);
            std::unordered_map<std::uint64_t, char> seen;
            std::vector<int> digits(g.size(), 0), exps(g.size(), 0), theta(n, 0);
            do {
                ++visited;
                for (std::size_t i = 0; i < digits.size(); ++i) exps[i] = kDigitGain[digits[i]];
                const std::uint64_t key = fast_key(plan, exps, theta);
                if (!seen.emplace(key, 1).second) continue;
                const MixedGraph rep = orientation_from_digits(g, digits);
                const CharPoly poly = charpoly_exact(rep);
                auto it = poly_ids.find(poly);
                if (it == poly_ids.end()) it = poly_ids.emplace(poly, static_cast<int>(poly_ids.size())).first;
                on_class(ClassVisit{&g, key, &rep, &it->first, it->second, 0});
            } while (next_digits(digits));
        }
    return visited;
}

std::vector<std::vector<Vertex>> isomorphisms(const MixedGraph& from, const SimpleGraph& to) {
    std::vector<std::vector<Vertex>> out;
    const int n = to.order();
    if (from.order() != n || from.size() != to.size()) return out;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : from.edges())
            if (!to.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// switching-class key -> catalog tag, for every catalog member relabelled onto g
std::map<std::uint64_t, std::string> catalog_keys(const SimpleGraph& g, int alpha2) {
    std::map<std::uint64_t, std::string> keys;
    for (const auto& entry : catalog_members(alpha2, g.order()))
        for (const auto& perm : isomorphisms(entry.graph, g))
            keys.emplace(pack_key(switching_class_key(entry.graph.relabelled(perm))), entry.tag);
    return keys;
}

}  // namespace

SuiteReport check_catalog_forward(int max_order) {
    SuiteReport r{"catalog-forward"};
    for (int alpha2 : {2, 3, 4})
        for (int order = 1; order <= max_order && r.passed; ++order)
            for (const auto& entry : catalog_members(alpha2, order)) {
                ++r.checked;
                if (!radius_strictly_below(entry.graph, alpha2)) {
                    r.fail(entry.tag + " is not below the threshold for alpha2=" + std::to_string(alpha2), entry.graph);
                    break;
                }
                if (!small_radius_classify(entry.graph, alpha2).tag) {
                    r.fail(entry.tag + " does not classify", entry.graph);
                    break;
                }
            }
    return r;
}

SuiteReport check_radius_catalogs(const SweepSpec& spec) {
    SuiteReport r{"radius-catalogs"};
    std::vector<int> alphas;
    if (spec.alpha2 == 0) alphas = {2, 3, 4};
    else if (spec.alpha2 >= 2 && spec.alpha2 <= 4) alphas = {spec.alpha2};
    else throw UsageError("alpha2 must be 0, 2, 3 or 4");

    struct Verdicts {
        bool below[5] = {};
    };
    std::map<CharPoly, int> poly_ids;
    std::vector<Verdicts> verdicts;
    std::map<int, long long> below_count;
    long long classes = 0;

    const SimpleGraph* current = nullptr;
    std::map<int, std::map<std::uint64_t, std::string>> keys;  // per alpha, for *current

    // Hard failures stop the sweep; catalog misses are tallied so the report lists all of them.
    bool stop = false;
    std::map<int, long long> unmatched;
    std::set<std::pair<int, CharPoly>> unmatched_spectra;
    auto hard_fail = [&](const std::string& why, const MixedGraph& m) {
        stop = true;
        r.passed = true;  // a hard failure takes precedence over an earlier miss
        r.fail(why, m);
    };

    r.checked += sweep_classes(spec.n_max, [&](const ClassVisit& c) {
        if (stop) return;
        ++classes;
        if (current != c.g) {
            current = c.g;
            keys.clear();
            for (int a : alphas) keys[a] = catalog_keys(*c.g, a);
        }
        if (c.poly_id == static_cast<int>(verdicts.size())) {
            Verdicts v;
            for (int a : alphas) v.below[a] = radius_strictly_below(*c.poly, a);
            verdicts.push_back(v);
        }
        const Verdicts& v = verdicts[c.poly_id];
        for (int a : alphas) {
            const bool member = keys[a].count(c.key) > 0;
            if (v.below[a]) ++below_count[a];
            if (member && !v.below[a])
                return hard_fail("catalog class " + keys[a][c.key] + " is not below the alpha2=" + std::to_string(a) + " threshold", *c.rep);
            if (v.below[a] && !member) {
                ++unmatched[a];
                if (unmatched_spectra.emplace(a, *c.poly).second)
                    r.notes.push_back("unmatched alpha2=" + std::to_string(a) + " n=" + std::to_string(c.rep->order()) +
                                      " m=" + std::to_string(c.rep->size()) + " charpoly " + c.poly->str());
                r.fail("below the alpha2=" + std::to_string(a) + " threshold but in no catalog class", *c.rep);
                continue;
            }
            if (v.below[a]) {
                // the library path must find a tag too
                const auto rc = small_radius_classify(*c.rep, a);
                if (!rc.tag) return hard_fail("classifier found no tag", *c.rep);
            }
        }
    }, poly_ids);

    if (std::find(alphas.begin(), alphas.end(), 4) != alphas.end()) merge(r, check_catalog_forward(10));
    r.notes.push_back("switching-classes=" + std::to_string(classes) + " charpolys=" + std::to_string(poly_ids.size()));
    for (int a : alphas)
        r.notes.push_back("below alpha2=" + std::to_string(a) + ": " + std::to_string(below_count[a]) + " classes, " +
                          std::to_string(unmatched[a]) + " unmatched");
    return r;
}

SuiteReport check_pm_one_spectrum(int n_max) {
    SuiteReport r{"pm-one-spectrum"};
    std::map<CharPoly, int> poly_ids;
    std::vector<CharPoly> targets{CharPoly::from_ascending({BigInt(1)})};
    const CharPoly factor = CharPoly::from_ascending({BigInt(-1), BigInt(0), BigInt(1)});
    long long matchings = 0;
    r.checked += sweep_classes(n_max, [&](const ClassVisit& c) {
        if (!r.passed) return;
        const MixedGraph& m = *c.rep;
        const int n = m.order();
        while (static_cast<int>(targets.size()) <= n / 2) targets.push_back(targets.back() * factor);
        const bool spectrum = n % 2 == 0 && *c.poly == targets[n / 2];
        bool matching = n % 2 == 0;
        for (Vertex v = 0; v < n && matching; ++v) matching = m.degree(v) == 1;
        if (matching) {
            ++matchings;
            // any orientation of a matching switches to the undirected one
            if (!switching_equivalent(m, m.undirected()).equivalent) return r.fail("matching is not switching equivalent to its underlying graph", m);
        }
        if (spectrum != matching)
            return r.fail(spectrum ? "spectrum {1,-1} but not a perfect matching" : "perfect matching without spectrum {1,-1}", m);
        try {
            if (pm_one_spectrum_recognize(m) != spectrum) return r.fail("recognizer disagrees", m);
        } catch (const std::logic_error& e) {
            return r.fail(e.what(), m);
        }
    }, poly_ids, false);
    r.notes.push_back("perfect-matching classes=" + std::to_string(matchings));
    return r;
}

SuiteReport suite_radius_catalogs(const SweepSpec& spec) {
    SuiteReport r = check_radius_catalogs(spec);
    merge(r, check_pm_one_spectrum(spec.n_max));
    return r;
}

MixedGraph complete_bipartite(int a, int b, int t) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v, T6Element::one()});
    return MixedGraph(a + b + t, std::move(edges));
}

namespace {

// Complete tripartite graph with parts a, b, c; pairs between the first two parts carry `gain_ab`.
MixedGraph complete_tripartite(int a, int b, int c, T6Element gain_ab) {
    std::vector<Edge> edges;
    const int n = a + b + c;
    auto part = [&](Vertex v) { return v < a ? 0 : v < a + b ? 1 : 2; };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (part(u) == part(v)) continue;
            edges.push_back({u, v, part(u) == 0 && part(v) == 1 ? gain_ab : T6Element::one()});
        }
    return MixedGraph(n, std::move(edges));
}

}  // namespace

SuiteReport suite_cospectral_families(const SweepSpec& spec) {
    SuiteReport r{"cospectral-families"};

    // K_{4t,9s} and K_{6t,6s} padded to the same order
    for (int t = 1; t <= 2 && r.passed; ++t)
        for (int s = 1; s <= 2 && r.passed; ++s) {
            ++r.checked;
            const int n = std::max(4 * t + 9 * s, 6 * t + 6 * s);
            const MixedGraph g1 = complete_bipartite(4 * t, 9 * s, n - 4 * t - 9 * s);
            const MixedGraph g2 = complete_bipartite(6 * t, 6 * s, n - 6 * t - 6 * s);
            if (!(charpoly_exact(g1) == charpoly_exact(g2))) r.fail("padded complete bipartite pair is not cospectral", g1);
            if (switching_equivalent(g1, g2).equivalent || find_switching_isomorphism(g1, g2))
                r.fail("padded complete bipartite pair is switching equivalent", g1);
            if (t == 1 && s == 1) {
                const auto report = find_cospectral({g1, g2});
                if (report.classes.size() != 1 || report.classes.front().subclasses.size() != 2)
                    r.fail("cospectral report does not show one class with two subclasses", g1);
            }
        }

    {
        ++r.checked;
        const MixedGraph k = complete_tripartite(8, 15, 1, T6Element::one());
        const MixedGraph mk = complete_tripartite(3, 5, 16, T6Element::omega());
        if (!(charpoly_exact(k) == charpoly_exact(mk))) r.fail("K_{8,15,1} pair is not cospectral", mk);
        if (find_switching_isomorphism(k, mk)) r.fail("K_{8,15,1} pair is switching equivalent", mk);
        const MixedGraph tk = twin_reduction(k).reduced;
        const MixedGraph tm = twin_reduction(mk).reduced;
        const auto cycles = enumerate_cycles(tm.underlying());
        if (tk.order() != 3 || tm.order() != 3 || cycles.size() != 1 ||
            classify_cycle(cycle_weight(tm, cycles.front())) != CycleClass::SemiPositive)
            r.fail("twin reduction is not a semi-positive triangle", mk);
        if (rank_exact(k).rank != 3 || rank_exact(mk).rank != 3) r.fail("K_{8,15,1} pair is not of rank 3", mk);
    }

    // connected cospectral rank-2 classes must be switching equivalent up to isomorphism
    std::map<CharPoly, int> poly_ids;
    std::map<int, std::vector<MixedGraph>> rank2;
    r.checked += sweep_classes(spec.n_max, [&](const ClassVisit& c) {
        if (rank_from_charpoly(*c.poly) == 2) rank2[c.poly_id].push_back(*c.rep);
    }, poly_ids);
    long long pairs = 0;
    for (const auto& [id, reps] : rank2)
        for (std::size_t i = 1; i < reps.size() && r.passed; ++i) {
            ++pairs;
            if (!find_switching_isomorphism(reps.front(), reps[i]))
                r.fail("cospectral connected rank-2 graphs are not switching equivalent", reps[i]);
        }
    r.notes.push_back("rank2-spectra=" + std::to_string(rank2.size()) + " cospectral-rank2-class-pairs=" + std::to_string(pairs));
    return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"charpoly-dual", "recurrences",  "switching-invariance",
                                                   "interlacing",   "delta-bound",  "rank-table",
                                                   "nullity-cycles", "radius-catalogs", "cospectral-families"};
    return names;
}

SuiteReport verify_suite(const std::string& name, const SweepSpec& spec) {
    if (name == "charpoly-dual") return suite_charpoly_dual(spec);
    if (name == "recurrences") return suite_recurrences(spec);
    if (name == "switching-invariance") return suite_switching_invariance(spec);
    if (name == "interlacing") return suite_interlacing(spec);
    if (name == "delta-bound") return suite_delta_bound(spec);
    if (name == "rank-table") return suite_rank_table(spec);
    if (name == "nullity-cycles") return suite_nullity_cycles(spec);
    if (name == "radius-catalogs") return suite_radius_catalogs(spec);
    if (name == "cospectral-families") return suite_cospectral_families(spec);
    throw UsageError("unknown suite " + name);
}

// ---------------------------------------------------------------------------

MixedGraph random_mixed_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    const auto threshold = static_cast<std::uint64_t>(p * 1e6);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 1000000 < threshold) edges.push_back({u, v, T6Element(kDigitGain[rng() % 3])});
    return MixedGraph(n, std::move(edges));
}

MixedGraph random_mixed_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw UsageError("tree order must be positive");
    std::vector<Edge> edges;
    if (n == 2) edges.push_back({0, 1, T6Element(kDigitGain[rng() % 3])});
    if (n > 2) {
        std::vector<int> code(n - 2), degree(n, 1);
        for (auto& c : code) {
            c = static_cast<int>(rng() % n);
            ++degree[c];
        }
        for (int c : code) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.push_back({leaf, c, T6Element(kDigitGain[rng() % 3])});
            --degree[leaf];
            --degree[c];
        }
        std::vector<Vertex> last;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1) last.push_back(v);
        edges.push_back({last[0], last[1], T6Element(kDigitGain[rng() % 3])});
    }
    return MixedGraph(n, std::move(edges));
}

}  // namespace mixgraph
