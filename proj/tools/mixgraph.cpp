// Command-line front end for the mixed-graph toolkit.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mixgraph/catalog.hpp"
#include "mixgraph/classify.hpp"
#include "mixgraph/harness.hpp"
#include "mixgraph/nmatrix.hpp"
#include "mixgraph/switching.hpp"

using namespace mixgraph;

namespace {

std::string perm_str(const std::vector<Vertex>& perm) {
    std::ostringstream out;
    out << "perm:";
    for (Vertex v : perm) out << ' ' << v;
    return out.str();
}

std::vector<MixedGraph> collect_inputs(const std::vector<std::string>& inputs) {
    namespace fs = std::filesystem;
    std::vector<MixedGraph> graphs;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(in))
                if (e.is_regular_file()) files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files)
                for (auto& m : read_graph_stream_file(f.string())) graphs.push_back(std::move(m));
        } else {
            for (auto& m : read_graph_stream_file(in)) graphs.push_back(std::move(m));
        }
    }
    return graphs;
}

int cmd_spectrum(const std::string& file, double tol) {
    const MixedGraph m = read_graph_file(file);
    const Spectrum s = eigenvalues(m, tol);
    std::cout << "eigenvalues:" << std::setprecision(12);
    for (double x : s.eigenvalues) std::cout << ' ' << x;
    std::cout << '\n' << charpoly_exact(m).machine_line() << '\n';
    return 0;
}

int cmd_charpoly(const std::string& file, const std::string& method) {
    const MixedGraph m = read_graph_file(file);
    if (method == "exact") {
        std::cout << charpoly_exact(m).machine_line() << '\n';
    } else if (method == "subgraph") {
        std::cout << charpoly_subgraphs(m).machine_line() << '\n';
    } else {
        const CharPoly a = charpoly_exact(m);
        const CharPoly b = charpoly_subgraphs(m);
        std::cout << a.machine_line() << '\n' << b.machine_line() << '\n';
        if (!(a == b)) {
            std::cerr << "error: the two routes disagree\n";
            return 1;
        }
    }
    return 0;
}

int cmd_rank(const std::string& file) {
    const MixedGraph m = read_graph_file(file);
    const RankResult r = rank_exact(m);
    std::cout << "rank: " << r.rank << " nullity=" << r.nullity << '\n';
    if (const auto r2 = rank2_recognize(m))
        std::cout << "rank2: K_{" << r2->a << ',' << r2->b << "} isolated=" << r2->t << '\n';
    if (m.underlying().connected())
        if (const auto r3 = rank3_recognize(m)) std::cout << "rank3: " << *r3 << '\n';
    return 0;
}

int cmd_classify(const std::string& file, int alpha2) {
    const MixedGraph m = read_graph_file(file);
    try {
        std::cout << small_radius_classify(m, alpha2).str() << '\n';
    } catch (const std::logic_error& e) {
        // a "below" verdict with no catalog member
        RadiusClass rc{alpha2, radius_strictly_below(m, alpha2), std::string("unmatched")};
        std::cout << rc.str() << '\n';
        std::cerr << "warning: " << e.what() << '\n';
        return 3;
    }
    const DeltaBoundReport d = delta_bound_report(m);
    if (d.extremal) std::cout << d.extremal->str() << '\n';
    return 0;
}

int cmd_switch_equiv(const std::string& f1, const std::string& f2) {
    const MixedGraph a = read_graph_file(f1);
    const MixedGraph b = read_graph_file(f2);
    const EquivalenceVerdict v = switching_equivalent(a, b);
    if (v.equivalent) {
        std::cout << "equivalent: yes\n" << render_witness(*v.witness) << '\n';
        return 0;
    }
    if (const auto iso = find_switching_isomorphism(a, b)) {
        std::cout << "equivalent: up-to-isomorphism\n" << perm_str(iso->perm) << '\n'
                  << render_witness(iso->switching) << '\n';
        return 0;
    }
    std::cout << "equivalent: no reason=" << v.reason << '\n';
    return 0;
}

int cmd_enumerate(const std::string& underlying, int all_n, bool dedupe) {
    std::vector<SimpleGraph> bases;
    if (!underlying.empty()) bases.push_back(read_graph_file(underlying).underlying());
    else bases = connected_graphs(all_n);
    for (const auto& g : bases)
        for (const auto& m : enumerate_orientations(g, dedupe ? Dedupe::Switching : Dedupe::None))
            std::cout << serialize_graph(m);
    return 0;
}

int cmd_cospectral(const std::vector<std::string>& inputs) {
    std::cout << find_cospectral(collect_inputs(inputs)).str();
    return 0;
}

int cmd_verify(const std::string& suite, const SweepSpec& spec) {
    const SuiteReport r = verify_suite(suite, spec);
    std::cout << r.str();
    return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of mixed graphs under the Hermitian adjacency matrix of the second kind"};
    app.require_subcommand(1);

    std::string file, file2, method = "exact", underlying, suite;
    std::vector<std::string> inputs;
    double tol = 1e-12;
    int alpha2 = 4, all_n = 0;
    bool dedupe_switching = false;
    std::string dedupe;
    SweepSpec spec;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and characteristic polynomial");
    spectrum->add_option("file", file, "graph file")->required();
    spectrum->add_option("--tol", tol, "Jacobi tolerance");

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial coefficients");
    charpoly->add_option("file", file)->required();
    charpoly->add_option("--method", method)->check(CLI::IsMember({"exact", "subgraph", "both"}));

    auto* rank = app.add_subcommand("rank", "rank, nullity and low-rank shape");
    rank->add_option("file", file)->required();

    auto* classify = app.add_subcommand("classify", "small spectral radius verdict and catalog tag");
    classify->add_option("file", file)->required();
    classify->add_option("--alpha2", alpha2, "squared threshold")->check(CLI::IsMember({2, 3, 4}));

    auto* equiv = app.add_subcommand("switch-equiv", "switching equivalence with witness");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();

    auto* enumerate = app.add_subcommand("enumerate", "all orientations of an underlying graph");
    auto* under_opt = enumerate->add_option("--underlying", underlying, "graph file; gains are ignored");
    auto* alln_opt = enumerate->add_option("--all-n", all_n, "every connected graph of this order")->check(CLI::Range(1, 7));
    under_opt->excludes(alln_opt);
    enumerate->add_option("--dedupe", dedupe)->check(CLI::IsMember({"none", "switching"}));

    auto* cospectral = app.add_subcommand("cospectral", "group inputs by spectrum");
    cospectral->add_option("--inputs", inputs, "directories or graph files")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--nmax", spec.n_max)->check(CLI::Range(1, 7));
    verify->add_option("--alpha2", spec.alpha2, "0 for every threshold")->check(CLI::IsMember({0, 2, 3, 4}));
    verify->add_option("--samples", spec.samples);
    verify->add_option("--seed", spec.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version exit 0; every other command-line mistake is a usage error
        return app.exit(e) == 0 ? 0 : 2;
    }
    dedupe_switching = dedupe == "switching";

    try {
        if (*spectrum) return cmd_spectrum(file, tol);
        if (*charpoly) return cmd_charpoly(file, method);
        if (*rank) return cmd_rank(file);
        if (*classify) return cmd_classify(file, alpha2);
        if (*equiv) return cmd_switch_equiv(file, file2);
        if (*enumerate) {
            if (underlying.empty() && all_n == 0) throw UsageError("enumerate needs --underlying or --all-n");
            return cmd_enumerate(underlying, all_n, dedupe_switching);
        }
        if (*cospectral) return cmd_cospectral(inputs);
        if (*verify) return cmd_verify(suite, spec);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
