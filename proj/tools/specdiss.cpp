#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specdiss/dissociation.hpp"
#include "specdiss/enumeration.hpp"
#include "specdiss/families.hpp"
#include "specdiss/graph6.hpp"
#include "specdiss/spectral.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

namespace {

std::string resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SPECDISS_CACHE_DIR")) return env;
    return "corpus_cache";
}

// "-" reads graph6 lines from stdin, otherwise the argument is one graph6 string.
std::vector<Graph> input_graphs(const std::string& arg) {
    if (arg == "-") return read_graph6_lines(std::cin);
    return {graph6_decode(arg)};
}

std::string format_set(VertexSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (VertexSet rest = s; rest; rest &= rest - 1) {
        if (!first) out << ',';
        out << lowest_vertex(rest);
        first = false;
    }
    out << '}';
    return out.str();
}

Partition parse_blocks(const std::string& text, int n) {
    Partition blocks;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, '|')) {
        VertexSet mask = 0;
        std::stringstream verts(group);
        std::string v;
        while (std::getline(verts, v, ',')) {
            int idx = std::stoi(v);
            if (idx < 0 || idx >= n) throw std::invalid_argument("block vertex out of range");
            mask |= vbit(idx);
        }
        if (mask) blocks.push_back(mask);
    }
    return blocks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectra and dissociation numbers of small graphs"};
    app.require_subcommand(1);
    bool csv = false;

    std::string g6_arg, cache_flag, blocks_arg, spec_path, report_path;
    double alpha = 0.0;
    int n_arg = 0;

    auto* tau_cmd = app.add_subcommand("tau", "dissociation number and witness");
    tau_cmd->add_option("graph", g6_arg, "graph6 string or - for stdin")->required();

    auto* index_cmd = app.add_subcommand("index", "A_alpha index and Perron vector");
    index_cmd->add_option("graph", g6_arg, "graph6 string or - for stdin")->required();
    index_cmd->add_option("--alpha", alpha, "alpha in [0,1]")->required();

    auto* family_cmd = app.add_subcommand("family", "family constructors");
    auto* family_build = family_cmd->add_subcommand("build", "build from a JSON spec");
    family_build->add_option("spec", spec_path, "spec file path or inline JSON")->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "equitable quotient matrix");
    quotient_cmd->add_option("graph", g6_arg, "graph6 string")->required();
    quotient_cmd->add_option("--alpha", alpha, "alpha in [0,1]")->required();
    quotient_cmd->add_option("--blocks", blocks_arg, "partition, e.g. 0|1,2,3")->required();
    quotient_cmd->add_flag("--csv", csv, "tabular output as CSV");

    auto* enum_cmd = app.add_subcommand("enumerate", "generate a corpus cache");
    std::string kind_arg;
    enum_cmd->add_option("kind", kind_arg, "trees|connected|connected_bipartite")->required();
    enum_cmd->add_option("n", n_arg, "order")->required();
    enum_cmd->add_option("--cache-dir", cache_flag, "cache directory");
    enum_cmd->add_flag("--csv", csv, "tabular output as CSV");

    auto* verify_cmd = app.add_subcommand("verify", "run a theorem verification suite");
    std::string claim_arg, alpha_grid_arg;
    int verify_n = 0, verify_tau = -1, trials = 0;
    verify_cmd->add_option("claim", claim_arg, "claim id, e.g. THM_1_3")->required();
    verify_cmd->add_option("--n", verify_n, "max order");
    verify_cmd->add_option("--alpha-grid", alpha_grid_arg, "comma-separated alphas");
    verify_cmd->add_option("--tau", verify_tau, "restrict to one tau class");
    verify_cmd->add_option("--trials", trials, "randomized trial count");
    verify_cmd->add_option("--report", report_path, "report file (default <claim>.json)");
    verify_cmd->add_option("--cache-dir", cache_flag, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tau_cmd) {
            for (const Graph& g : input_graphs(g6_arg)) {
                DissociationResult r = dissociation_number(g);
                std::cout << r.tau << ' ' << format_set(r.witness) << '\n';
            }
        } else if (*index_cmd) {
            for (const Graph& g : input_graphs(g6_arg)) {
                SpectralResult r = spectral_radius(alpha_matrix(g, alpha), is_connected(g));
                std::cout << std::setprecision(15) << r.lambda << ' ';
                for (size_t i = 0; i < r.perron.size(); ++i)
                    std::cout << (i ? "," : "") << r.perron[i];
                std::cout << '\n';
            }
        } else if (*family_build) {
            std::string text = spec_path;
            if (!text.empty() && text[0] != '{') {
                std::ifstream in(spec_path);
                if (!in) throw std::invalid_argument("cannot open spec file: " + spec_path);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            std::cout << graph6_encode(build(spec_from_json(text))) << '\n';
        } else if (*quotient_cmd) {
            Graph g = graph6_decode(g6_arg);
            QuotientMatrix q = quotient_matrix(g, alpha, parse_blocks(blocks_arg, g.n));
            std::cout << std::setprecision(15);
            for (int i = 0; i < q.t; ++i)
                for (int j = 0; j < q.t; ++j)
                    std::cout << q.at(i, j) << (j + 1 == q.t ? '\n' : (csv ? ',' : ' '));
            std::cout << "spectral_radius " << quotient_spectral_radius(q) << '\n';
        } else if (*enum_cmd) {
            GraphCorpus corpus =
                generate(corpus_kind_from_name(kind_arg), n_arg, resolve_cache_dir(cache_flag));
            if (csv) {
                std::vector<double> grid = default_alpha_grid();
                std::cout << "g6,n,m,tau";
                for (double a : grid) std::cout << ",lambda_at_" << a;
                std::cout << '\n';
                std::vector<int> tau_of(corpus.members.size());
                for (const auto& [tau, ids] : corpus.by_tau)
                    for (int idx : ids) tau_of[idx] = tau;
                std::cout << std::setprecision(15);
                for (size_t i = 0; i < corpus.members.size(); ++i) {
                    const Graph& g = corpus.members[i];
                    std::cout << graph6_encode(g) << ',' << g.n << ',' << g.edge_count()
                              << ',' << tau_of[i];
                    for (double a : grid)
                        std::cout << ','
                                  << spectral_radius(alpha_matrix(g, a), true).lambda;
                    std::cout << '\n';
                }
            } else {
                std::cout << corpus.members.size() << " graphs, tau classes:";
                for (const auto& [tau, ids] : corpus.by_tau)
                    std::cout << ' ' << tau << ":" << ids.size();
                std::cout << '\n';
            }
        } else if (*verify_cmd) {
            VerifyParams params;
            params.n_max = verify_n;
            params.trials = trials;
            params.cache_dir = resolve_cache_dir(cache_flag);
            if (verify_tau >= 0) params.tau = verify_tau;
            if (!alpha_grid_arg.empty()) {
                std::stringstream ss(alpha_grid_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) params.alpha_grid.push_back(std::stod(tok));
            }
            ClaimId claim = claim_from_name(claim_arg);
            VerificationReport report = verify(claim, params);
            std::string path = report_path.empty()
                                   ? std::string(claim_name(claim)) + ".json"
                                   : report_path;
            std::ofstream out(path);
            out << report.to_json().dump(2) << '\n';
            std::cout << report.summary_line() << " -> " << path << '\n';
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
