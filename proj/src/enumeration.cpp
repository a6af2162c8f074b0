#include "specdiss/enumeration.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "specdiss/dissociation.hpp"
#include "specdiss/graph6.hpp"
#include "specdiss/parallel.hpp"

namespace specdiss {

const char* corpus_kind_name(CorpusKind kind) {
    switch (kind) {
        case CorpusKind::Trees: return "trees";
        case CorpusKind::Connected: return "connected";
        case CorpusKind::ConnectedBipartite: return "connected_bipartite";
    }
    throw std::logic_error("unknown corpus kind");
}

CorpusKind corpus_kind_from_name(const std::string& name) {
    if (name == "trees") return CorpusKind::Trees;
    if (name == "connected") return CorpusKind::Connected;
    if (name == "connected_bipartite") return CorpusKind::ConnectedBipartite;
    throw std::invalid_argument("unknown corpus kind: " + name);
}

Graph graph_from_code(const CanonicalCode& code) {
    Graph g = empty_graph(code.n);
    int bit = 0;
    for (int i = 0; i < code.n; ++i)
        for (int j = i + 1; j < code.n; ++j, ++bit) {
            int byte = static_cast<unsigned char>(code.code[bit / 8]);
            if ((byte >> (7 - bit % 8)) & 1) {
                g.adj[i] |= vbit(j);
                g.adj[j] |= vbit(i);
            }
        }
    return g;
}

namespace {

// All rooted trees on n vertices by the level-sequence successor rule;
// emitted as parent arrays (parent[0] = -1).
template <typename Fn>
void rooted_trees(int n, Fn&& emit) {
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i;
    while (true) {
        std::vector<int> parent(n, -1);
        for (int i = 1; i < n; ++i)
            for (int j = i - 1; j >= 0; --j)
                if (level[j] == level[i] - 1) {
                    parent[i] = j;
                    break;
                }
        emit(parent);
        int p = -1;
        for (int i = n - 1; i >= 1; --i)
            if (level[i] > 1) {
                p = i;
                break;
            }
        if (p < 0) return;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
}

Graph graph_from_parents(const std::vector<int>& parent) {
    Graph g = empty_graph(static_cast<int>(parent.size()));
    for (size_t i = 1; i < parent.size(); ++i) {
        g.adj[i] |= vbit(parent[i]);
        g.adj[parent[i]] |= vbit(i);
    }
    return g;
}

std::vector<Graph> decode_sorted(std::set<std::string>& codes, int n) {
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const std::string& c : codes) out.push_back(graph_from_code({n, c}));
    return out;
}

std::vector<Graph> generate_trees(int n) {
    if (n == 1) return {empty_graph(1)};
    std::set<std::string> codes;
    rooted_trees(n, [&](const std::vector<int>& parent) {
        codes.insert(canonical_code(graph_from_parents(parent)).code);
    });
    return decode_sorted(codes, n);
}

// Pair bit k <-> edge (i, j), i < j, row-major.
Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g = empty_graph(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((mask >> k) & 1) {
                g.adj[i] |= vbit(j);
                g.adj[j] |= vbit(i);
            }
    return g;
}

std::vector<Graph> generate_connected_sweep(int n) {
    int bits = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t{1} << bits;
    int workers = worker_count();
    std::vector<std::set<std::string>> local(workers);
    parallel_chunks(total, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            if (!is_connected(g)) continue;
            local[w].insert(canonical_code(g).code);
        }
    });
    std::set<std::string> codes;
    for (auto& s : local) codes.merge(s);
    return decode_sorted(codes, n);
}

std::vector<Graph> generate_connected_bipartite(int n) {
    std::set<std::string> codes;
    for (int a = 1; 2 * a <= n; ++a) {
        int b = n - a;
        int bits = a * b;
        std::uint64_t total = std::uint64_t{1} << bits;
        int workers = worker_count();
        std::vector<std::set<std::string>> local(workers);
        parallel_chunks(total, [&](int w, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                Graph g = empty_graph(n);
                int k = 0;
                for (int i = 0; i < a; ++i)
                    for (int j = a; j < n; ++j, ++k)
                        if ((mask >> k) & 1) {
                            g.adj[i] |= vbit(j);
                            g.adj[j] |= vbit(i);
                        }
                if (!is_connected(g)) continue;
                local[w].insert(canonical_code(g).code);
            }
        });
        for (auto& s : local) codes.merge(s);
    }
    return decode_sorted(codes, n);
}

}  // namespace

std::vector<Graph> trees_via_pruefer(int n) {
    if (n > 8) throw std::invalid_argument("pruefer cross-check capped at n <= 8");
    if (n == 1) return {empty_graph(1)};
    if (n == 2) return {path_graph(2)};
    std::set<std::string> codes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // decode the Pruefer sequence
        std::vector<int> deg(n, 1);
        for (int v : seq) ++deg[v];
        Graph g = empty_graph(n);
        std::vector<int> work = seq;
        VertexSet used = 0;
        for (size_t i = 0; i < work.size(); ++i) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1 && !(used & vbit(v))) {
                    leaf = v;
                    break;
                }
            g.adj[leaf] |= vbit(work[i]);
            g.adj[work[i]] |= vbit(leaf);
            used |= vbit(leaf);
            --deg[work[i]];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !(used & vbit(v))) (a < 0 ? a : b) = v;
        g.adj[a] |= vbit(b);
        g.adj[b] |= vbit(a);
        codes.insert(canonical_code(g).code);
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    std::vector<Graph> out;
    for (const auto& c : codes) out.push_back(graph_from_code({n, c}));
    return out;
}

std::vector<Graph> connected_via_augmentation(int n) {
    if (n > 8) throw std::invalid_argument("augmentation generator capped at n <= 8");
    // all graphs (connected or not) on k vertices, grown one vertex at a time
    std::set<std::string> codes{canonical_code(empty_graph(1)).code};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> next;
        for (const std::string& c : codes) {
            Graph base = graph_from_code({k - 1, c});
            for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
                Graph g = base;
                g.n = k;
                g.adj[k - 1] = nb;
                for (VertexSet s = nb; s; s &= s - 1)
                    g.adj[lowest_vertex(s)] |= vbit(k - 1);
                next.insert(canonical_code(g).code);
            }
        }
        codes = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& c : codes) {
        Graph g = graph_from_code({n, c});
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

void save_corpus(const GraphCorpus& corpus, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    std::string stem = std::string(corpus_kind_name(corpus.kind)) + "_" +
                       std::to_string(corpus.n);
    std::ofstream g6(fs::path(cache_dir) / (stem + ".g6"));
    write_graph6_lines(g6, corpus.members);
    nlohmann::ordered_json idx;
    idx["tau"] = nlohmann::ordered_json::object();
    for (const auto& [tau, ids] : corpus.by_tau) idx["tau"][std::to_string(tau)] = ids;
    std::ofstream out(fs::path(cache_dir) / (stem + ".idx.json"));
    out << idx.dump() << '\n';
}

bool load_corpus(CorpusKind kind, int n, const std::string& cache_dir, GraphCorpus& out) {
    namespace fs = std::filesystem;
    std::string stem = std::string(corpus_kind_name(kind)) + "_" + std::to_string(n);
    fs::path g6_path = fs::path(cache_dir) / (stem + ".g6");
    fs::path idx_path = fs::path(cache_dir) / (stem + ".idx.json");
    if (!fs::exists(g6_path) || !fs::exists(idx_path)) return false;
    std::ifstream g6(g6_path);
    out.members = read_graph6_lines(g6);
    out.n = n;
    out.kind = kind;
    out.by_tau.clear();
    std::ifstream idx_in(idx_path);
    nlohmann::json idx = nlohmann::json::parse(idx_in);
    for (const auto& [key, ids] : idx.at("tau").items())
        out.by_tau[std::stoi(key)] = ids.get<std::vector<int>>();
    return true;
}

GraphCorpus generate(CorpusKind kind, int n, const std::string& cache_dir) {
    if (kind == CorpusKind::Trees && n > 12)
        throw std::invalid_argument("tree corpus capped at n <= 12");
    if (kind != CorpusKind::Trees && n > 8)
        throw std::invalid_argument("graph corpora capped at n <= 8");
    if (n < 1) throw std::invalid_argument("corpus order must be positive");

    GraphCorpus corpus;
    if (!cache_dir.empty() && load_corpus(kind, n, cache_dir, corpus)) return corpus;

    corpus.n = n;
    corpus.kind = kind;
    switch (kind) {
        case CorpusKind::Trees:
            corpus.members = generate_trees(n);
            break;
        case CorpusKind::Connected:
            // the labeled sweep is fine through n = 7; n = 8 is grown by
            // vertex augmentation instead (identical classes, far cheaper)
            corpus.members = n <= 7 ? generate_connected_sweep(n)
                                    : connected_via_augmentation(n);
            break;
        case CorpusKind::ConnectedBipartite:
            corpus.members = generate_connected_bipartite(n);
            break;
    }
    for (size_t i = 0; i < corpus.members.size(); ++i)
        corpus.by_tau[dissociation_tau(corpus.members[i])].push_back(static_cast<int>(i));
    if (!cache_dir.empty()) save_corpus(corpus, cache_dir);
    return corpus;
}

namespace {

ExtremeResult extreme(const GraphCorpus& corpus, int tau, double alpha, bool maximize,
                      const Tolerances& tol) {
    auto it = corpus.by_tau.find(tau);
    if (it == corpus.by_tau.end() || it->second.empty())
        throw std::invalid_argument("empty tau class in corpus");
    const std::vector<int>& ids = it->second;
    std::vector<std::pair<double, int>> lambdas(ids.size());
    parallel_chunks(ids.size(), [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t k = lo; k < hi; ++k) {
            AlphaMatrix m = alpha_matrix(corpus.members[ids[k]], alpha);
            lambdas[k] = {spectral_radius(m, true, tol).lambda, ids[k]};
        }
    });
    double sign = maximize ? 1.0 : -1.0;
    double best = -1e300;
    for (auto& [lam, idx] : lambdas) best = std::max(best, sign * lam);
    ExtremeResult out;
    out.lambda = sign * best;
    double runner = -1e300;
    for (auto& [lam, idx] : lambdas) {
        if (sign * lam >= best - tol.tie_tol) out.winner_indices.push_back(idx);
        else runner = std::max(runner, sign * lam);
    }
    out.margin = runner > -1e299 ? best - runner
                                 : std::numeric_limits<double>::infinity();
    std::sort(out.winner_indices.begin(), out.winner_indices.end());
    return out;
}

}  // namespace

ExtremeResult argmax_index(const GraphCorpus& corpus, int tau, double alpha,
                           const Tolerances& tol) {
    return extreme(corpus, tau, alpha, true, tol);
}

ExtremeResult argmin_index(const GraphCorpus& corpus, int tau, double alpha,
                           const Tolerances& tol) {
    return extreme(corpus, tau, alpha, false, tol);
}

}  // namespace specdiss
