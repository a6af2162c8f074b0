#pragma once

#include <map>
#include <string>
#include <vector>

#include "specdiss/canonical.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/spectral.hpp"

namespace specdiss {

enum class CorpusKind { Trees, Connected, ConnectedBipartite };

const char* corpus_kind_name(CorpusKind kind);
CorpusKind corpus_kind_from_name(const std::string& name);

// Complete duplicate-free corpus of non-isomorphic graphs of one kind and
// order, partitioned by dissociation number. Members are stored in their
// canonical labeling, sorted by canonical code.
struct GraphCorpus {
    int n = 0;
    CorpusKind kind = CorpusKind::Trees;
    std::vector<Graph> members;
    std::map<int, std::vector<int>> by_tau;
};

// Caps: Trees n <= 12, Connected and ConnectedBipartite n <= 8. When
// cache_dir is nonempty, <kind>_<n>.g6 / <kind>_<n>.idx.json are used.
GraphCorpus generate(CorpusKind kind, int n, const std::string& cache_dir = "");

void save_corpus(const GraphCorpus& corpus, const std::string& cache_dir);
bool load_corpus(CorpusKind kind, int n, const std::string& cache_dir, GraphCorpus& out);

// Reconstructs the graph a canonical code encodes.
Graph graph_from_code(const CanonicalCode& code);

struct ExtremeResult {
    std::vector<int> winner_indices;  // all members within tie_tol of the extremum
    double lambda = 0.0;
    double margin = 0.0;  // gap to the best non-winner; +inf when the class is exhausted
};

ExtremeResult argmax_index(const GraphCorpus& corpus, int tau, double alpha,
                           const Tolerances& tol = default_tolerances());
ExtremeResult argmin_index(const GraphCorpus& corpus, int tau, double alpha,
                           const Tolerances& tol = default_tolerances());

// Independent generators used as cross-checks by the test suites.
std::vector<Graph> trees_via_pruefer(int n);            // n <= 8
std::vector<Graph> connected_via_augmentation(int n);   // n <= 8

}  // namespace specdiss
