#pragma once

#include <optional>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

struct DissociationResult {
    int tau = 0;
    VertexSet witness = 0;  // lexicographically smallest maximum set by mask value
    bool is_good = false;   // witness contains all pendants and deg-2 quasi-pendants
    std::optional<std::vector<VertexSet>> all_maximum_sets;
};

// True iff every vertex of s has at most one neighbor inside s.
bool is_dissociation_set(const Graph& g, VertexSet s);

// Exact branch-and-bound dissociation number.
int dissociation_tau(const Graph& g);

// tau plus the lexicographically smallest witness.
DissociationResult dissociation_number(const Graph& g);

// Maximum dissociation set forced to contain all pendants and degree-2
// quasi-pendants. is_good = false signals that no such maximum set exists,
// which would falsify the good-set lemma for n >= 5.
DissociationResult good_maximum_set(const Graph& g);

// Exhaustive list of all maximum dissociation sets; n <= 16.
std::vector<VertexSet> all_maximum_dissociation_sets(const Graph& g);

// Largest dissociation set size subject to forced membership/exclusion;
// returns -1 if forced_in itself is infeasible. Exposed for the transform
// and verification suites.
int constrained_dissociation_tau(const Graph& g, VertexSet forced_in,
                                 VertexSet forced_out);

}  // namespace specdiss
