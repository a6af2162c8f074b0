#pragma once

#include <map>
#include <string>

#include "specdiss/graph.hpp"

namespace specdiss {

enum class FamilyId {
    MaxConnected,         // K_{n-tau} v (tau/2 K_2)  or  K_{n-tau} v ((tau-1)/2 K_2 u K_1)
    CompleteBipartiteTau, // K_{tau, n-tau}
    SDagger,              // spider tree, the tree argmax
    SK1K2,                // star with k2 pendant 2-paths at the centre
    T1, T2, T3, T4, T5, T6, T7, T8,
    WRT,                  // star + t pendant 2-paths + one long tail
    Y1, Y2, Y3,
    KnMinusM,             // K_n minus a maximum matching
};

struct FamilySpec {
    FamilyId id;
    std::map<std::string, int> params;

    int param(const std::string& name) const;
};

FamilySpec make_spec(FamilyId id, std::map<std::string, int> params);

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);

// {"family": "...", "params": {...}}
std::string spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const std::string& text);

// Deterministic construction per the documented labelings; throws
// std::invalid_argument naming the violated feasibility constraint.
Graph build(const FamilySpec& spec);

// Intended dissociation number. Closed-form where the family pins it
// (SDagger in the class range, SK1K2, T1/T2, KnMinusM, the two join and
// bipartite families); solver-computed otherwise.
int expected_tau(const FamilySpec& spec);

enum class ClassId { T1Class, T2Class, T3Class };

// Structural membership in the spider-like tree classes from which the tree
// argmax is extracted. g must be a tree.
bool class_membership(const Graph& g, ClassId cls, int n, int tau);

// tau values at which the class definitions carry a side condition; hits are
// recorded by callers, never asserted.
bool class_boundary_hit(ClassId cls, int n, int tau);

}  // namespace specdiss
