#pragma once

#include <compare>
#include <string>

#include "specdiss/graph.hpp"

namespace specdiss {

// Canonical upper-triangle adjacency code under the canonical vertex order.
// Equal codes <=> isomorphic graphs, exact for n <= 12.
struct CanonicalCode {
    int n = 0;
    std::string code;  // packed bits, MSB first

    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace specdiss
