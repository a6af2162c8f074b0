#pragma once

#include <utility>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

enum class TransformKind { Shift, Rebalance, Subdivide, TripleSubdivide, OptSubdiv };

struct TransformRecord {
    TransformKind kind;
    Graph before;
    Graph after;
    std::vector<int> moved_vertices;
    std::vector<std::pair<int, int>> moved_edges;
};

// Moves the edges {v w : w in moved} onto u. Preconditions: moved nonempty,
// moved subset of N(v) \ N(u), u not in moved.
Graph shift_neighbors(const Graph& g, int u, int v, VertexSet moved);

enum class RebalanceDirection { TowardBalance, Away };

// g carries two pendant paths of lengths s and t rooted at u; Away turns
// (s, t) into (s+1, t-1), TowardBalance into (s-1, t+1). Vertex set unchanged.
Graph rebalance_pendant_paths(const Graph& g, int u, int s, int t,
                              RebalanceDirection direction);

// Replaces edge uv by a path through one (resp. three) fresh vertices
// appended at the end of the index range.
Graph subdivide(const Graph& g, int u, int v);
Graph triple_subdivide(const Graph& g, int u, int v);

// Edge uv lies on an internal path: walking outward through degree-2
// vertices ends at degree >= 3 on both sides.
bool is_internal_path_edge(const Graph& g, int u, int v);
// First internal-path edge in BFS order from vertex 0; {-1,-1} if none.
std::pair<int, int> first_internal_edge_bfs(const Graph& g);

// The equal-order subdivision transformation of a tree with at least two
// branching vertices: subdivide (or triple-subdivide) an internal-path edge
// and delete matching hanging vertices from the start of a diameter path,
// cased on the degree of its second vertex.
TransformRecord optimal_subdivision_transform(const Graph& t);

}  // namespace specdiss
