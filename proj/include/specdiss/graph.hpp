#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specdiss {

// Vertex subsets are single 64-bit masks; the whole library is capped at
// 64 vertices so every set operation is one word op.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Simple undirected graph, adjacency stored as one neighbor mask per vertex.
// Values are treated as immutable after construction: all "mutating"
// operations below return a fresh Graph.
struct Graph {
    int n = 0;
    std::array<VertexSet, kMaxVertices> adj{};

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return popcount(adj[v]); }
    VertexSet neighbors(int v) const { return adj[v]; }
    VertexSet vertices() const { return all_vertices(n); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const;

    // Checks adjacency symmetry, loop-freeness, and that no bits lie
    // outside [0, n). Throws std::logic_error on violation.
    void validate() const;

    bool operator==(const Graph&) const = default;
};

Graph empty_graph(int n);

// Named constructors with the documented labelings: path in index order,
// cycle 0-1-...-(n-1)-0, star center 0, complete-bipartite parts
// {0..a-1} and {a..a+b-1}.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

// Dispatcher used by the CLI: kind in {path,cycle,star,complete,
// complete_bipartite}.
Graph make_named(const std::string& kind, const std::vector<int>& params);

Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
// Disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);
// Removes the vertices in `victims`; survivors are relabeled by compaction,
// preserving relative order.
Graph delete_vertices(const Graph& g, VertexSet victims);

struct StructuralSets {
    VertexSet pendants = 0;           // degree-1 vertices
    VertexSet quasi_pendants = 0;     // vertices with a pendant neighbor
    VertexSet quasi_pendants_deg2 = 0;
};
StructuralSets structural_sets(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
// Non-increasing.
std::vector<int> degree_sequence(const Graph& g);

// Connected component containing `start`, as a vertex mask.
VertexSet component_of(const Graph& g, int start);
std::vector<VertexSet> components(const Graph& g);

}  // namespace specdiss
