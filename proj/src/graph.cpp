#include "specdiss/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace specdiss {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_order(int n) {
    require(n >= 1 && n <= kMaxVertices, "vertex count must be in [1, 64]");
}

void set_edge(Graph& g, int u, int v) {
    g.adj[u] |= vbit(v);
    g.adj[v] |= vbit(u);
}

}  // namespace

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (VertexSet s = adj[u] & ~(vbit(u) | (vbit(u) - 1)); s; s &= s - 1)
            out.emplace_back(u, lowest_vertex(s));
    return out;
}

void Graph::validate() const {
    if (n < 0 || n > kMaxVertices) throw std::logic_error("bad vertex count");
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~vertices()) throw std::logic_error("neighbor out of range");
        if (adj[v] & vbit(v)) throw std::logic_error("self-loop");
        for (VertexSet s = adj[v]; s; s &= s - 1)
            if (!(adj[lowest_vertex(s)] & vbit(v)))
                throw std::logic_error("asymmetric adjacency");
    }
    for (int v = n; v < kMaxVertices; ++v)
        if (adj[v]) throw std::logic_error("stale adjacency row");
}

Graph empty_graph(int n) {
    check_order(n);
    Graph g;
    g.n = n;
    return g;
}

Graph path_graph(int n) {
    Graph g = empty_graph(n);
    for (int i = 0; i + 1 < n; ++i) set_edge(g, i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g = path_graph(n);
    set_edge(g, n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g = empty_graph(n);
    for (int i = 1; i < n; ++i) set_edge(g, 0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g = empty_graph(n);
    for (int v = 0; v < n; ++v) g.adj[v] = g.vertices() & ~vbit(v);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite parts must be nonempty");
    Graph g = empty_graph(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) set_edge(g, u, v);
    return g;
}

Graph make_named(const std::string& kind, const std::vector<int>& params) {
    auto arity = [&](size_t k) {
        require(params.size() == k, "wrong parameter count for named graph");
    };
    if (kind == "path") { arity(1); return path_graph(params[0]); }
    if (kind == "cycle") { arity(1); return cycle_graph(params[0]); }
    if (kind == "star") { arity(1); return star_graph(params[0]); }
    if (kind == "complete") { arity(1); return complete_graph(params[0]); }
    if (kind == "complete_bipartite") {
        arity(2);
        return complete_bipartite_graph(params[0], params[1]);
    }
    throw std::invalid_argument("unknown named graph kind: " + kind);
}

Graph add_edge(const Graph& g, int u, int v) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n, "vertex index out of range");
    require(u != v, "self-loop");
    require(!g.has_edge(u, v), "duplicate edge");
    Graph out = g;
    set_edge(out, u, v);
    return out;
}

Graph remove_edge(const Graph& g, int u, int v) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n, "vertex index out of range");
    require(g.has_edge(u, v), "edge not present");
    Graph out = g;
    out.adj[u] &= ~vbit(v);
    out.adj[v] &= ~vbit(u);
    return out;
}

Graph complement(const Graph& g) {
    Graph out = empty_graph(g.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = ~g.adj[v] & g.vertices() & ~vbit(v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    require(g.n + h.n <= kMaxVertices, "union exceeds 64 vertices");
    Graph out = empty_graph(g.n + h.n);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    VertexSet left = all_vertices(g.n);
    VertexSet right = out.vertices() & ~left;
    for (int v = 0; v < g.n; ++v) out.adj[v] |= right;
    for (int v = g.n; v < out.n; ++v) out.adj[v] |= left;
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet victims) {
    victims &= g.vertices();
    int survivors = g.n - popcount(victims);
    require(survivors >= 1, "cannot delete every vertex");
    std::array<int, kMaxVertices> new_label{};
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (!(victims & vbit(v))) new_label[v] = next++;
    Graph out = empty_graph(survivors);
    for (int v = 0; v < g.n; ++v) {
        if (victims & vbit(v)) continue;
        for (VertexSet s = g.adj[v] & ~victims; s; s &= s - 1)
            out.adj[new_label[v]] |= vbit(new_label[lowest_vertex(s)]);
    }
    return out;
}

StructuralSets structural_sets(const Graph& g) {
    StructuralSets out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out.pendants |= vbit(v);
    for (int v = 0; v < g.n; ++v) {
        if (!(g.adj[v] & out.pendants)) continue;
        out.quasi_pendants |= vbit(v);
        if (g.degree(v) == 2) out.quasi_pendants_deg2 |= vbit(v);
    }
    return out;
}

VertexSet component_of(const Graph& g, int start) {
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1) next |= g.adj[lowest_vertex(s)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        VertexSet c = component_of(g, lowest_vertex(left));
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return component_of(g, 0) == g.vertices();
}

bool is_bipartite(const Graph& g) {
    std::array<int, kMaxVertices> color{};
    color.fill(-1);
    for (int root = 0; root < g.n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (VertexSet s = g.adj[v]; s; s &= s - 1) {
                int u = lowest_vertex(s);
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n - 1;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

}  // namespace specdiss
