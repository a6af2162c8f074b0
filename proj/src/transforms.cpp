#include "specdiss/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace specdiss {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Walks from `from` through its neighbor `via` along degree-2 vertices.
// Returns the chain beyond `from` if it ends in a pendant, empty otherwise.
std::vector<int> pendant_chain(const Graph& g, int from, int via) {
    std::vector<int> chain;
    int prev = from, cur = via;
    for (int steps = 0; steps <= g.n; ++steps) {
        chain.push_back(cur);
        if (g.degree(cur) == 1) return chain;
        if (g.degree(cur) != 2 || cur == from) return {};
        int next = lowest_vertex(g.adj[cur] & ~vbit(prev));
        prev = cur;
        cur = next;
    }
    return {};
}

int walk_to_terminal(const Graph& g, int from, int via) {
    int prev = from, cur = via;
    for (int steps = 0; steps <= g.n; ++steps) {
        if (g.degree(cur) != 2) return cur;
        if (cur == from) return -1;  // pure cycle
        int next = lowest_vertex(g.adj[cur] & ~vbit(prev));
        prev = cur;
        cur = next;
    }
    return -1;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (VertexSet s = g.adj[v]; s; s &= s - 1) {
            int w = lowest_vertex(s);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> tree_path(const Graph& g, int a, int b) {
    std::vector<int> dist_b = bfs_distances(g, b);
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (VertexSet s = g.adj[cur]; s; s &= s - 1) {
            int w = lowest_vertex(s);
            if (dist_b[w] == dist_b[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

}  // namespace

Graph shift_neighbors(const Graph& g, int u, int v, VertexSet moved) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n, "vertex index out of range");
    require(u != v, "u and v must differ");
    require(moved != 0, "moved set is empty");
    require((moved & ~g.vertices()) == 0, "moved set not contained in the graph");
    require((moved & ~g.adj[v]) == 0, "moved set not contained in N(v)");
    require((moved & g.adj[u]) == 0, "moved set intersects N(u)");
    require((moved & vbit(u)) == 0, "u must not be moved onto itself");
    Graph out = g;
    out.adj[v] &= ~moved;
    out.adj[u] |= moved;
    for (VertexSet s = moved; s; s &= s - 1) {
        int w = lowest_vertex(s);
        out.adj[w] &= ~vbit(v);
        out.adj[w] |= vbit(u);
    }
    return out;
}

Graph rebalance_pendant_paths(const Graph& g, int u, int s, int t,
                              RebalanceDirection direction) {
    require(u >= 0 && u < g.n, "vertex index out of range");
    require(s >= 1, "s-path must be nonempty");
    require(direction == RebalanceDirection::TowardBalance || t >= 1,
            "direction away requires t >= 1");
    std::vector<std::vector<int>> chains;
    for (VertexSet nb = g.adj[u]; nb; nb &= nb - 1) {
        auto chain = pendant_chain(g, u, lowest_vertex(nb));
        if (!chain.empty()) chains.push_back(std::move(chain));
    }
    auto take = [&chains](int len) -> std::vector<int> {
        for (size_t i = 0; i < chains.size(); ++i) {
            if (static_cast<int>(chains[i].size()) == len) {
                auto c = chains[i];
                chains.erase(chains.begin() + i);
                return c;
            }
        }
        throw std::invalid_argument("no pendant path of the requested length at u");
    };
    std::vector<int> s_chain = take(s);
    std::vector<int> t_chain = t >= 1 ? take(t) : std::vector<int>{};
    Graph out = g;
    auto move_tip = [&out](std::vector<int>& shrink, int root_shrink,
                           const std::vector<int>& grow, int root_grow) {
        int tip = shrink.back();
        int anchor = shrink.size() >= 2 ? shrink[shrink.size() - 2] : root_shrink;
        int target = grow.empty() ? root_grow : grow.back();
        out.adj[anchor] &= ~vbit(tip);
        out.adj[tip] &= ~vbit(anchor);
        out.adj[target] |= vbit(tip);
        out.adj[tip] |= vbit(target);
    };
    if (direction == RebalanceDirection::Away) {
        move_tip(t_chain, u, s_chain, u);  // (s, t) -> (s+1, t-1)
    } else {
        move_tip(s_chain, u, t_chain, u);  // (s, t) -> (s-1, t+1)
    }
    return out;
}

Graph subdivide(const Graph& g, int u, int v) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n && g.has_edge(u, v),
            "subdivide requires an existing edge");
    require(g.n + 1 <= kMaxVertices, "subdivision exceeds 64 vertices");
    Graph out = remove_edge(g, u, v);
    out.n = g.n + 1;
    int w = g.n;
    out.adj[u] |= vbit(w);
    out.adj[v] |= vbit(w);
    out.adj[w] = vbit(u) | vbit(v);
    return out;
}

Graph triple_subdivide(const Graph& g, int u, int v) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n && g.has_edge(u, v),
            "triple subdivision requires an existing edge");
    require(g.n + 3 <= kMaxVertices, "triple subdivision exceeds 64 vertices");
    Graph out = remove_edge(g, u, v);
    out.n = g.n + 3;
    int x = g.n, y = g.n + 1, z = g.n + 2;
    out.adj[u] |= vbit(x);
    out.adj[x] = vbit(u) | vbit(y);
    out.adj[y] = vbit(x) | vbit(z);
    out.adj[z] = vbit(y) | vbit(v);
    out.adj[v] |= vbit(z);
    return out;
}

bool is_internal_path_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) return false;
    int a = g.degree(u) == 2 ? walk_to_terminal(g, v, u) : u;
    int b = g.degree(v) == 2 ? walk_to_terminal(g, u, v) : v;
    return a >= 0 && b >= 0 && g.degree(a) >= 3 && g.degree(b) >= 3;
}

std::pair<int, int> first_internal_edge_bfs(const Graph& g) {
    std::vector<int> order{0};
    VertexSet seen = vbit(0);
    for (size_t h = 0; h < order.size(); ++h)
        for (VertexSet s = g.adj[order[h]] & ~seen; s; s &= s - 1) {
            int w = lowest_vertex(s);
            seen |= vbit(w);
            order.push_back(w);
        }
    std::vector<int> rank(g.n, 0);
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (int v : order)
        for (VertexSet s = g.adj[v]; s; s &= s - 1) {
            int w = lowest_vertex(s);
            if (rank[w] < rank[v]) continue;  // each edge once, from the earlier end
            if (is_internal_path_edge(g, v, w)) return {v, w};
        }
    return {-1, -1};
}

TransformRecord optimal_subdivision_transform(const Graph& t) {
    if (!is_tree(t))
        throw std::invalid_argument("optimal_subdivision_transform: input not a tree");
    int branching = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) >= 3) ++branching;
    if (branching < 2)
        throw std::invalid_argument(
            "optimal_subdivision_transform: needs at least two branching vertices");

    // Diameter path maximizing d(u2), ties broken by lexicographic sequence.
    int diam = 0;
    std::vector<std::vector<int>> dist(t.n);
    for (int v = 0; v < t.n; ++v) {
        dist[v] = bfs_distances(t, v);
        diam = std::max(diam, *std::max_element(dist[v].begin(), dist[v].end()));
    }
    std::vector<int> path;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            if (a == b || dist[a][b] != diam) continue;
            std::vector<int> cand = tree_path(t, a, b);
            if (path.empty() || t.degree(cand[1]) > t.degree(path[1]) ||
                (t.degree(cand[1]) == t.degree(path[1]) && cand < path))
                path = std::move(cand);
        }

    int u1 = path[0], u2 = path[1], u3 = path[2];
    auto [eu, ev] = first_internal_edge_bfs(t);
    if (eu < 0)
        throw std::logic_error("tree with two branching vertices lacks an internal edge");

    TransformRecord rec;
    rec.kind = TransformKind::OptSubdiv;
    rec.before = t;
    rec.moved_edges = {{eu, ev}};
    int d2 = t.degree(u2);
    if (d2 == 2 && t.degree(u3) == 2) {
        rec.after = delete_vertices(triple_subdivide(t, eu, ev),
                                    vbit(u1) | vbit(u2) | vbit(u3));
        rec.moved_vertices = {u1, u2, u3};
    } else if (d2 == 2) {
        rec.after = delete_vertices(subdivide(t, eu, ev), vbit(u1));
        rec.moved_vertices = {u1};
    } else if (d2 == 3) {
        VertexSet third = t.adj[u2] & ~vbit(u1) & ~vbit(u3);
        int v = lowest_vertex(third);
        if (t.degree(v) != 1)
            throw std::runtime_error(
                "diameter path second vertex has a non-pendant off-path neighbor");
        rec.after = delete_vertices(triple_subdivide(t, eu, ev),
                                    vbit(u1) | vbit(u2) | vbit(v));
        rec.moved_vertices = {u1, u2, v};
    } else {
        rec.after = delete_vertices(subdivide(t, eu, ev), vbit(u1));
        rec.moved_vertices = {u1};
    }
    return rec;
}

}  // namespace specdiss
