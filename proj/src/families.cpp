#include "specdiss/families.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "specdiss/dissociation.hpp"

namespace specdiss {

namespace {

void feasible(bool cond, const char* constraint) {
    if (!cond)
        throw std::invalid_argument(std::string("infeasible family parameters: ") +
                                    constraint);
}

struct Builder {
    Graph g;
    explicit Builder(int n) : g(empty_graph(n)) {}
    void edge(int u, int v) {
        g.adj[u] |= vbit(v);
        g.adj[v] |= vbit(u);
    }
    // Attaches k pendant paths of length `len` at root; returns next free index.
    int paths(int root, int k, int len, int next) {
        for (int i = 0; i < k; ++i) {
            int prev = root;
            for (int j = 0; j < len; ++j) {
                edge(prev, next);
                prev = next++;
            }
        }
        return next;
    }
};

Graph build_s_dagger(int n, int tau) {
    int stems = n - tau - 1;
    int centre_pendants = 3 * tau - 2 * n + 2;
    feasible(tau >= 1, "tau >= 1");
    feasible(stems >= 0, "n - tau - 1 >= 0");
    feasible(centre_pendants >= 0, "3tau - 2n + 2 >= 0");
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    int next = 1 + stems;
    for (int s = 1; s <= stems; ++s) {
        b.edge(0, s);
        next = b.paths(s, 2, 1, next);
    }
    b.paths(0, centre_pendants, 1, next);
    return b.g;
}

Graph build_max_connected(int n, int tau) {
    feasible(tau >= 2, "tau >= 2");
    feasible(tau <= n - 1, "tau <= n - 1");
    feasible(n <= kMaxVertices, "n <= 64");
    Graph matching = empty_graph(tau);
    for (int i = 0; i + 1 < tau; i += 2) {
        matching.adj[i] |= vbit(i + 1);
        matching.adj[i + 1] |= vbit(i);
    }
    return join(complete_graph(n - tau), matching);
}

Graph build_s_k1k2(int k1, int k2) {
    feasible(k1 >= 0 && k2 >= 0, "k1, k2 >= 0");
    feasible(k2 >= 1 || k1 >= 2, "k2 >= 1 or k1 >= 2");
    int n = 1 + k1 + 2 * k2;
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    int next = b.paths(0, k1, 1, 1);
    b.paths(0, k2, 2, next);
    return b.g;
}

Graph build_t1(int r, int p) {
    feasible(r >= 0 && p >= 0, "r, p >= 0");
    feasible(r + p >= 1, "r + p >= 1");
    int n = 2 * (r + p) + 4;
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    b.edge(0, 1);
    b.edge(1, 2);
    b.edge(2, 3);
    int next = b.paths(0, r, 2, 4);
    b.paths(3, p, 2, next);
    return b.g;
}

Graph build_t2(int r, int p) {
    Graph t1 = build_t1(r, p);
    feasible(t1.n + 1 <= kMaxVertices, "n <= 64");
    // vertex 0 carries the r paths and has degree r + 1
    return add_edge(disjoint_union(t1, empty_graph(1)), 0, t1.n);
}

Graph build_two_root(int core, int rootA, int rootB, int r, int p,
                     const std::vector<std::pair<int, int>>& core_edges) {
    int n = core + 2 * (r + p);
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    for (auto [u, v] : core_edges) b.edge(u, v);
    int next = b.paths(rootA, r, 2, core);
    b.paths(rootB, p, 2, next);
    return b.g;
}

Graph build_w_rt(int n, int r, int t) {
    feasible(r >= 0 && t >= 0, "r, t >= 0");
    int tail = n - r - 2 * t - 1;
    feasible(tail >= 1, "n - r - 2t - 1 >= 1");
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    int next = b.paths(0, r, 1, 1);
    next = b.paths(0, t, 2, next);
    b.paths(0, 1, tail, next);
    return b.g;
}

Graph build_y(int which, int n) {
    int base = which == 1 ? n - 2 : which == 2 ? n - 6 : n - 4;
    feasible(base >= 2, "base path needs at least 2 vertices");
    feasible(n <= kMaxVertices, "n <= 64");
    Builder b(n);
    for (int i = 0; i + 1 < base; ++i) b.edge(i, i + 1);
    int leaf = base - 1;
    if (which == 1) {
        b.paths(leaf, 2, 1, base);
    } else if (which == 2) {
        b.paths(leaf, 2, 3, base);
    } else {
        int next = b.paths(leaf, 1, 1, base);
        b.paths(leaf, 1, 3, next);
    }
    return b.g;
}

Graph build_kn_minus_m(int n) {
    feasible(n >= 3, "n >= 3");
    feasible(n <= kMaxVertices, "n <= 64");
    Graph g = complete_graph(n);
    for (int i = 0; i + 1 < n; i += 2) g = remove_edge(g, i, i + 1);
    return g;
}

int r_of(const FamilySpec& s) { return s.param("r"); }
int p_of(const FamilySpec& s) { return s.param("p"); }

}  // namespace

int FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("family spec missing parameter: " + name);
    return it->second;
}

FamilySpec make_spec(FamilyId id, std::map<std::string, int> params) {
    return FamilySpec{id, std::move(params)};
}

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::MaxConnected: return "max_connected";
        case FamilyId::CompleteBipartiteTau: return "complete_bipartite_tau";
        case FamilyId::SDagger: return "s_dagger";
        case FamilyId::SK1K2: return "s_k1k2";
        case FamilyId::T1: return "t1";
        case FamilyId::T2: return "t2";
        case FamilyId::T3: return "t3";
        case FamilyId::T4: return "t4";
        case FamilyId::T5: return "t5";
        case FamilyId::T6: return "t6";
        case FamilyId::T7: return "t7";
        case FamilyId::T8: return "t8";
        case FamilyId::WRT: return "w_rt";
        case FamilyId::Y1: return "y1";
        case FamilyId::Y2: return "y2";
        case FamilyId::Y3: return "y3";
        case FamilyId::KnMinusM: return "kn_minus_m";
    }
    throw std::logic_error("unknown family id");
}

FamilyId family_from_name(const std::string& name) {
    static const std::map<std::string, FamilyId> table = {
        {"max_connected", FamilyId::MaxConnected},
        {"complete_bipartite_tau", FamilyId::CompleteBipartiteTau},
        {"s_dagger", FamilyId::SDagger},
        {"s_k1k2", FamilyId::SK1K2},
        {"t1", FamilyId::T1}, {"t2", FamilyId::T2}, {"t3", FamilyId::T3},
        {"t4", FamilyId::T4}, {"t5", FamilyId::T5}, {"t6", FamilyId::T6},
        {"t7", FamilyId::T7}, {"t8", FamilyId::T8},
        {"w_rt", FamilyId::WRT},
        {"y1", FamilyId::Y1}, {"y2", FamilyId::Y2}, {"y3", FamilyId::Y3},
        {"kn_minus_m", FamilyId::KnMinusM},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown family: " + name);
    return it->second;
}

std::string spec_to_json(const FamilySpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.id);
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.params) j["params"][k] = v;
    return j.dump();
}

FamilySpec spec_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FamilySpec spec;
    spec.id = family_from_name(j.at("family").get<std::string>());
    for (const auto& [k, v] : j.at("params").items())
        spec.params[k] = v.get<int>();
    return spec;
}

Graph build(const FamilySpec& spec) {
    switch (spec.id) {
        case FamilyId::MaxConnected:
            return build_max_connected(spec.param("n"), spec.param("tau"));
        case FamilyId::CompleteBipartiteTau: {
            int n = spec.param("n"), tau = spec.param("tau");
            feasible(n >= 3, "n >= 3");
            feasible(tau <= n - 1, "tau <= n - 1");
            feasible(2 * tau >= n, "tau >= n - tau");
            return complete_bipartite_graph(tau, n - tau);
        }
        case FamilyId::SDagger:
            return build_s_dagger(spec.param("n"), spec.param("tau"));
        case FamilyId::SK1K2:
            return build_s_k1k2(spec.param("k1"), spec.param("k2"));
        case FamilyId::T1:
            return build_t1(r_of(spec), p_of(spec));
        case FamilyId::T2:
            return build_t2(r_of(spec), p_of(spec));
        case FamilyId::T3:
            // S_4 core: centre 0, leaves 1..3; paths at leaves 1 and 2
            return build_two_root(4, 1, 2, r_of(spec), p_of(spec),
                                  {{0, 1}, {0, 2}, {0, 3}});
        case FamilyId::T4:
            return build_two_root(2, 0, 1, r_of(spec), p_of(spec), {{0, 1}});
        case FamilyId::T5:
            // P_3 = 0-1-2 plus a pendant at leaf 0; paths at leaves 0 and 2
            return build_two_root(4, 0, 2, r_of(spec), p_of(spec),
                                  {{0, 1}, {1, 2}, {0, 3}});
        case FamilyId::T6:
            // S_{1,2}: centre 0, pendant 1, 2-paths 0-2-3 and 0-4-5;
            // paths at the degree-2 quasi-pendants 2 and 4
            return build_two_root(6, 2, 4, r_of(spec), p_of(spec),
                                  {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
        case FamilyId::T7:
            return build_two_root(4, 1, 2, r_of(spec), p_of(spec),
                                  {{0, 1}, {1, 2}, {2, 3}});
        case FamilyId::T8:
            return build_two_root(6, 1, 4, r_of(spec), p_of(spec),
                                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
        case FamilyId::WRT:
            return build_w_rt(spec.param("n"), spec.param("r"), spec.param("t"));
        case FamilyId::Y1:
            return build_y(1, spec.param("n"));
        case FamilyId::Y2:
            return build_y(2, spec.param("n"));
        case FamilyId::Y3:
            return build_y(3, spec.param("n"));
        case FamilyId::KnMinusM:
            return build_kn_minus_m(spec.param("n"));
    }
    throw std::logic_error("unknown family id");
}

int expected_tau(const FamilySpec& spec) {
    auto solver_value = [&spec]() {
        static std::map<std::pair<FamilyId, std::map<std::string, int>>, int> cache;
        static std::mutex mu;
        auto key = std::make_pair(spec.id, spec.params);
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        int tau = dissociation_tau(build(spec));
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::move(key), tau);
        return tau;
    };
    switch (spec.id) {
        case FamilyId::MaxConnected:
        case FamilyId::CompleteBipartiteTau:
            build(spec);  // feasibility
            return spec.param("tau");
        case FamilyId::SDagger: {
            int n = spec.param("n"), tau = spec.param("tau");
            build(spec);
            // tau is attained only inside the class range; at the boundary the
            // centre can join a maximum set.
            if (3 * tau - 2 * n + 2 >= 2) return tau;
            return solver_value();
        }
        case FamilyId::SK1K2:
            return build(spec).n - 1;
        case FamilyId::T1:
        case FamilyId::T2:
            return build(spec).n - 2;
        case FamilyId::KnMinusM:
            build(spec);
            return 2;
        default:
            return solver_value();
    }
}

bool class_boundary_hit(ClassId cls, int n, int tau) {
    if (cls == ClassId::T1Class) return 3 * tau == 2 * n || 3 * tau == 2 * n + 1;
    if (cls == ClassId::T2Class) return 3 * tau == 2 * n;
    return false;
}

bool class_membership(const Graph& g, ClassId cls, int n, int tau) {
    if (!is_tree(g)) throw std::invalid_argument("class_membership: input not a tree");
    if (g.n != n) return false;
    VertexSet leaves = structural_sets(g).pendants;
    int nleaves = popcount(leaves);
    int want_leaves = cls == ClassId::T3Class ? tau : tau - 1;
    if (nleaves != want_leaves) return false;

    // Try every vertex as the star centre of the underlying S_{n-tau(+1)}.
    for (int x = 0; x < g.n; ++x) {
        int centre_pendants = popcount(g.adj[x] & leaves);
        VertexSet others = g.adj[x] & ~leaves;
        int want_others = cls == ClassId::T3Class ? n - tau - 1 : n - tau;
        if (popcount(others) != want_others) continue;
        if (cls == ClassId::T1Class && centre_pendants != 1) continue;
        if (cls == ClassId::T2Class && centre_pendants != 0) continue;
        if (cls == ClassId::T3Class && centre_pendants < 2) continue;
        bool ok = true;
        for (VertexSet rest = others; rest; rest &= rest - 1) {
            int u = lowest_vertex(rest);
            VertexSet hung = g.adj[u] & ~vbit(x);
            if ((hung & ~leaves) || popcount(hung) < 2) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace specdiss
