#include "specdiss/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace specdiss {

namespace {

using Code = unsigned __int128;  // upper triangle needs C(12,2) = 66 bits

// Ordered partition refinement: split every cell by the vector of neighbor
// counts into all current cells, ordering sub-cells by that key. The cell
// order this produces is invariant under relabeling.
struct Refiner {
    const Graph& g;
    std::vector<std::vector<int>> cells;

    explicit Refiner(const Graph& g_) : g(g_) {
        cells.emplace_back();
        for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
        refine();
    }

    void refine() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<VertexSet> masks(cells.size());
            for (size_t j = 0; j < cells.size(); ++j)
                for (int v : cells[j]) masks[j] |= vbit(v);
            std::vector<std::vector<int>> next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> key(cells.size());
                    for (size_t j = 0; j < cells.size(); ++j)
                        key[j] = popcount(g.adj[v] & masks[j]);
                    keyed.emplace_back(std::move(key), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> sub{keyed[0].second};
                for (size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        next.push_back(std::move(sub));
                        sub.clear();
                        changed = true;
                    }
                    sub.push_back(keyed[i].second);
                }
                next.push_back(std::move(sub));
            }
            cells = std::move(next);
        }
    }

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

struct Canonicalizer {
    const Graph& g;
    Code best = ~Code{0};
    bool have_best = false;

    explicit Canonicalizer(const Graph& g_) : g(g_) {}

    Code code_of(const std::vector<int>& order) const {
        Code c = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                c = (c << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
        return c;
    }

    void search(Refiner state) {
        if (state.discrete()) {
            std::vector<int> order;
            order.reserve(g.n);
            for (const auto& c : state.cells) order.push_back(c[0]);
            Code c = code_of(order);
            if (!have_best || c < best) {
                best = c;
                have_best = true;
            }
            return;
        }
        size_t target = 0;
        while (state.cells[target].size() == 1) ++target;
        std::vector<int> cand = state.cells[target];
        std::sort(cand.begin(), cand.end());
        std::vector<int> tried;
        for (int v : cand) {
            // Skip v if swapping it with an already-tried candidate is an
            // automorphism: the branches produce identical code sets.
            bool redundant = false;
            for (int u : tried) {
                if ((g.adj[u] & ~vbit(v)) == (g.adj[v] & ~vbit(u))) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) continue;
            tried.push_back(v);
            Refiner child = state;
            std::vector<int> rest;
            for (int w : child.cells[target])
                if (w != v) rest.push_back(w);
            child.cells[target] = {v};
            child.cells.insert(child.cells.begin() + target + 1, rest);
            child.refine();
            search(std::move(child));
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    if (g.n > 12)
        throw std::invalid_argument("canonical_code: exact only for n <= 12");
    Canonicalizer c(g);
    c.search(Refiner(g));
    int nbits = g.n * (g.n - 1) / 2;
    int nbytes = (nbits + 7) / 8;
    std::string bytes(nbytes, '\0');
    Code code = c.best << (8 * nbytes - nbits);  // left-align
    for (int i = nbytes - 1; i >= 0; --i) {
        bytes[i] = static_cast<char>(code & 0xff);
        code >>= 8;
    }
    return CanonicalCode{g.n, std::move(bytes)};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    return canonical_code(g) == canonical_code(h);
}

}  // namespace specdiss
