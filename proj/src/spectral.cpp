#include "specdiss/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace specdiss {

const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

double AlphaMatrix::max_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double QuotientMatrix::max_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < t; ++i) {
        double s = 0.0;
        for (int j = 0; j < t; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

AlphaMatrix alpha_matrix(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    AlphaMatrix m;
    m.n = g.n;
    m.alpha = alpha;
    m.entries.assign(static_cast<size_t>(g.n) * g.n, 0.0);
    for (int v = 0; v < g.n; ++v) {
        m.entries[v * g.n + v] = alpha * g.degree(v);
        for (VertexSet s = g.adj[v]; s; s &= s - 1)
            m.entries[v * g.n + lowest_vertex(s)] = 1.0 - alpha;
    }
    return m;
}

namespace {

struct EigenSystem {
    std::vector<double> values;   // unsorted, values[k] pairs with vector k
    std::vector<double> vectors;  // column-major: vectors[i*n + k] = component i of vector k
};

double offdiag_frobenius(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
}

// Cyclic Jacobi with eigenvector accumulation.
EigenSystem jacobi(std::vector<double> a, int n, const Tolerances& tol) {
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
    for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
        if (offdiag_frobenius(a, n) < tol.jacobi_offdiag) {
            EigenSystem out;
            out.values.resize(n);
            for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];
            out.vectors = std::move(v);
            return out;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau2 = s / (1.0 + c);
                double app = a[p * n + p], aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = akp - s * (akq + tau2 * akp);
                    a[k * n + q] = akq + s * (akp - tau2 * akq);
                    a[p * n + k] = a[k * n + p];
                    a[q * n + k] = a[k * n + q];
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = vkp - s * (vkq + tau2 * vkp);
                    v[k * n + q] = vkq + s * (vkp - tau2 * vkq);
                }
            }
        }
    }
    if (offdiag_frobenius(a, n) < tol.jacobi_offdiag) {
        EigenSystem out;
        out.values.resize(n);
        for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];
        out.vectors = std::move(v);
        return out;
    }
    throw std::runtime_error("jacobi: no convergence after " +
                             std::to_string(tol.jacobi_max_sweeps) +
                             " sweeps, off-diagonal residual " +
                             std::to_string(offdiag_frobenius(a, n)));
}

std::vector<VertexSet> pattern_components(const AlphaMatrix& m) {
    Graph pattern = empty_graph(std::max(m.n, 1));
    pattern.n = m.n;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j && m.at(i, j) != 0.0) pattern.adj[i] |= vbit(j);
    return components(pattern);
}

}  // namespace

SpectralResult spectral_radius(const AlphaMatrix& m, bool connected_hint,
                               const Tolerances& tol) {
    if (m.n < 1) throw std::invalid_argument("spectral_radius: empty matrix");
    SpectralResult out;
    EigenSystem full = jacobi(m.entries, m.n, tol);
    out.full_spectrum = full.values;
    std::sort(out.full_spectrum.rbegin(), out.full_spectrum.rend());

    std::vector<VertexSet> comps = pattern_components(m);
    out.perron.assign(m.n, 0.0);
    if (comps.size() == 1) {
        int best = 0;
        for (int k = 1; k < m.n; ++k)
            if (full.values[k] > full.values[best]) best = k;
        out.lambda = full.values[best];
        double sum = 0.0;
        for (int i = 0; i < m.n; ++i) sum += full.vectors[i * m.n + best];
        double sign = sum >= 0 ? 1.0 : -1.0;
        for (int i = 0; i < m.n; ++i) out.perron[i] = sign * full.vectors[i * m.n + best];
    } else {
        // Take the winning component's Perron vector, zero elsewhere.
        double best_lambda = -1e300;
        VertexSet best_comp = 0;
        std::vector<double> best_vec;
        for (VertexSet comp : comps) {
            int cn = popcount(comp);
            std::vector<int> ids;
            ids.reserve(cn);
            for (VertexSet s = comp; s; s &= s - 1) ids.push_back(lowest_vertex(s));
            std::vector<double> sub(static_cast<size_t>(cn) * cn);
            for (int i = 0; i < cn; ++i)
                for (int j = 0; j < cn; ++j) sub[i * cn + j] = m.at(ids[i], ids[j]);
            EigenSystem es = jacobi(sub, cn, tol);
            int k = 0;
            for (int i = 1; i < cn; ++i)
                if (es.values[i] > es.values[k]) k = i;
            if (es.values[k] > best_lambda + 1e-15) {
                best_lambda = es.values[k];
                best_comp = comp;
                best_vec.assign(cn, 0.0);
                for (int i = 0; i < cn; ++i) best_vec[i] = std::abs(es.vectors[i * cn + k]);
            }
        }
        out.lambda = best_lambda;
        int i = 0;
        for (VertexSet s = best_comp; s; s &= s - 1) out.perron[lowest_vertex(s)] = best_vec[i++];
    }

    double norm = std::sqrt(std::inner_product(out.perron.begin(), out.perron.end(),
                                               out.perron.begin(), 0.0));
    for (double& x : out.perron) x /= norm;

    double resid = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) row += m.at(i, j) * out.perron[j];
        resid = std::max(resid, std::abs(row - out.lambda * out.perron[i]));
    }
    out.residual = resid;
    if (resid > tol.eig_residual)
        throw std::runtime_error("spectral_radius: eigenpair residual " +
                                 std::to_string(resid) + " exceeds tolerance");
    if (connected_hint) {
        for (double x : out.perron)
            if (!(x > 0.0))
                throw std::runtime_error(
                    "spectral_radius: nonpositive Perron component on connected input");
    }
    return out;
}

double char_poly_eval(const AlphaMatrix& m, double x) {
    int n = m.n;
    std::vector<double> b(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i * n + j] = (i == j ? x : 0.0) - m.at(i, j);
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(b[r * n + col]) > std::abs(b[piv * n + col])) piv = r;
        if (b[piv * n + col] == 0.0) return 0.0;
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(b[piv * n + j], b[col * n + j]);
            det = -det;
        }
        det *= b[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            double f = b[r * n + col] / b[col * n + col];
            for (int j = col; j < n; ++j) b[r * n + j] -= f * b[col * n + j];
        }
    }
    return det;
}

namespace {

void check_partition(const Graph& g, const Partition& blocks) {
    VertexSet seen = 0;
    for (VertexSet b : blocks) {
        if (b == 0) throw std::invalid_argument("partition has an empty block");
        if (b & seen) throw std::invalid_argument("partition blocks overlap");
        seen |= b;
    }
    if (seen != g.vertices())
        throw std::invalid_argument("partition does not cover the vertex set");
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& blocks) {
    check_partition(g, blocks);
    for (VertexSet bi : blocks) {
        for (VertexSet bj : blocks) {
            int want = -1;
            for (VertexSet s = bi; s; s &= s - 1) {
                int c = popcount(g.adj[lowest_vertex(s)] & bj);
                if (want < 0) want = c;
                else if (c != want) return false;
            }
        }
    }
    return true;
}

Partition coarsest_equitable_partition(const Graph& g) {
    Partition blocks{g.vertices()};
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        for (VertexSet b : blocks) {
            // Group the block's vertices by their count vector against all
            // current blocks.
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (VertexSet s = b; s; s &= s - 1) {
                int v = lowest_vertex(s);
                std::vector<int> key;
                key.reserve(blocks.size());
                for (VertexSet c : blocks) key.push_back(popcount(g.adj[v] & c));
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            VertexSet cur = vbit(keyed[0].second);
            for (size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(cur);
                    cur = 0;
                    changed = true;
                }
                cur |= vbit(keyed[i].second);
            }
            next.push_back(cur);
        }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end(),
              [](VertexSet a, VertexSet b) { return lowest_vertex(a) < lowest_vertex(b); });
    return blocks;
}

QuotientMatrix quotient_matrix(const Graph& g, double alpha, const Partition& blocks) {
    if (!is_equitable(g, blocks))
        throw std::invalid_argument("quotient_matrix: partition is not equitable");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    QuotientMatrix q;
    q.t = static_cast<int>(blocks.size());
    q.blocks = blocks;
    q.entries.assign(static_cast<size_t>(q.t) * q.t, 0.0);
    for (int i = 0; i < q.t; ++i) {
        int rep = lowest_vertex(blocks[i]);
        for (int j = 0; j < q.t; ++j) {
            double val = (1.0 - alpha) * popcount(g.adj[rep] & blocks[j]);
            if (i == j) val += alpha * g.degree(rep);
            q.entries[i * q.t + j] = val;
        }
    }
    return q;
}

double quotient_spectral_radius(const QuotientMatrix& q, const Tolerances& tol) {
    int t = q.t;
    if (t == 0) throw std::invalid_argument("empty quotient matrix");
    // Per pattern component; each is irreducible (symmetric zero pattern).
    std::vector<int> comp(t, -1);
    double rho = 0.0;
    for (int seed = 0; seed < t; ++seed) {
        if (comp[seed] >= 0) continue;
        std::vector<int> ids{seed};
        comp[seed] = seed;
        for (size_t h = 0; h < ids.size(); ++h)
            for (int j = 0; j < t; ++j)
                if (comp[j] < 0 && (q.at(ids[h], j) != 0.0 || q.at(j, ids[h]) != 0.0)) {
                    comp[j] = seed;
                    ids.push_back(j);
                }
        int c = static_cast<int>(ids.size());
        double shift = 0.0;
        for (int i = 0; i < c; ++i) {
            double s = 0.0;
            for (int j = 0; j < c; ++j) s += q.at(ids[i], ids[j]);
            shift = std::max(shift, s);
        }
        if (shift == 0.0) continue;  // zero block
        std::vector<double> v(c, 1.0), w(c);
        double lo = 0.0, hi = 0.0;
        long iter = 0;
        for (; iter < tol.power_max_iters; ++iter) {
            for (int i = 0; i < c; ++i) {
                double s = shift * v[i];
                for (int j = 0; j < c; ++j) s += q.at(ids[i], ids[j]) * v[j];
                w[i] = s;
            }
            lo = 1e300;
            hi = -1e300;
            for (int i = 0; i < c; ++i) {
                double r = w[i] / v[i];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            double scale = *std::max_element(w.begin(), w.end());
            for (int i = 0; i < c; ++i) v[i] = w[i] / scale;
            if (hi - lo < tol.power_tol * std::max(1.0, hi)) break;
        }
        if (iter == tol.power_max_iters)
            throw std::runtime_error(
                "quotient_spectral_radius: power iteration cap reached, bracket width " +
                std::to_string(hi - lo));
        rho = std::max(rho, 0.5 * (lo + hi) - shift);
    }
    return rho;
}

double PolyCoeffs::eval(double x) const {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

PolyCoeffs PolyCoeffs::derivative() const {
    int d = degree();
    PolyCoeffs out;
    for (int i = 0; i < d; ++i) out.coeffs.push_back(coeffs[i] * (d - i));
    return out;
}

PolyCoeffs p_alpha_coeffs(int n, int tau, double alpha) {
    double a = alpha, nn = n, t = tau;
    double c3 = a * (nn - 2 * t - 6);
    double c2 = 8 * a * a * t - 4 * a * a * nn + 4 * a * t - 2 * a * nn - 2 * t + nn +
                9 * a * a + 6 * a - 3;
    double c1 = a * (16 * a * nn - a * a * nn - 8 * nn - 28 * a * t + 14 * t - 20 * a + 10);
    double c0 = 2 * a * a * a * nn - 17 * a * a * nn + 16 * a * nn - 4 * nn +
                24 * a * a * t - 24 * a * t + 6 * t - 2 * a * a * a + 17 * a * a -
                16 * a + 4;
    return PolyCoeffs{{1.0, c3, c2, c1, c0}};
}

PolyCoeffs signless_cubic_coeffs(int n, int tau) {
    double nn = n, t = tau;
    return PolyCoeffs{{1.0, nn - 2 * t - 6, 8 * t - 4 * nn + 9, -nn}};
}

namespace {

// Sturm chain for robust root counting; handles near-double top roots that a
// fixed-step sign scan can step over.
std::vector<PolyCoeffs> sturm_chain(const PolyCoeffs& p) {
    std::vector<PolyCoeffs> chain{p, p.derivative()};
    while (chain.back().degree() >= 1) {
        const auto& a = chain[chain.size() - 2].coeffs;
        const auto& b = chain.back().coeffs;
        std::vector<double> rem = a;
        while (rem.size() >= b.size()) {
            double f = rem[0] / b[0];
            for (size_t i = 0; i < b.size(); ++i) rem[i] -= f * b[i];
            rem.erase(rem.begin());
        }
        while (!rem.empty() && std::abs(rem[0]) < 1e-300) rem.erase(rem.begin());
        if (rem.empty()) break;
        for (double& c : rem) c = -c;
        chain.push_back(PolyCoeffs{rem});
    }
    return chain;
}

int sign_variations(const std::vector<PolyCoeffs>& chain, double x) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        double v = q.eval(x);
        int s = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

}  // namespace

double largest_real_root(const PolyCoeffs& p, double bracket_hi, const Tolerances& tol) {
    if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no root");
    if (p.eval(bracket_hi) < 0.0)
        throw std::invalid_argument("largest_real_root: p(bracket_hi) < 0, bad bracket");
    constexpr int kScanSteps = 4096;
    double step = bracket_hi / kScanSteps;
    double hi = bracket_hi, lo = hi;
    bool found = false;
    for (int k = 1; k <= kScanSteps; ++k) {
        double x = bracket_hi - k * step;
        if (k == kScanSteps) x = 0.0;
        if (p.eval(x) <= 0.0) {
            lo = x;
            found = true;
            break;
        }
        hi = x;
    }
    if (found) {
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
            double mid = 0.5 * (lo + hi);
            if (p.eval(mid) <= 0.0) lo = mid;
            else hi = mid;
        }
    } else {
        // bisection on the count of distinct roots in (x, bracket_hi]
        std::vector<PolyCoeffs> chain = sturm_chain(p);
        int at_hi = sign_variations(chain, bracket_hi);
        if (sign_variations(chain, 0.0) - at_hi < 1)
            throw std::invalid_argument(
                "largest_real_root: no sign change found in bracket");
        lo = 0.0;
        hi = bracket_hi;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
            double mid = 0.5 * (lo + hi);
            if (sign_variations(chain, mid) - at_hi >= 1) lo = mid;
            else hi = mid;
        }
    }
    double root = 0.5 * (lo + hi);
    PolyCoeffs d = p.derivative();
    for (int it = 0; it < 4; ++it) {
        double dp = d.eval(root);
        if (dp == 0.0) break;
        double next = root - p.eval(root) / dp;
        if (next >= lo - 1e-12 && next <= hi + 1e-12) root = next;
    }
    if (std::abs(p.eval(root)) >
        tol.root_residual * std::max(1.0, std::pow(bracket_hi, p.degree())))
        throw std::runtime_error("largest_real_root: residual too large at candidate root");
    return root;
}

ClosedFormBounds closed_form_bounds(int n, int tau, double alpha) {
    ClosedFormBounds out;
    double an = alpha * n;
    double star_disc = an * an + 4.0 * (n - 1) * (1.0 - 2.0 * alpha);
    double bip_disc = an * an + 4.0 * static_cast<double>(tau) * (n - tau) * (1.0 - 2.0 * alpha);
    out.star_bound = 0.5 * (an + std::sqrt(std::max(0.0, star_disc)));
    out.bipartite_bound = 0.5 * (an + std::sqrt(std::max(0.0, bip_disc)));
    return out;
}

}  // namespace specdiss
