#pragma once

#include <optional>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

// Central tolerance record; verification suites may tighten a copy.
struct Tolerances {
    double jacobi_offdiag = 1e-12;
    int jacobi_max_sweeps = 100;
    double power_tol = 1e-12;
    long power_max_iters = 1'000'000;
    double root_residual = 1e-10;
    double eig_residual = 1e-9;
    double quotient_match = 1e-9;
    double tie_tol = 1e-9;        // winners within this of the extremum
    double uniqueness_gap = 1e-7; // required gap to the best non-isomorphic rival
};

const Tolerances& default_tolerances();

// Dense symmetric A_alpha(G) = alpha*D + (1-alpha)*A together with its alpha.
struct AlphaMatrix {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> entries;  // row-major n*n

    double at(int i, int j) const { return entries[i * n + j]; }
    double max_row_sum() const;
};

AlphaMatrix alpha_matrix(const Graph& g, double alpha);

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> perron;        // unit, nonnegative
    std::vector<double> full_spectrum; // sorted descending
    double residual = 0.0;             // inf-norm of A*perron - lambda*perron
};

// Largest eigenvalue and Perron vector via cyclic Jacobi. Disconnected
// patterns are handled per component; `connected_hint` additionally enforces
// strict positivity of the Perron vector.
SpectralResult spectral_radius(const AlphaMatrix& m, bool connected_hint = false,
                               const Tolerances& tol = default_tolerances());

// det(xI - m) by pivoted elimination.
double char_poly_eval(const AlphaMatrix& m, double x);

// Ordered vertex partition as block masks.
using Partition = std::vector<VertexSet>;

// True iff every vertex of block i has the same number of neighbors in
// block j, for all i, j. (Independent of alpha.)
bool is_equitable(const Graph& g, const Partition& blocks);

// Coarsest equitable partition, blocks ordered by smallest member.
Partition coarsest_equitable_partition(const Graph& g);

struct QuotientMatrix {
    int t = 0;
    Partition blocks;
    std::vector<double> entries;  // row-major t*t

    double at(int i, int j) const { return entries[i * t + j]; }
    double max_row_sum() const;
};

// Quotient of A_alpha over an equitable partition; throws if not equitable.
QuotientMatrix quotient_matrix(const Graph& g, double alpha, const Partition& blocks);

// Spectral radius of a nonnegative quotient matrix by shifted power
// iteration with Collatz-Wielandt bounds.
double quotient_spectral_radius(const QuotientMatrix& q,
                                const Tolerances& tol = default_tolerances());

struct PolyCoeffs {
    std::vector<double> coeffs;  // leading first; monic for the built-in families

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
    PolyCoeffs derivative() const;
};

// Quartic whose largest root is the A_alpha-index of the spider tree
// S-dagger(n, tau).
PolyCoeffs p_alpha_coeffs(int n, int tau, double alpha);

// Cubic x^3 + (n-2tau-6)x^2 + (8tau-4n+9)x - n whose largest root is the
// signless Laplacian index of S-dagger(n, tau).
PolyCoeffs signless_cubic_coeffs(int n, int tau);

// Largest real root in (0, bracket_hi]: downward scan for a sign change,
// then bisection with a Newton polish.
double largest_real_root(const PolyCoeffs& p, double bracket_hi,
                         const Tolerances& tol = default_tolerances());

struct ClosedFormBounds {
    double star_bound = 0.0;      // tree bound, attained by the star
    double bipartite_bound = 0.0; // attained by K_{tau, n-tau}
};
ClosedFormBounds closed_form_bounds(int n, int tau, double alpha);

}  // namespace specdiss
