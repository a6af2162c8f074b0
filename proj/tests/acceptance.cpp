// Acceptance suite: one timed check per criterion, one pass/fail line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#include "specdiss/canonical.hpp"
#include "specdiss/dissociation.hpp"
#include "specdiss/enumeration.hpp"
#include "specdiss/families.hpp"
#include "specdiss/graph6.hpp"
#include "specdiss/spectral.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

namespace {

int failures = 0;
std::string cache_dir;

struct Criterion {
    const char* label;
    double limit_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    Criterion(const char* label_, double limit_s_) : label(label_), limit_s(limit_s_) {}

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }

    void finish() {
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        bool in_time = limit_s <= 0.0 || dt < limit_s;
        bool pass = ok && in_time;
        std::printf("[%s] %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", label, dt,
                    limit_s > 0 && !in_time ? ", over budget" : "",
                    detail.empty() ? "" : " - ", detail.c_str());
        if (!pass) ++failures;
    }
};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g = empty_graph(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) {
                g.adj[u] |= vbit(v);
                g.adj[v] |= vbit(u);
            }
    return g;
}

// Bracketed bisection of det(xI - A_alpha) per connected component.
double charpoly_oracle(const Graph& g, double alpha) {
    double best = -1e300;
    for (VertexSet comp : components(g)) {
        Graph sub = delete_vertices(g, g.vertices() & ~comp);
        AlphaMatrix m = alpha_matrix(sub, alpha);
        double hi = m.max_row_sum() + 1.0;
        double lo = hi, prev = hi;
        bool found = false;
        for (int k = 1; k <= 8192; ++k) {
            double x = hi - k * (hi / 8192.0);
            if (char_poly_eval(m, x) <= 0.0) {
                lo = x;
                found = true;
                break;
            }
            prev = x;
        }
        if (!found) return std::nan("");
        double a = lo, b = prev;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            if (char_poly_eval(m, mid) <= 0.0) a = mid;
            else b = mid;
        }
        best = std::max(best, 0.5 * (a + b));
    }
    return best;
}

int brute_force_tau(const Graph& g) {
    int best = 0;
    for (VertexSet s = 0; s < (VertexSet{1} << g.n); ++s) {
        if (popcount(s) <= best) continue;
        if (is_dissociation_set(g, s)) best = popcount(s);
    }
    return best;
}

void criterion_1() {
    Criterion c("1 eigensolver vs charpoly oracle, 2000 random graphs n<=6", 30.0);
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 2000 && c.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, coin(rng));
        for (double alpha : {0.0, 0.3, 0.5, 0.8}) {
            double lam = spectral_radius(alpha_matrix(g, alpha), false).lambda;
            double oracle = charpoly_oracle(g, alpha);
            c.expect(std::abs(lam - oracle) < 1e-9,
                     "mismatch on " + graph6_encode(g) + " alpha " + std::to_string(alpha));
        }
    }
    c.finish();
}

void criterion_2() {
    Criterion c("2 dissociation solver vs 2^n brute force", 120.0);
    const GraphCorpus& conn7 = generate(CorpusKind::Connected, 7, cache_dir);
    c.expect(conn7.members.size() == 853, "expected 853 connected classes at n=7");
    for (const Graph& g : conn7.members)
        c.expect(dissociation_tau(g) == brute_force_tau(g),
                 "solver mismatch on " + graph6_encode(g));
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, coin(rng));
        c.expect(dissociation_tau(g) == brute_force_tau(g),
                 "solver mismatch on " + graph6_encode(g));
    }
    c.finish();
}

void criterion_3() {
    Criterion c("3 lambda(S-dagger) equals the largest root of the quartic", 10.0);
    VerifyParams p;
    p.n_max = 14;
    p.cache_dir = cache_dir;
    VerificationReport r = verify(ClaimId::Lem3_1, p);
    c.expect(r.pass, r.pass ? "" : r.counterexample.dump());
    // frozen closed-form value at alpha = 0, n = 8, tau = 6
    Graph sd = build(make_spec(FamilyId::SDagger, {{"n", 8}, {"tau", 6}}));
    double lam = spectral_radius(alpha_matrix(sd, 0.0), true).lambda;
    c.expect(std::abs(lam - std::sqrt((7.0 + std::sqrt(17.0)) / 2.0)) < 1e-9,
             "biquadratic value mismatch");
    c.finish();
}

void criterion_4() {
    Criterion c("4 tree argmax is S-dagger at n = 8 and 9", 60.0);
    VerifyParams p;
    p.n_max = 9;
    p.cache_dir = cache_dir;
    VerificationReport r = verify(ClaimId::Thm1_3, p);
    c.expect(r.pass, r.pass ? "" : r.counterexample.dump());
    c.finish();
}

void criterion_5() {
    Criterion c("5 bipartite bound and K_{tau,n-tau} equality, n<=8", 300.0);
    VerifyParams p;
    p.n_max = 8;
    p.cache_dir = cache_dir;
    VerificationReport r = verify(ClaimId::Thm1_2, p);
    c.expect(r.pass, r.pass ? "" : r.counterexample.dump());
    VerificationReport r2 = verify(ClaimId::Cor5_2, p);
    c.expect(r2.pass, r2.pass ? "" : r2.counterexample.dump());
    c.finish();
}

void criterion_6() {
    Criterion c("6 connected argmax is the join family, n<=7", 300.0);
    VerifyParams p;
    p.n_max = 7;
    p.cache_dir = cache_dir;
    VerificationReport r = verify(ClaimId::Thm1_1, p);
    c.expect(r.pass, r.pass ? "" : r.counterexample.dump());
    VerificationReport r2 = verify(ClaimId::Cor5_1, p);
    c.expect(r2.pass, r2.pass ? "" : r2.counterexample.dump());
    c.finish();
}

void criterion_7() {
    Criterion c("7 minimizer structure over connected corpora, n<=8", 300.0);
    VerifyParams p;
    p.n_max = 8;
    p.cache_dir = cache_dir;
    for (ClaimId id : {ClaimId::Thm1_4, ClaimId::Thm1_5_I, ClaimId::Thm1_5_II,
                       ClaimId::Thm1_5_III, ClaimId::Thm1_5_IV, ClaimId::Cor5_4,
                       ClaimId::Cor5_5}) {
        VerificationReport r = verify(id, p);
        c.expect(r.pass, r.pass ? ""
                                : std::string(claim_name(id)) + ": " +
                                      r.counterexample.dump());
    }
    c.finish();
}

void criterion_8() {
    Criterion c("8 lemma property suites", 120.0);
    VerifyParams p;
    p.cache_dir = cache_dir;
    for (ClaimId id : {ClaimId::Lem2_4, ClaimId::Lem2_5, ClaimId::Lem2_6,
                       ClaimId::Lem4_1, ClaimId::Lem2_8, ClaimId::Lem4_2}) {
        VerificationReport r = verify(id, p);
        c.expect(r.pass, r.pass ? ""
                                : std::string(claim_name(id)) + ": " +
                                      r.counterexample.dump());
    }
    c.finish();
}

void criterion_9() {
    Criterion c("9 appendix positivity grid", 120.0);
    VerificationReport r = verify(ClaimId::AppendixGrid, {});
    c.expect(r.pass, r.pass ? "" : r.counterexample.dump());
    if (r.pass)
        c.detail = "min value " + std::to_string(r.notes.at("min_value").get<double>());
    c.finish();
}

void criterion_10() {
    Criterion c("10 corpus counts and graph6 round trips", 0.0);
    const int tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        const GraphCorpus& t = generate(CorpusKind::Trees, n, cache_dir);
        c.expect(t.members.size() == static_cast<size_t>(tree_counts[n - 1]),
                 "tree count at n=" + std::to_string(n));
        for (const Graph& g : t.members)
            c.expect(graph6_decode(graph6_encode(g)) == g, "round trip failure");
    }
    const int conn_counts[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 8; ++n) {
        const GraphCorpus& k = generate(CorpusKind::Connected, n, cache_dir);
        if (n <= 7)
            c.expect(k.members.size() == static_cast<size_t>(conn_counts[n - 1]),
                     "connected count at n=" + std::to_string(n));
        for (const Graph& g : k.members)
            c.expect(graph6_decode(graph6_encode(g)) == g, "round trip failure");
    }
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : generate(CorpusKind::ConnectedBipartite, n, cache_dir).members)
            c.expect(graph6_decode(graph6_encode(g)) == g, "round trip failure");
    c.finish();
}

}  // namespace

int main() {
    cache_dir = (std::filesystem::temp_directory_path() / "specdiss_acceptance_cache")
                    .string();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
