#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specdiss/spectral.hpp"

namespace specdiss {

enum class ClaimId {
    Thm1_1, Thm1_2, Thm1_3, Thm1_4,
    Thm1_5_I, Thm1_5_II, Thm1_5_III, Thm1_5_IV,
    Lem2_2, Lem2_4, Lem2_5, Lem2_6, Lem2_7, Lem2_8,
    Lem3_1, Lem4_1, Lem4_2, Lem4_4,
    Cor5_1, Cor5_2, Cor5_3, Cor5_4, Cor5_5,
    AppendixGrid,
};

const char* claim_name(ClaimId id);
ClaimId claim_from_name(const std::string& name);
std::vector<ClaimId> all_claims();

struct VerifyParams {
    int n_max = 0;                   // 0 = claim default
    std::vector<double> alpha_grid;  // empty = {0, 0.25, 0.5, 0.75, 0.9}
    std::optional<int> tau;          // restrict to one tau class
    int trials = 0;                  // 0 = claim default for randomized suites
    unsigned long long seed = 20240817ULL;
    std::string cache_dir;
    Tolerances tol = default_tolerances();
};

struct WinnerEntry {
    std::string g6;
    double lambda = 0.0;
    double margin = 0.0;  // infinity = no non-isomorphic rival in the class
};

struct VerificationReport {
    ClaimId claim = ClaimId::Thm1_1;
    bool pass = false;
    nlohmann::ordered_json params;
    std::vector<WinnerEntry> winners;
    nlohmann::ordered_json counterexample;  // null unless fail
    nlohmann::ordered_json notes;           // recorded extrema, boundary hits, ...
    double runtime_s = 0.0;

    nlohmann::ordered_json to_json() const;
    std::string summary_line() const;
};

VerificationReport verify(ClaimId claim, const VerifyParams& params = {});

std::vector<double> default_alpha_grid();

}  // namespace specdiss
