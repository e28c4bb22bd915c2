#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specdiss/enumerate.hpp"
#include "specdiss/family.hpp"
#include "specdiss/graph.hpp"

namespace specdiss {

struct RunConfig {
    double tolerance = 1e-10;
    int workers = 0;  // 0 = all logical cores (SPECDISS_WORKERS overrides)
    std::string output_dir;
    std::uint64_t seed = 1;
    enum class Format { text, json };
    Format format = Format::text;

    int effective_workers() const;
};

struct SearchRecord {
    std::string graph6;
    int n = 0;
    int diss = 0;
    double rho = 0.0;
    std::optional<int> rho_exact_rank;  // set when exact ordering was engaged
    std::string canonical;

    std::string to_json() const;
    static SearchRecord from_json(const std::string& line);
};

struct SearchResult {
    int n = 0;
    int psi = 0;
    SearchRecord winner;
    std::vector<SearchRecord> ties;  // exact-equal competitors, canon order
    std::uint64_t candidates_examined = 0;
    double wall_time_s = 0.0;
    std::string note;

    std::string to_json() const;
};

/// Minimum spectral radius over the stream's graphs with dissociation
/// number psi. Chunks of the stream are evaluated in parallel and
/// reduced in enumeration order; floating-point margins under 1e-7 are
/// settled exactly through characteristic polynomials. When
/// checkpoint_dir is set, accepted records append to records.jsonl and
/// cursor.json tracks completed chunks so a killed run resumes cleanly.
SearchResult min_rho_search(GraphStream source, int n, int psi, const RunConfig& cfg = {},
                            const std::string& checkpoint_dir = "", long max_chunks = -1);

struct FamilySearchResult {
    SearchResult result;
    FamilySpec winner_spec;
    bool h_type_won = false;
    int g_candidates = 0;
    int h_candidates = 0;
    int diss_mismatches = 0;  // candidates whose dissociation number is not n-3
};

/// Minimum-rho spec among both attachment families at order n (>= 14):
/// all a,b,c in {0,1} with the p/q/r loads balanced within slack 2 on
/// (p+a, q+b+1, r+c), H specs requiring q >= 1. Radii come from the
/// reduced fixed-point model.
FamilySearchResult family_search(int n, const RunConfig& cfg = {});

struct RemarkCase {
    int n = 0;
    std::string expected_name;
    std::string expected_graph6;
    SearchRecord winner;
    bool pass = false;
};

struct RemarkReport {
    std::vector<RemarkCase> cases;
    bool ok = false;
};

/// Full-enumeration minima for n = 5, 6, 7 against the known small
/// extremal graphs.
RemarkReport verify_remark(const RunConfig& cfg = {});

struct PatternCase {
    int n = 0;
    FamilySpec expected;
    SearchRecord winner;
    std::uint64_t examined = 0;
    bool pass = false;
};

struct PatternReport {
    std::vector<PatternCase> cases;
    bool ok = false;
    std::string note;
};

/// Tree search at psi = n-3 for each n in [n_lo, n_hi] (within [12, 22])
/// compared against the closed-form extremal family graph. Restricting
/// to trees is justified because the minimizer is a tree whenever
/// psi exceeds ceil(2n/3), which holds here for n >= 10.
PatternReport verify_theorem_pattern(int n_lo, int n_hi, const RunConfig& cfg = {});

/// Known small extremal graphs used by the remark checks.
Graph wheel_c4_join_k1();
Graph k33_minus_edge();

}  // namespace specdiss
