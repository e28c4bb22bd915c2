#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "specdiss/graph.hpp"
#include "specdiss/search.hpp"

namespace specdiss {

struct VerifyReport {
    std::string name;
    bool ok = false;
    std::vector<std::string> lines;

    void add(const std::string& line) { lines.push_back(line); }
    std::string to_json() const;
};

// seeded generators for the randomized suites
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng);

VerifyReport verify_star_law();
VerifyReport verify_smith_sweep(const RunConfig& cfg = {});
VerifyReport verify_lemma14(int count, const RunConfig& cfg = {});
VerifyReport verify_cor15();
VerifyReport verify_casepolys(int samples);
VerifyReport verify_ordering_chains();
VerifyReport verify_monotonicity(const RunConfig& cfg = {});
VerifyReport verify_dissociation_oracles(const RunConfig& cfg = {});
VerifyReport verify_claims();

}  // namespace specdiss
