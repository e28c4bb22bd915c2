#pragma once

#include <utility>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

struct DissociationCertificate {
    std::vector<int> set;
    int size = 0;
    int max_induced_degree = 0;
};

bool is_dissociation_set(const Graph& g, const std::vector<int>& s);

/// Exact dissociation number with a witness, by branch and bound
/// (n <= 40). The witness is the lexicographically smallest maximum
/// dissociation set, found in a second id-ordered pass.
std::pair<int, DissociationCertificate> diss_exact(const Graph& g);

/// Linear-time dissociation number for trees. Three states per vertex:
/// out of the set, in and unmatched, in and matched to a child.
int diss_tree_dp(const Graph& t);

/// Hypergraph on the complement of a dissociation set. Vertex ids are
/// the original graph's; each qualifying source contributes its own
/// edge, so identical vertex sets may appear more than once.
struct Hypergraph {
    std::vector<int> vertices;
    std::vector<std::vector<int>> edges;  // each sorted ascending, size >= 2
};

Hypergraph generated_hypergraph(const Graph& g, const std::vector<int>& dissociation);

/// Remove every component of g - anchors that touches exactly one anchor.
Graph skeleton(const Graph& g, const std::vector<int>& anchors);

/// No two distinct hyperedges share more than one vertex.
bool claim1_check(const Hypergraph& h);
/// The hypergraph is not three 2-element edges forming a triangle.
bool claim2_check(const Hypergraph& h);
bool hypergraph_connected(const Hypergraph& h);

}  // namespace specdiss
