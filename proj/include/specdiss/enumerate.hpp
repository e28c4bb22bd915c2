#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

/// Pull-based graph source; returns nullopt when exhausted.
using GraphStream = std::function<std::optional<Graph>()>;

/// Graph on n vertices from a bit mask over the upper-triangle pairs
/// (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Every labeled simple connected graph on n vertices, once each,
/// by edge-mask order (n <= 7).
GraphStream enumerate_labeled_connected(int n);
std::uint64_t count_labeled_connected(int n);

/// Canonical rooted trees on `size` vertices as level sequences
/// (root level 0, preorder, subtrees in canonical order).
const std::vector<std::vector<int>>& rooted_tree_levels(int size);

/// One free tree per isomorphism class (n <= 24), by centroid
/// decomposition: multisets of rooted subtrees under the centroid,
/// plus the bicentroidal pairs when n is even.
GraphStream enumerate_free_trees(int n);
std::uint64_t count_free_trees(int n);

/// Decode a level sequence into a tree graph.
Graph tree_from_levels(const std::vector<int>& levels);

}  // namespace specdiss
