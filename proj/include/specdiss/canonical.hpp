#pragma once

#include <string>

#include "specdiss/graph.hpp"

namespace specdiss {

/// Canonical string for a tree of any order: root at the center (or the
/// canonical end of the center edge) and encode subtrees in sorted order.
std::string tree_canonical_form(const Graph& t);

/// Canonical string such that two graphs compare equal iff isomorphic.
/// Trees take the center encoding; other graphs go through color
/// refinement plus backtracking (n <= 12).
std::string canonical_form(const Graph& g);

}  // namespace specdiss
