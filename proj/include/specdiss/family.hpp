#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

enum class FamilyType { G, H };

/// Parameters of the two attachment families. Both take three anchor
/// vertices and hang a/b/c single leaves plus p/q/r pendant 2-paths off
/// them; the G family anchors are the ends and middle of a 7-path, the
/// H family anchors are the three leaves of W_5.
struct FamilySpec {
    FamilyType family = FamilyType::G;
    int a = 0, b = 0, c = 0;
    int p = 0, q = 0, r = 0;

    int vertex_count() const;
    void validate() const;
    std::string to_string() const;
    static FamilySpec parse(const std::string& text);

    bool operator==(const FamilySpec&) const = default;
};

/// A family graph together with the vertex layout used to build it,
/// so Perron-vector reconstruction can address every position.
struct FamilyGraph {
    Graph graph;
    FamilySpec spec;
    std::array<int, 3> anchors{};                             // x1, x2, x3
    std::array<std::vector<int>, 3> leaves;                   // w_i vertices per anchor
    std::array<std::vector<std::pair<int, int>>, 3> tails;    // (y_i, z_i) per pendant 2-path
    std::vector<int> spine;                                   // G: v1..v7; H: x1, center, x2, x'_3, x3
};

FamilyGraph build_family_graph(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec);

/// The extremal spec G_{m,l} for n = 6m + l (n >= 12 so every parameter
/// is nonnegative; smaller orders are covered by the small-case table).
FamilySpec theorem1_extremal(int n);

}  // namespace specdiss
