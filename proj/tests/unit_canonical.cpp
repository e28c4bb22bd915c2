#include <algorithm>
#include <random>

#include "doctest.h"
#include "specdiss/canonical.hpp"
#include "specdiss/enumerate.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

namespace {

Graph permuted(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.size());
    for (int i = 0; i < g.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> size(2, 10), extra(0, 10);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        CHECK(canonical_form(g) == canonical_form(permuted(g, rng)));
    }
    Graph p5 = path(5);
    CHECK(canonical_form(p5) == canonical_form(permuted(p5, rng)));
}

TEST_CASE("trees use the center encoding at any order") {
    std::mt19937_64 rng(67);
    Graph t = random_tree(40, rng);
    CHECK(canonical_form(t) == tree_canonical_form(t));
    CHECK(tree_canonical_form(star(4)) == tree_canonical_form(permuted(star(4), rng)));
    CHECK(canonical_form(cycle(6)) != canonical_form(k33_minus_edge()));
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
    // all connected graphs on 5 vertices: classes counted via canonical dedup
    std::set<std::string> classes;
    std::uint64_t total = 0;
    auto s = enumerate_labeled_connected(5);
    while (auto g = s()) {
        classes.insert(canonical_form(*g));
        ++total;
    }
    CHECK(total == 728);
    CHECK(classes.size() == 21);  // connected graphs on 5 nodes
}

TEST_CASE("tree and general encodings agree on what is isomorphic") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        Graph a = random_tree(9, rng);
        Graph b = random_tree(9, rng);
        bool same_tree = tree_canonical_form(a) == tree_canonical_form(b);
        bool same_general = canonical_form(a) == canonical_form(b);
        CHECK(same_tree == same_general);
    }
}
