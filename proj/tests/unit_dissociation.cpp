#include <random>

#include "doctest.h"
#include "specdiss/dissociation.hpp"
#include "specdiss/errors.hpp"
#include "specdiss/family.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

TEST_CASE("is_dissociation_set") {
    CHECK(is_dissociation_set(path(4), {0, 1, 3}));
    Graph s3 = star(3);
    CHECK_FALSE(is_dissociation_set(s3, {0, 1, 2, 3}));
    CHECK(is_dissociation_set(cycle(6), {0, 1, 3, 4}));
    CHECK(is_dissociation_set(path(4), {}));
}

TEST_CASE("diss_exact on named graphs") {
    CHECK(diss_exact(path(7)).first == 5);
    CHECK(diss_exact(cycle(6)).first == 4);
    CHECK(diss_exact(build_family({FamilyType::G, 1, 0, 0, 1, 0, 1})).first == 9);

    auto [d, cert] = diss_exact(path(4));
    CHECK(d == 3);
    CHECK(cert.size == 3);
    CHECK(cert.max_induced_degree <= 1);
    CHECK(cert.set == std::vector<int>{0, 1, 3});  // lexicographically smallest witness

    CHECK_THROWS_AS(diss_exact(path(41)), resource_limit);
}

TEST_CASE("path and cycle dissociation formulas") {
    for (int n = 1; n <= 20; ++n) {
        int expect = (2 * n + 2) / 3;  // ceil(2n/3)
        CHECK(diss_tree_dp(path(n)) == expect);
        if (n <= 20) CHECK(diss_exact(path(n)).first == expect);
    }
    for (int n = 3; n <= 20; ++n) CHECK(diss_exact(cycle(n)).first == 2 * n / 3);
}

TEST_CASE("tree DP agrees with branch and bound") {
    CHECK(diss_tree_dp(path(9)) == 6);
    CHECK(diss_tree_dp(star(5)) == 5);
    CHECK_THROWS_AS(diss_tree_dp(cycle(4)), invalid_parameter);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> size(2, 18);
    for (int i = 0; i < 200; ++i) {
        Graph t = random_tree(size(rng), rng);
        CHECK(diss_tree_dp(t) == diss_exact(t).first);
    }
}

TEST_CASE("diss monotonicity properties") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> size(3, 14), extra(0, 6);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        int base = diss_exact(g).first;
        // adding an edge never increases diss
        for (int u = 0; u < g.size() && u < 3; ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (!g.has_edge(u, v)) {
                    CHECK(diss_exact(with_edge(g, u, v)).first <= base);
                    v = g.size();
                }
        // deleting a vertex decreases diss by at most 2
        std::uniform_int_distribution<int> pick(0, g.size() - 1);
        int v = pick(rng);
        if (g.size() > 1) CHECK(base - diss_exact(delete_vertex(g, v)).first <= 2);
    }
}

TEST_CASE("generated hypergraph walk-through on P7") {
    Graph p7 = path(7);
    // D = {v1,v2,v4,v6,v7} leaves V' = {v3,v5}; only the isolate v4 yields an edge
    std::vector<int> d{0, 1, 3, 5, 6};
    Hypergraph h = generated_hypergraph(p7, d);
    CHECK(h.vertices == std::vector<int>{2, 4});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0] == std::vector<int>{2, 4});
    CHECK(claim1_check(h));
    CHECK(claim2_check(h));
    CHECK(hypergraph_connected(h));

    // complement of size 1: no hyperedges at all
    Hypergraph h1 = generated_hypergraph(path(3), {0, 1});
    CHECK(h1.vertices == std::vector<int>{2});
    CHECK(h1.edges.empty());

    CHECK_THROWS_AS(generated_hypergraph(star(3), std::vector<int>{0, 1, 2, 3}), invalid_parameter);
}

TEST_CASE("skeleton") {
    CHECK(skeleton(star(5), {0}).size() == 1);
    Graph spine = skeleton(build_family({FamilyType::G, 1, 1, 1, 1, 1, 1}), {0, 3, 6});
    CHECK(spine == path(7));
    CHECK(skeleton(path(3), {0, 2}) == path(3));
}

TEST_CASE("claim checks on explicit hypergraphs") {
    Hypergraph chain{{1, 2, 3}, {{1, 2}, {2, 3}}};
    CHECK(claim1_check(chain));
    CHECK(claim2_check(chain));

    Hypergraph triangle{{1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}};
    CHECK(claim1_check(triangle));
    CHECK_FALSE(claim2_check(triangle));

    Hypergraph doubled{{1, 2, 3}, {{1, 2, 3}, {1, 2}}};
    CHECK_FALSE(claim1_check(doubled));
}
