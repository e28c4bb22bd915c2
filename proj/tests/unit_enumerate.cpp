#include <set>

#include "doctest.h"
#include "specdiss/canonical.hpp"
#include "specdiss/enumerate.hpp"
#include "specdiss/errors.hpp"
#include "specdiss/graph.hpp"

using namespace specdiss;

TEST_CASE("labeled connected counts") {
    // stream totals against the inclusion-exclusion recurrence
    const std::uint64_t known[] = {0, 1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) {
        CHECK(count_labeled_connected(n) == known[n]);
        std::uint64_t streamed = 0;
        auto s = enumerate_labeled_connected(n);
        while (auto g = s()) {
            CHECK(is_connected(*g));
            CHECK(g->size() == n);
            ++streamed;
        }
        CHECK(streamed == known[n]);
    }
    CHECK(count_labeled_connected(7) == 1866256);
    CHECK_THROWS_AS(enumerate_labeled_connected(8), resource_limit);
}

TEST_CASE("rooted tree level sequences") {
    const std::size_t known[] = {0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766};
    for (int s = 1; s <= 12; ++s) CHECK(rooted_tree_levels(s).size() == known[s]);
    // decoding the path sequence gives a path
    Graph p = tree_from_levels({0, 1, 2, 3, 4});
    CHECK(is_tree(p));
    CHECK(p.degree(0) == 1);
}

TEST_CASE("free tree counts match the known sequence") {
    const std::uint64_t known[] = {0, 1,  1,  1,   1,   2,   3,    6,    11,   23,    47,
                                   106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065};
    for (int n = 1; n <= 16; ++n) {
        CHECK(count_free_trees(n) == known[n]);
        std::uint64_t streamed = 0;
        auto s = enumerate_free_trees(n);
        while (auto g = s()) {
            CHECK(g->size() == n);
            CHECK(g->edge_count() == n - 1);
            CHECK(is_connected(*g));
            ++streamed;
        }
        CHECK(streamed == known[n]);
    }
    CHECK(count_free_trees(20) == known[20]);
}

TEST_CASE("free tree stream is isomorph-free") {
    for (int n = 2; n <= 10; ++n) {
        std::set<std::string> canon;
        std::uint64_t streamed = 0;
        auto s = enumerate_free_trees(n);
        while (auto g = s()) {
            canon.insert(tree_canonical_form(*g));
            ++streamed;
        }
        CHECK(canon.size() == streamed);  // no duplicates
        CHECK(streamed == count_free_trees(n));
    }
}

TEST_CASE("free tree stream covers every labeled tree class") {
    // oracle: all labeled trees on n vertices via Pruefer codes, deduplicated
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> from_pruefer;
        std::vector<int> code(n - 2, 0);
        while (true) {
            // decode
            std::vector<int> deg(n, 1);
            for (int c : code) ++deg[c];
            Graph g(n);
            std::vector<char> used(n, 0);
            for (int c : code)
                for (int leaf = 0; leaf < n; ++leaf)
                    if (deg[leaf] == 1 && !used[leaf]) {
                        g.add_edge(leaf, c);
                        used[leaf] = 1;
                        --deg[c];
                        break;
                    }
            int u = -1, v = -1;
            for (int i = 0; i < n; ++i)
                if (deg[i] == 1 && !used[i]) (u < 0 ? u : v) = i;
            g.add_edge(u, v);
            from_pruefer.insert(tree_canonical_form(g));
            // next code
            int k = n - 3;
            while (k >= 0 && code[k] == n - 1) code[k--] = 0;
            if (k < 0) break;
            ++code[k];
        }
        std::set<std::string> from_stream;
        auto s = enumerate_free_trees(n);
        while (auto g = s()) from_stream.insert(tree_canonical_form(*g));
        CHECK(from_stream == from_pruefer);
    }
}
