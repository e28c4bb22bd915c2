#include "doctest.h"
#include "specdiss/canonical.hpp"
#include "specdiss/errors.hpp"
#include "specdiss/family.hpp"

using namespace specdiss;

TEST_CASE("vertex count formula, exhaustive over parameters <= 10") {
    for (int fam = 0; fam <= 1; ++fam)
        for (int a = 0; a <= 10; ++a)
            for (int b = 0; b <= 10; ++b)
                for (int c = 0; c <= 10; ++c)
                    for (int p = 0; p <= 10; p += 5)
                        for (int q = 0; q <= 10; q += 5)
                            for (int r = 0; r <= 10; r += 5) {
                                FamilySpec s{fam == 0 ? FamilyType::G : FamilyType::H, a, b, c, p, q, r};
                                Graph g = build_family(s);
                                REQUIRE(g.size() == s.vertex_count());
                                REQUIRE(is_tree(g));
                            }
    // dense sweep over the 2-path counts with small leaf counts
    for (int fam = 0; fam <= 1; ++fam)
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 1; ++c)
                    for (int p = 0; p <= 10; ++p)
                        for (int q = 0; q <= 10; ++q)
                            for (int r = 0; r <= 10; ++r) {
                                FamilySpec s{fam == 0 ? FamilyType::G : FamilyType::H, a, b, c, p, q, r};
                                REQUIRE(build_family(s).size() == s.vertex_count());
                            }
}

TEST_CASE("family identities") {
    CHECK(tree_canonical_form(build_family({FamilyType::G, 0, 0, 0, 0, 0, 0})) == tree_canonical_form(path(7)));
    CHECK(build_family({FamilyType::G, 1, 0, 0, 6, 5, 6}).size() == 42);
    Graph h = build_family({FamilyType::H, 0, 0, 0, 0, 1, 0});
    CHECK(h.size() == 7);

    FamilyGraph fg = build_family_graph({FamilyType::G, 1, 1, 1, 1, 1, 1});
    CHECK(fg.graph.degree(fg.anchors[0]) == 3);  // leaf + tail + spine
    CHECK(fg.graph.degree(fg.anchors[1]) == 4);  // leaf + tail + two spine edges
    CHECK(fg.anchors == std::array<int, 3>{0, 3, 6});

    FamilyGraph hg = build_family_graph({FamilyType::H, 0, 0, 0, 0, 0, 0});
    CHECK(hg.graph.size() == 5);
    // W_5: three leaves are the anchors
    for (int anchor : hg.anchors) CHECK(hg.graph.degree(anchor) == 1);

    CHECK_THROWS_AS(build_family({FamilyType::G, -1, 0, 0, 0, 0, 0}), invalid_parameter);
}

TEST_CASE("theorem1 extremal table") {
    CHECK(theorem1_extremal(42) == FamilySpec{FamilyType::G, 1, 0, 0, 6, 5, 6});
    CHECK(theorem1_extremal(41) == FamilySpec{FamilyType::G, 0, 0, 0, 6, 5, 6});
    CHECK(theorem1_extremal(39) == FamilySpec{FamilyType::G, 0, 0, 0, 6, 4, 6});
    CHECK(theorem1_extremal(12) == FamilySpec{FamilyType::G, 1, 0, 0, 1, 0, 1});
    CHECK(theorem1_extremal(13) == FamilySpec{FamilyType::G, 1, 0, 1, 1, 0, 1});
    CHECK(theorem1_extremal(17) == FamilySpec{FamilyType::G, 0, 0, 0, 2, 1, 2});
    CHECK_THROWS_AS(theorem1_extremal(11), invalid_parameter);
    for (int n = 12; n <= 130; ++n) CHECK(build_family(theorem1_extremal(n)).size() == n);
}

TEST_CASE("spec parsing round trip") {
    FamilySpec s{FamilyType::H, 1, 0, 1, 3, 2, 4};
    CHECK(FamilySpec::parse(s.to_string()) == s);
    CHECK(FamilySpec::parse("G(1,0,0;6,5,6)") == FamilySpec{FamilyType::G, 1, 0, 0, 6, 5, 6});
    CHECK(FamilySpec::parse("g( 0 , 0 , 0 ; 2 , 1 , 2 )") == FamilySpec{FamilyType::G, 0, 0, 0, 2, 1, 2});
    CHECK_THROWS_AS(FamilySpec::parse("Q(1,0,0;1,1,1)"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("G(1,0,0;1,1)"), parse_error);
}
