#include <random>

#include "doctest.h"
#include "specdiss/errors.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/intpoly.hpp"
#include "specdiss/spectral.hpp"

using namespace specdiss;

namespace {

// expand a product of (x - root) factors with integer roots
IntPolynomial from_roots(const std::vector<int>& roots) {
    std::vector<mpz_class> c{1};
    for (int r : roots) {
        std::vector<mpz_class> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= mpz_class(r) * c[i];
        }
        c = std::move(next);
    }
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("sturm root counting on known polynomials") {
    CHECK(sturm_root_count(IntPolynomial({-1, 0, 1}), 0, 2) == 1);                              // x^2-1
    CHECK(sturm_root_count(IntPolynomial({-2, -3, 0, 1}), mpq_class(19, 10), mpq_class(21, 10)) == 1);
    CHECK(sturm_root_count(char_poly_exact(path(5)), mpq_class(199, 100), 2) == 0);
    CHECK_THROWS_AS(sturm_root_count(IntPolynomial({-1, 0, 1}), 2, 2), invalid_interval);

    // half-open semantics: a root exactly at the right endpoint counts
    IntPolynomial p = from_roots({2});
    CHECK(sturm_root_count(p, 1, 2) == 1);
    CHECK(sturm_root_count(p, 2, 3) == 0);
    // repeated roots count once
    IntPolynomial sq = from_roots({2, 2, -1});
    CHECK(sturm_root_count(sq, 0, 5) == 1);
    CHECK(count_real_roots(sq) == 2);
}

TEST_CASE("sturm counts match integer-root constructions") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(1, 7), root(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int d = deg(rng);
        std::vector<int> roots(d);
        for (int& r : roots) r = root(rng);
        IntPolynomial p = from_roots(roots);
        std::uniform_int_distribution<int> bound(-8, 8);
        int a = bound(rng), b = bound(rng);
        if (a >= b) continue;
        std::vector<int> distinct = roots;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        int expect = 0;
        for (int r : distinct)
            if (r > a && r <= b) ++expect;
        CHECK(sturm_root_count(p, a, b) == expect);
    }
}

TEST_CASE("largest root isolation") {
    LargestRoot r = isolate_largest_root(from_roots({-3, 1, 4}));
    if (r.exact)
        CHECK(*r.exact == 4);
    else {
        CHECK(r.lo < 4);
        CHECK(r.hi >= 4);
    }
    CHECK(doctest::Approx(isolate_largest_root(char_poly_exact(star(4))).midpoint()).epsilon(0.51) == 2.0);
    CHECK_THROWS_AS(isolate_largest_root(IntPolynomial({1, 0, 1})), invalid_parameter);  // x^2+1
}

TEST_CASE("compare_largest_roots") {
    CHECK(compare_largest_roots(char_poly_exact(star(4)), char_poly_exact(path(5))) == Ordering::GT);
    IntPolynomial p = char_poly_exact(cycle(5));
    CHECK(compare_largest_roots(p, p) == Ordering::EQ);

    // distinct polynomials sharing the same largest root
    CHECK(compare_largest_roots(from_roots({2, -1}), from_roots({2, 0, -5})) == Ordering::EQ);
    CHECK(compare_largest_roots(from_roots({2}), from_roots({3})) == Ordering::LT);
    CHECK(compare_largest_roots(from_roots({5, -9}), from_roots({4, 9, -9})) == Ordering::LT);

    // cospectral-style near cases: C4 vs star(4) share rho = 2
    CHECK(compare_largest_roots(char_poly_exact(cycle(4)), char_poly_exact(star(4))) == Ordering::EQ);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> deg(1, 6), root(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> ra(deg(rng)), rb(deg(rng));
        for (int& r : ra) r = root(rng);
        for (int& r : rb) r = root(rng);
        int la = *std::max_element(ra.begin(), ra.end());
        int lb = *std::max_element(rb.begin(), rb.end());
        Ordering want = la < lb ? Ordering::LT : (la > lb ? Ordering::GT : Ordering::EQ);
        CHECK(compare_largest_roots(from_roots(ra), from_roots(rb)) == want);
    }
}

TEST_CASE("squarefree and gcd") {
    IntPolynomial p = from_roots({1, 1, 2});
    IntPolynomial sf = squarefree_part(p);
    CHECK(sf.degree() == 2);
    CHECK(sf.sign_at(1) == 0);
    CHECK(sf.sign_at(2) == 0);
    IntPolynomial g = poly_gcd(from_roots({1, 2, 3}), from_roots({2, 5}));
    CHECK(g.degree() == 1);
    CHECK(g.sign_at(2) == 0);
}

TEST_CASE("json serialization round trip") {
    IntPolynomial p = char_poly_exact(path(6));
    CHECK(IntPolynomial::from_json(p.to_json()) == p);
    CHECK(IntPolynomial::from_json("[\"-2\",\"-3\",\"0\",\"1\"]") == char_poly_exact(cycle(3)));
    CHECK_THROWS_AS(IntPolynomial::from_json("nope"), parse_error);
}
