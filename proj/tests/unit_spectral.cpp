#include <cmath>
#include <random>

#include "doctest.h"
#include "specdiss/errors.hpp"
#include "specdiss/graph.hpp"
#include "specdiss/intpoly.hpp"
#include "specdiss/spectral.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

TEST_CASE("spectral radius of named graphs") {
    CHECK(std::abs(spectral_radius(star(9)).rho - 3.0) < 1e-10);
    CHECK(std::abs(spectral_radius(cycle(12)).rho - 2.0) < 1e-10);
    CHECK(std::abs(spectral_radius(path(4)).rho - 2.0 * std::cos(M_PI / 5)) < 1e-10);
    CHECK(spectral_radius(path(1)).rho == 0.0);

    Graph two(2);
    CHECK_THROWS_AS(spectral_radius(two), invalid_parameter);  // disconnected
}

TEST_CASE("spectrum contract") {
    for (const Graph& g : {path(9), cycle(7), star(6), smith_graph(SmithKind::E7)}) {
        Spectrum s = spectral_radius(g, 1e-12);
        CHECK(s.residual <= 1e-12 * std::max(1.0, s.rho));
        double norm = 0.0;
        for (double v : s.perron) {
            CHECK(v > 0.0);
            norm += v * v;
        }
        CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly_exact(path(2)) == IntPolynomial({-1, 0, 1}));
    CHECK(char_poly_exact(star(4)) == IntPolynomial({0, 0, 0, -4, 0, 1}));
    CHECK(char_poly_exact(cycle(3)) == IntPolynomial({-2, -3, 0, 1}));
    CHECK_THROWS_AS(char_poly_exact(path(49)), resource_limit);

    // int64 fast path agrees with the exact path
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> size(1, 8), extra(0, 8);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        auto fast = char_poly_small(g);
        IntPolynomial exact = char_poly_exact(g);
        REQUIRE(fast.size() == exact.coeffs.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(mpz_class(static_cast<long>(fast[k])) == exact.coeffs[k]);
    }
}

TEST_CASE("power iteration agrees with the exact characteristic polynomial") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> size(2, 10), extra(0, 10);
    for (int i = 0; i < 500; ++i) {
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        double direct = spectral_radius(g, 1e-12).rho;
        IntPolynomial cp = char_poly_exact(g);
        std::vector<double> cd(cp.coeffs.size());
        for (std::size_t k = 0; k < cd.size(); ++k) cd[k] = cp.coeffs[k].get_d();
        CHECK(std::abs(direct - largest_root_newton(cd)) <= 1e-9);
    }
}

TEST_CASE("subgraph monotonicity with exact agreement") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> size(5, 12), extra(2, 8);
    int done = 0;
    while (done < 100) {
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        bool found = false;
        for (int u = 0; u < g.size() && !found; ++u)
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                Graph sub = without_edge(g, u, v);
                if (!is_connected(sub)) continue;
                CHECK(spectral_radius(g).rho > spectral_radius(sub).rho);
                CHECK(compare_largest_roots(char_poly_exact(g), char_poly_exact(sub)) == Ordering::GT);
                found = true;
                break;
            }
        if (found) ++done;
    }
}

TEST_CASE("lambda1_sym3") {
    CHECK(std::abs(lambda1_sym3(Sym3{0, 0, 0, 1, 0, 1}) - std::sqrt(2.0)) < 1e-12);
    CHECK(lambda1_sym3(Sym3{1, 2, 3, 0, 0, 0}) == 3.0);
    CHECK(std::abs(lambda1_sym3(Sym3{3, 3, 3, 1, 0, 1}) - (3.0 + std::sqrt(2.0))) < 1e-12);

    // determinant contract at the returned eigenvalue
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> entry(-4.0, 4.0);
    for (int i = 0; i < 500; ++i) {
        Sym3 m{entry(rng), entry(rng), entry(rng), entry(rng), entry(rng), entry(rng)};
        double l = lambda1_sym3(m);
        double det = (m.a11 - l) * ((m.a22 - l) * (m.a33 - l) - m.a23 * m.a23) -
                     m.a12 * (m.a12 * (m.a33 - l) - m.a23 * m.a13) +
                     m.a13 * (m.a12 * m.a23 - (m.a22 - l) * m.a13);
        CHECK(std::abs(det) <= 1e-10 * std::max(1.0, m.max_abs()));
    }
}

TEST_CASE("top eigenvector of nonnegative sym3 is positive") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> entry(0.1, 5.0);
    for (int i = 0; i < 100; ++i) {
        Sym3 m{entry(rng), entry(rng), entry(rng), entry(rng), entry(rng), entry(rng)};
        auto v = top_eigenvector_sym3(m);
        for (double x : v) CHECK(x > 0.0);
        auto mv = m.mul(v);
        double l = lambda1_sym3(m);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(mv[k] - l * v[k]) < 1e-8 * std::max(1.0, m.max_abs()));
    }
}
