#include <cmath>
#include <random>

#include "doctest.h"
#include "specdiss/errors.hpp"
#include "specdiss/family.hpp"
#include "specdiss/reduced.hpp"
#include "specdiss/spectral.hpp"

using namespace specdiss;

TEST_CASE("b1 matrix entries") {
    // balanced spec collapses to (m+1) t I + coupling
    for (int m : {2, 5, 9}) {
        FamilySpec s{FamilyType::G, 0, 0, 0, m, m - 1, m};
        for (double t : {2.0, 3.5}) {
            Sym3 b = b1_matrix(t, s);
            CHECK(b.a11 == doctest::Approx((m + 1) * t).epsilon(1e-14));
            CHECK(b.a22 == doctest::Approx((m + 1) * t).epsilon(1e-14));
            CHECK(b.a33 == doctest::Approx((m + 1) * t).epsilon(1e-14));
            CHECK(b.a12 == 1.0);
            CHECK(b.a23 == 1.0);
            CHECK(b.a13 == 0.0);
        }
    }
    Sym3 b = b1_matrix(2.0, {FamilyType::G, 1, 0, 0, 0, 0, 0});
    CHECK(b.a11 == doctest::Approx(3.5));
    CHECK(b.a22 == doctest::Approx(4.0));
    CHECK(b.a33 == doctest::Approx(2.0));
    CHECK_THROWS_AS(b1_matrix(1.0, FamilySpec{}), invalid_parameter);
    CHECK_THROWS_AS(b1_matrix(2.0, FamilySpec{FamilyType::H, 0, 0, 0, 0, 1, 0}), invalid_parameter);
}

TEST_CASE("b2 matrix entries and dominance") {
    Sym3 b = b2_matrix(2.0, {FamilyType::H, 0, 0, 0, 0, 1, 0});
    CHECK(b.a11 == doctest::Approx(2.0));
    CHECK(b.a22 == doctest::Approx(4.0));
    CHECK(b.a33 == doctest::Approx(2.0));
    CHECK(b.a12 == doctest::Approx(2.0));
    CHECK(b.a13 == doctest::Approx(1.0));
    CHECK(b.a23 == doctest::Approx(1.0));

    // each entry of B2(q) dominates B1(q-1) and the top eigenvalue is strictly larger
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> leaf(0, 1), tail(0, 8), q_pick(1, 8);
    for (int i = 0; i < 50; ++i) {
        FamilySpec h{FamilyType::H, leaf(rng), leaf(rng), leaf(rng), tail(rng), q_pick(rng), tail(rng)};
        FamilySpec g{FamilyType::G, h.a, h.b, h.c, h.p, h.q - 1, h.r};
        for (double t : {2.0, 2.7, 4.0, 6.0}) {
            Sym3 b2 = b2_matrix(t, h);
            Sym3 b1 = b1_matrix(t, g);
            CHECK(b2.a11 >= b1.a11 - 1e-12);
            CHECK(b2.a22 >= b1.a22 - 1e-12);
            CHECK(b2.a33 >= b1.a33 - 1e-12);
            CHECK(b2.a12 >= b1.a12);
            CHECK(b2.a13 >= b1.a13);
            CHECK(b2.a23 >= b1.a23);
            CHECK(lambda1_sym3(b2) > lambda1_sym3(b1));
        }
    }
}

TEST_CASE("shift decomposition is independent of m") {
    // b1(t; a,b,c; m+m1, m+m2, m+m3) - t(m+1)I equals the residual matrix for every m
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> leaf(0, 1), shift(-3, 1);
    for (int i = 0; i < 50; ++i) {
        int a = leaf(rng), b = leaf(rng), c = leaf(rng);
        int m1 = shift(rng), m2 = shift(rng), m3 = shift(rng);
        for (double t : {2.0, 3.25, 5.0}) {
            Sym3 expect = a_matrix(a, b, c, m1, m2, m3, t);
            for (int m : {4, 7, 11}) {
                if (m + std::min({m1, m2, m3}) < 0) continue;
                FamilySpec s{FamilyType::G, a, b, c, m + m1, m + m2, m + m3};
                Sym3 full = b1_matrix(t, s);
                double shift_term = t * (m + 1);
                CHECK(full.a11 - shift_term == doctest::Approx(expect.a11).epsilon(1e-12));
                CHECK(full.a22 - shift_term == doctest::Approx(expect.a22).epsilon(1e-12));
                CHECK(full.a33 - shift_term == doctest::Approx(expect.a33).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("a_matrix determinant example") {
    Sym3 m = a_matrix(1, 0, 0, -1, -2, -1, 2.0);
    CHECK(m.a11 == doctest::Approx(-0.5));
    CHECK(m.a22 == doctest::Approx(-2.0));
    CHECK(m.a33 == doctest::Approx(-2.0));
    // det(I - A) at t = 2
    double det = (1 - m.a11) * ((1 - m.a22) * (1 - m.a33) - 1) - ((1 - m.a33) - 0) + 0;
    CHECK(det == doctest::Approx(9.0));
    const CasePolyEntry* f1 = nullptr;
    for (const auto& e : case_table())
        if (e.label == "f1") f1 = &e;
    REQUIRE(f1 != nullptr);
    CHECK(f1->closed_form(1.0, 2.0) == doctest::Approx(9.0));
}

TEST_CASE("case table coefficients") {
    REQUIRE(case_table().size() == 33);
    int per_case[7] = {0, 0, 0, 0, 0, 0, 0};
    for (const auto& e : case_table()) ++per_case[e.case_id];
    CHECK(per_case[1] == 7);
    CHECK(per_case[2] == 6);
    CHECK(per_case[3] == 6);
    CHECK(per_case[4] == 4);
    CHECK(per_case[5] == 4);
    CHECK(per_case[6] == 6);

    auto find = [](const std::string& label) {
        for (const auto& e : case_table())
            if (e.label == label) return e;
        throw std::runtime_error("missing " + label);
    };
    const auto g9 = find("g9");
    CHECK(g9.a == 0);
    CHECK(g9.m2 == -1);
    for (double t : {2.0, 3.0}) {
        CHECK(g9.lam2.eval(t) == 0.0);
        CHECK(g9.lam1.eval(t) == -2.0);
        CHECK(g9.lam0.eval(t) == 0.0);
    }
    const auto g5 = find("g5");
    for (double t : {2.0, 5.0}) {
        CHECK(g5.lam2.eval(t) == doctest::Approx(t));
        CHECK(g5.lam1.eval(t) == -2.0);
        CHECK(g5.lam0.eval(t) == 0.0);
    }
    const auto f1 = find("f1");
    for (double t : {2.0, 4.0}) {
        CHECK(f1.lam2.eval(t) == doctest::Approx(2 * t + 1 / t));
        CHECK(f1.lam1.eval(t) == doctest::Approx(t * t));
        CHECK(f1.lam0.eval(t) == doctest::Approx(-1 / t));
    }
}

TEST_CASE("case polynomial audit catches corruption") {
    for (const auto& e : case_table()) {
        CasePolyReport r = verify_case_poly(e, 1000);
        CHECK(r.ok);
        CHECK(r.max_rel_err <= 1e-9);
    }
    CasePolyEntry bad = case_table()[0];
    bad.lam0.k[2] = -bad.lam0.k[2];  // flip one sign
    CasePolyReport r = verify_case_poly(bad, 100);
    CHECK_FALSE(r.ok);
    // parallel and serial kernels agree
    CasePolyReport a = verify_case_poly(case_table()[5], 5000);
    CasePolyReport b = verify_case_poly_serial(case_table()[5], 5000);
    CHECK(a.max_rel_err == b.max_rel_err);
}

TEST_CASE("solve_rho_reduced matches the direct eigensolve") {
    FamilySpec g25{FamilyType::G, 0, 0, 0, 2, 1, 2};  // n = 17
    double reduced = solve_rho_reduced(g25);
    CHECK(reduced == doctest::Approx(2.1576).epsilon(1e-3));
    CHECK(std::abs(reduced - spectral_radius(build_family(g25), 1e-12).rho) <= 1e-9);

    FamilySpec g60{FamilyType::G, 1, 0, 0, 5, 4, 5};  // n = 36
    CHECK(std::abs(solve_rho_reduced(g60) - spectral_radius(build_family(g60), 1e-12).rho) <= 1e-9);

    for (int m = 2; m <= 12; ++m) {
        FamilySpec s{FamilyType::G, 0, 0, 0, m, m - 1, m};
        double rho = solve_rho_reduced(s);
        CHECK(rho * rho < m + 3);
    }
    CHECK_THROWS_AS(solve_rho_reduced(FamilySpec{FamilyType::G, 0, 0, 0, 1, 0, 1}), invalid_parameter);
}

TEST_CASE("H family fixed point via b2") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> leaf(0, 1), tail(0, 6), qq(1, 6);
    int done = 0;
    while (done < 25) {
        FamilySpec h{FamilyType::H, leaf(rng), leaf(rng), leaf(rng), tail(rng), qq(rng), tail(rng)};
        if (h.vertex_count() < 14) continue;
        double reduced = solve_rho_reduced(h);
        double direct = spectral_radius(build_family(h), 1e-12).rho;
        CHECK(std::abs(reduced - direct) <= 1e-9);
        ++done;
    }
}

TEST_CASE("perron reconstruction") {
    FamilySpec g25{FamilyType::G, 0, 0, 0, 2, 1, 2};
    double rho = solve_rho_reduced(g25);
    auto anchors = top_eigenvector_sym3(b1_matrix(rho, g25));
    PerronExtension ext = reconstruct_perron(g25, rho, anchors);
    CHECK(relative_residual(build_family(g25), ext.full, rho) <= 1e-8);
    // mirror symmetry for a = c, p = r
    CHECK(ext.anchors[0] == doctest::Approx(ext.anchors[2]).epsilon(1e-9));
    CHECK(ext.spine_values.front() == doctest::Approx(ext.spine_values.back()).epsilon(1e-9));
    // w_i relation is an identity
    for (int i = 0; i < 3; ++i) CHECK(ext.leaf_value[i] * rho == doctest::Approx(ext.anchors[i]).epsilon(1e-14));

    CHECK_THROWS_AS(reconstruct_perron(g25, 0.9, anchors), invalid_parameter);
    CHECK_THROWS_AS(reconstruct_perron(g25, rho, std::array<double, 3>{1.0, -1.0, 1.0}), invalid_parameter);

    // H family reconstruction
    FamilySpec h{FamilyType::H, 1, 0, 1, 3, 2, 3};
    REQUIRE(h.vertex_count() >= 14);
    double hr = solve_rho_reduced(h);
    auto ha = top_eigenvector_sym3(b2_matrix(hr, h));
    PerronExtension hext = reconstruct_perron(h, hr, ha);
    CHECK(relative_residual(build_family(h), hext.full, hr) <= 1e-8);
}

TEST_CASE("case winners match the closed-form table") {
    CHECK(case_winner(42) == FamilySpec{FamilyType::G, 1, 0, 0, 6, 5, 6});
    CHECK(case_winner(45) == FamilySpec{FamilyType::G, 0, 0, 0, 7, 5, 7});
    CHECK(case_winner(41) == FamilySpec{FamilyType::G, 0, 0, 0, 6, 5, 6});
    for (int n = 39; n <= 60; ++n) CHECK(case_winner(n) == theorem1_extremal(n));
    CHECK_THROWS_AS(case_winner(38), invalid_parameter);
}

TEST_CASE("root comparison transfers from the reduced matrices") {
    // if lambda1(B(t; A)) >= lambda1(B(t; B)) on a t-grid, the fixed points order the same way
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> leaf(0, 1), tail(2, 9);
    for (int i = 0; i < 40; ++i) {
        FamilySpec sa{FamilyType::G, leaf(rng), leaf(rng), leaf(rng), tail(rng), tail(rng), tail(rng)};
        FamilySpec sb{FamilyType::G, leaf(rng), leaf(rng), leaf(rng), tail(rng), tail(rng), tail(rng)};
        if (sa.vertex_count() < 14 || sb.vertex_count() < 14) continue;
        bool dominates = true;
        for (double t = 2.0; t <= 8.0; t += 0.125)
            if (lambda1_sym3(b1_matrix(t, sa)) < lambda1_sym3(b1_matrix(t, sb))) {
                dominates = false;
                break;
            }
        if (!dominates) continue;
        CHECK(solve_rho_reduced(sa) >= solve_rho_reduced(sb) - 1e-12);
    }
}
