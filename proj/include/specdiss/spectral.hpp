#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "specdiss/graph.hpp"
#include "specdiss/intpoly.hpp"

namespace specdiss {

struct Spectrum {
    double rho = 0.0;
    std::vector<double> perron;  // unit 2-norm, all entries positive
    double residual = 0.0;       // inf-norm of A*x - rho*x
    int iterations = 0;
};

/// Spectral radius and Perron vector of a connected graph via power
/// iteration on A + I (the shift keeps bipartite graphs from
/// oscillating) followed by a Rayleigh-quotient estimate.
Spectrum spectral_radius(const Graph& g, double tol = 1e-12, int max_iterations = 1000000);

/// Exact characteristic polynomial det(lambda*I - A) by the Berkowitz
/// division-free method. Capped at n <= 48 to bound coefficient growth.
IntPolynomial char_poly_exact(const Graph& g);

/// int64 variant for small graphs (n <= 8); exact in that range.
std::vector<std::int64_t> char_poly_small(const Graph& g);

/// Largest root of a monic polynomial whose roots are all real,
/// by Newton from above (monotone convergence).
double largest_root_newton(const std::vector<double>& ascending_coeffs);

/// Symmetric 3x3 matrix.
struct Sym3 {
    double a11 = 0, a22 = 0, a33 = 0;
    double a12 = 0, a13 = 0, a23 = 0;

    std::array<double, 3> mul(const std::array<double, 3>& x) const {
        return {a11 * x[0] + a12 * x[1] + a13 * x[2], a12 * x[0] + a22 * x[1] + a23 * x[2],
                a13 * x[0] + a23 * x[1] + a33 * x[2]};
    }
    double max_abs() const;
};

/// Largest eigenvalue via the trigonometric cubic formula plus Newton polish.
double lambda1_sym3(const Sym3& m);

/// Positive unit eigenvector of m for its largest eigenvalue
/// (inverse-iteration style solve; m must be irreducible nonnegative).
std::array<double, 3> top_eigenvector_sym3(const Sym3& m);

}  // namespace specdiss
