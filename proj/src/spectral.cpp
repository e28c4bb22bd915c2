#include "specdiss/spectral.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "specdiss/errors.hpp"

namespace specdiss {

namespace {

void mul_adjacency(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
    const int n = g.size();
    const int words = g.words_per_row();
    for (int u = 0; u < n; ++u) {
        double acc = 0.0;
        const std::uint64_t* r = g.row(u);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                acc += x[w * 64 + b];
                bits &= bits - 1;
            }
        }
        out[u] = acc;
    }
}

}  // namespace

Spectrum spectral_radius(const Graph& g, double tol, int max_iterations) {
    if (g.size() < 1) throw invalid_parameter("spectral_radius: empty graph");
    if (!is_connected(g)) throw invalid_parameter("spectral_radius: graph must be connected");
    const int n = g.size();
    Spectrum s;
    if (n == 1) {
        s.perron = {1.0};
        return s;
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n, 0.0);
    double rho = 0.0, residual = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < max_iterations; ++it) {
        mul_adjacency(g, x, ax);
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += x[i] * ax[i];
        rho = dot;  // Rayleigh quotient; x kept at unit 2-norm
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - rho * x[i]));
        if (residual <= tol * std::max(1.0, rho)) break;
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            ax[i] += x[i];  // power step on A + I
            norm += ax[i] * ax[i];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = ax[i] / norm;
    }
    if (residual > tol * std::max(1.0, rho))
        throw convergence_error("spectral_radius: not converged", rho, residual, it);
    s.rho = rho;
    s.perron = std::move(x);
    s.residual = residual;
    s.iterations = it;
    return s;
}

// -- characteristic polynomial -------------------------------------------
//
// Berkowitz: c_k = T_k * c_{k-1}, where T_k is the (k+1) x k Toeplitz
// matrix with first-column entries 1, -A[k][k], -R*C, -R*M*C, ... built
// from the leading principal submatrix M, its border row R and column C.

IntPolynomial char_poly_exact(const Graph& g) {
    const int n = g.size();
    if (n > 48) throw resource_limit("char_poly_exact: n > 48");
    if (n == 0) return IntPolynomial({mpz_class(1)});
    std::vector<mpz_class> c{1, 0};  // 1x1 block: lambda
    for (int k = 2; k <= n; ++k) {
        std::vector<mpz_class> t(k + 1, 0);
        t[0] = 1;  // t[1] stays 0: adjacency diagonal is zero
        std::vector<mpz_class> vec(k - 1), tmp(k - 1);
        for (int i = 0; i < k - 1; ++i) vec[i] = g.has_edge(k - 1, i) ? 1 : 0;
        for (int j = 2; j <= k; ++j) {
            mpz_class dot = 0;
            for (int i = 0; i < k - 1; ++i)
                if (g.has_edge(k - 1, i)) dot += vec[i];
            t[j] = -dot;
            if (j == k) break;
            for (int i = 0; i < k - 1; ++i) {
                mpz_class acc = 0;
                for (int l : g.neighbors(i))
                    if (l < k - 1) acc += vec[l];
                tmp[i] = acc;
            }
            vec.swap(tmp);
        }
        std::vector<mpz_class> next(k + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k && j <= i; ++j) next[i] += t[i - j] * c[j];
        c = std::move(next);
    }
    // c is descending with c[0] = 1; store ascending
    std::vector<mpz_class> asc(n + 1);
    for (int i = 0; i <= n; ++i) asc[n - i] = c[i];
    return IntPolynomial(std::move(asc));
}

std::vector<std::int64_t> char_poly_small(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw resource_limit("char_poly_small: n > 8");
    std::vector<std::int64_t> c{1, 0};
    for (int k = 2; k <= n; ++k) {
        std::vector<std::int64_t> t(k + 1, 0);
        t[0] = 1;
        std::vector<std::int64_t> vec(k - 1), tmp(k - 1);
        for (int i = 0; i < k - 1; ++i) vec[i] = g.has_edge(k - 1, i) ? 1 : 0;
        for (int j = 2; j <= k; ++j) {
            std::int64_t dot = 0;
            for (int i = 0; i < k - 1; ++i)
                if (g.has_edge(k - 1, i)) dot += vec[i];
            t[j] = -dot;
            for (int i = 0; i < k - 1; ++i) {
                std::int64_t acc = 0;
                for (int l : g.neighbors(i))
                    if (l < k - 1) acc += vec[l];
                tmp[i] = acc;
            }
            vec.swap(tmp);
        }
        std::vector<std::int64_t> next(k + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k && j <= i; ++j) next[i] += t[i - j] * c[j];
        c = std::move(next);
    }
    std::vector<std::int64_t> asc(n + 1);
    for (int i = 0; i <= n; ++i) asc[n - i] = c[i];
    return asc;
}

double largest_root_newton(const std::vector<double>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) throw invalid_parameter("largest_root_newton: constant polynomial");
    double maxc = 0.0;
    for (int i = 0; i < d; ++i) maxc = std::max(maxc, std::abs(coeffs[i] / coeffs[d]));
    double x = 1.0 + maxc;
    for (int it = 0; it < 200; ++it) {
        double p = 0.0, dp = 0.0;
        for (int i = d; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + coeffs[i];
        }
        if (dp == 0.0) break;
        double step = p / dp;
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

double Sym3::max_abs() const {
    double m = 0.0;
    for (double v : {a11, a22, a33, a12, a13, a23}) m = std::max(m, std::abs(v));
    return m;
}

double lambda1_sym3(const Sym3& m) {
    const double off = m.a12 * m.a12 + m.a13 * m.a13 + m.a23 * m.a23;
    double lambda;
    if (off == 0.0) {
        lambda = std::max({m.a11, m.a22, m.a33});
    } else {
        const double q = (m.a11 + m.a22 + m.a33) / 3.0;
        const double b11 = m.a11 - q, b22 = m.a22 - q, b33 = m.a33 - q;
        const double p2 = b11 * b11 + b22 * b22 + b33 * b33 + 2.0 * off;
        const double p = std::sqrt(p2 / 6.0);
        const double detb = (b11 * (b22 * b33 - m.a23 * m.a23) - m.a12 * (m.a12 * b33 - m.a23 * m.a13) +
                             m.a13 * (m.a12 * m.a23 - b22 * m.a13));
        double r = detb / (2.0 * p * p * p);
        r = std::clamp(r, -1.0, 1.0);
        lambda = q + 2.0 * p * std::cos(std::acos(r) / 3.0);
    }
    // Newton polish on det(x*I - M) expanded as a cubic
    const double tr = m.a11 + m.a22 + m.a33;
    const double m2 = m.a11 * m.a22 + m.a11 * m.a33 + m.a22 * m.a33 - off;
    const double det = m.a11 * (m.a22 * m.a33 - m.a23 * m.a23) - m.a12 * (m.a12 * m.a33 - m.a23 * m.a13) +
                       m.a13 * (m.a12 * m.a23 - m.a22 * m.a13);
    for (int i = 0; i < 2; ++i) {
        double f = ((lambda - tr) * lambda + m2) * lambda - det;
        double df = (3.0 * lambda - 2.0 * tr) * lambda + m2;
        if (df == 0.0) break;
        double next = lambda - f / df;
        if (!std::isfinite(next)) break;
        lambda = next;
    }
    return lambda;
}

std::array<double, 3> top_eigenvector_sym3(const Sym3& m) {
    double lambda = lambda1_sym3(m);
    // rows of (M - lambda I); eigenvector from the largest cross product
    const double r[3][3] = {{m.a11 - lambda, m.a12, m.a13},
                            {m.a12, m.a22 - lambda, m.a23},
                            {m.a13, m.a23, m.a33 - lambda}};
    std::array<double, 3> best{0, 0, 0};
    double best_norm = -1.0;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        std::array<double, 3> v{r[i][1] * r[j][2] - r[i][2] * r[j][1], r[i][2] * r[j][0] - r[i][0] * r[j][2],
                                r[i][0] * r[j][1] - r[i][1] * r[j][0]};
        double norm = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if (norm > best_norm) {
            best_norm = norm;
            best = v;
        }
    }
    if (best_norm <= 0.0) return {1.0, 0.0, 0.0};
    double s = std::sqrt(best_norm);
    for (double& v : best) v /= s;
    // Perron orientation: entries of the top eigenvector of an
    // irreducible nonnegative matrix have one sign
    double sum = best[0] + best[1] + best[2];
    if (sum < 0)
        for (double& v : best) v = -v;
    return best;
}

}  // namespace specdiss
