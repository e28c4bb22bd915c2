#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace specdiss {

/// Polynomial with exact integer coefficients, ascending degree.
/// Empty coeffs means the zero polynomial; otherwise the leading
/// coefficient is nonzero.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) { normalize(); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const mpz_class& leading() const { return coeffs.back(); }

    mpz_class eval_int(const mpz_class& x) const;
    /// Sign of p(a/b) for b > 0, computed exactly.
    int sign_at(const mpq_class& x) const;

    bool operator==(const IntPolynomial&) const = default;

    std::string to_json() const;  // decimal coefficient array, ascending
    static IntPolynomial from_json(const std::string& text);
};

IntPolynomial derivative(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);  // divide by content, keep leading sign
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);  // primitive, positive leading
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Number of distinct real roots of p in the half-open interval (a, b].
int sturm_root_count(const IntPolynomial& p, const mpq_class& a, const mpq_class& b);
int count_real_roots(const IntPolynomial& p);

/// Strict upper bound on the absolute value of every root (Cauchy bound).
mpq_class root_bound(const IntPolynomial& p);

/// Location of the largest real root: either exactly a rational, or an
/// interval (lo, hi] containing precisely that one root of the
/// squarefree part.
struct LargestRoot {
    IntPolynomial squarefree;
    std::optional<mpq_class> exact;
    mpq_class lo, hi;

    void refine();  // halve the interval (no-op when exact)
    double midpoint() const;
};

LargestRoot isolate_largest_root(const IntPolynomial& p);

enum class Ordering { LT, EQ, GT };

/// Exact ordering of the largest real roots of p1 and p2.
/// Equality is decided through gcd, never by tolerance.
Ordering compare_largest_roots(const IntPolynomial& p1, const IntPolynomial& p2);

}  // namespace specdiss
