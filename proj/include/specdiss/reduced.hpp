#pragma once

#include <array>
#include <string>
#include <vector>

#include "specdiss/family.hpp"
#include "specdiss/spectral.hpp"

namespace specdiss {

/// The 3x3 reduction matrix of a G-family spec at shift t:
/// diag((p+a+1)t - a/t, (q+b+2)t - b/t, (r+c+1)t - c/t) plus the
/// tridiagonal 0/1 coupling.
Sym3 b1_matrix(double t, const FamilySpec& spec);

/// H-family analogue: diag((p+a+1)t - a/t, (q+b+1)t - b/t, (r+c+1)t - c/t)
/// with off-diagonal entries (1,2) = t and (1,3) = (2,3) = 1.
Sym3 b2_matrix(double t, const FamilySpec& spec);

/// Residual matrix of the t(m+1)I shift decomposition:
/// diag((m1+a)t - a/t, (m2+b+1)t - b/t, (m3+c)t - c/t) plus the coupling.
Sym3 a_matrix(int a, int b, int c, int m1, int m2, int m3, double t);

/// Spectral radius of the realized family graph as the maximum root of
/// t(t^2-1) = lambda1(B(t)) on (2, U]; valid for n >= 14 where the
/// radius exceeds 2. Coarse descending scan (step 0.25) locates the last
/// sign change, then bisection to 1e-13.
double solve_rho_reduced(const FamilySpec& spec);

struct PerronExtension {
    std::array<double, 3> anchors{};
    std::array<double, 3> leaf_value{};          // w_i
    std::array<double, 3> tail_near{};           // y_i
    std::array<double, 3> tail_far{};            // z_i
    std::vector<double> spine_values;            // along FamilyGraph::spine
    std::vector<double> full;                    // indexed by realized-graph vertex
};

/// Extend anchor values to the whole graph through the eigenvector
/// relations; rho must exceed 1 and the anchors must be positive.
PerronExtension reconstruct_perron(const FamilySpec& spec, double rho, const std::array<double, 3>& x_anchors);

/// inf-norm of A*x - rho*x relative to the inf-norm of x.
double relative_residual(const Graph& g, const std::vector<double>& x, double rho);

/// One determinant display from the six-case analysis: the candidate
/// parameters and the closed-form cubic coefficients as small integer
/// combinations of powers of t.
struct TPoly {
    // coefficient of t^e for e = -3..2, stored at index e+3
    std::array<int, 6> k{};
    double eval(double t) const;
};

struct CasePolyEntry {
    int case_id = 0;  // handles n with n mod 6 == case_id - 1
    std::string label;
    int a = 0, b = 0, c = 0;
    int m1 = 0, m2 = 0, m3 = 0;
    TPoly lam2, lam1, lam0;  // monic cubic in lambda

    double closed_form(double lambda, double t) const;
};

const std::vector<CasePolyEntry>& case_table();

struct CasePolyReport {
    std::string entry;
    int samples = 0;
    double max_rel_err = 0.0;
    bool ok = false;
    double worst_lambda = 0.0;
    double worst_t = 0.0;
};

/// Compare det(lambda I - A) against the transcribed closed form on a
/// (lambda, t) grid over [-3,3] x [2,6].
CasePolyReport verify_case_poly(const CasePolyEntry& entry, int samples);
CasePolyReport verify_case_poly_serial(const CasePolyEntry& entry, int samples);

/// Candidate specs considered by the paper's case for this order.
std::vector<FamilySpec> case_candidates(int n);

/// The candidate with the smallest spectral radius; must agree with
/// theorem1_extremal. Exact tie-break below 1e-7; exact ties throw.
FamilySpec case_winner(int n);

}  // namespace specdiss
