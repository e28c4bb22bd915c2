#include "specdiss/reduced.hpp"

#include <algorithm>
#include <cmath>

#include "specdiss/errors.hpp"

namespace specdiss {

Sym3 b1_matrix(double t, const FamilySpec& spec) {
    spec.validate();
    if (spec.family != FamilyType::G) throw invalid_parameter("b1_matrix: spec must be G-family");
    if (t <= 1.0) throw invalid_parameter("b1_matrix: requires t > 1");
    Sym3 m;
    m.a11 = (spec.p + spec.a + 1) * t - spec.a / t;
    m.a22 = (spec.q + spec.b + 2) * t - spec.b / t;
    m.a33 = (spec.r + spec.c + 1) * t - spec.c / t;
    m.a12 = 1.0;
    m.a23 = 1.0;
    m.a13 = 0.0;
    return m;
}

Sym3 b2_matrix(double t, const FamilySpec& spec) {
    spec.validate();
    if (spec.family != FamilyType::H) throw invalid_parameter("b2_matrix: spec must be H-family");
    if (t <= 1.0) throw invalid_parameter("b2_matrix: requires t > 1");
    Sym3 m;
    m.a11 = (spec.p + spec.a + 1) * t - spec.a / t;
    m.a22 = (spec.q + spec.b + 1) * t - spec.b / t;
    m.a33 = (spec.r + spec.c + 1) * t - spec.c / t;
    m.a12 = t;
    m.a13 = 1.0;
    m.a23 = 1.0;
    return m;
}

Sym3 a_matrix(int a, int b, int c, int m1, int m2, int m3, double t) {
    if (t == 0.0) throw invalid_parameter("a_matrix: t must be nonzero");
    Sym3 m;
    m.a11 = (m1 + a) * t - static_cast<double>(a) / t;
    m.a22 = (m2 + b + 1) * t - static_cast<double>(b) / t;
    m.a33 = (m3 + c) * t - static_cast<double>(c) / t;
    m.a12 = 1.0;
    m.a23 = 1.0;
    m.a13 = 0.0;
    return m;
}

namespace {

Sym3 reduced_matrix(double t, const FamilySpec& spec) {
    return spec.family == FamilyType::G ? b1_matrix(t, spec) : b2_matrix(t, spec);
}

int realized_max_degree(const FamilySpec& spec) {
    if (spec.family == FamilyType::G)
        return std::max({spec.p + spec.a + 1, spec.q + spec.b + 2, spec.r + spec.c + 1, 2});
    return std::max({spec.p + spec.a + 1, spec.q + spec.b + 1, spec.r + spec.c + 1, 3});
}

}  // namespace

double solve_rho_reduced(const FamilySpec& spec) {
    spec.validate();
    if (spec.vertex_count() < 14)
        throw invalid_parameter("solve_rho_reduced: reduction is only valid for n >= 14");
    auto gap = [&](double t) { return t * (t * t - 1.0) - lambda1_sym3(reduced_matrix(t, spec)); };
    const double upper = 1.0 + realized_max_degree(spec);
    double hi = upper, hi_val = gap(upper);
    double lo = 0.0, lo_val = 0.0;
    bool bracketed = false;
    for (double t = upper - 0.25; t >= 2.0 - 1e-12; t -= 0.25) {
        double tt = std::max(t, 2.0);
        double v = gap(tt);
        if ((v <= 0.0 && hi_val > 0.0) || (v >= 0.0 && hi_val < 0.0)) {
            lo = tt;
            lo_val = v;
            bracketed = true;
            break;
        }
        hi = tt;
        hi_val = v;
    }
    if (!bracketed)
        throw model_error("solve_rho_reduced: no sign change in (2, " + std::to_string(upper) +
                          "]; endpoint values g(2)=" + std::to_string(gap(2.0)) +
                          ", g(U)=" + std::to_string(gap(upper)));
    if (lo_val == 0.0) return lo;
    if (hi_val == 0.0) return hi;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        double v = gap(mid);
        if (v == 0.0) return mid;
        if ((v < 0.0) == (lo_val < 0.0)) {
            lo = mid;
            lo_val = v;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

PerronExtension reconstruct_perron(const FamilySpec& spec, double rho, const std::array<double, 3>& x) {
    spec.validate();
    if (rho <= 1.0) throw invalid_parameter("reconstruct_perron: rho must exceed 1");
    for (double v : x)
        if (!(v > 0.0)) throw invalid_parameter("reconstruct_perron: anchors must be positive");
    const double denom = rho * rho - 1.0;
    FamilyGraph fg = build_family_graph(spec);
    PerronExtension ext;
    ext.anchors = x;
    ext.full.assign(fg.graph.size(), 0.0);
    for (int i = 0; i < 3; ++i) {
        ext.leaf_value[i] = x[i] / rho;
        ext.tail_near[i] = rho / denom * x[i];
        ext.tail_far[i] = 1.0 / denom * x[i];
        ext.full[fg.anchors[i]] = x[i];
        for (int leaf : fg.leaves[i]) ext.full[leaf] = ext.leaf_value[i];
        for (auto [y, z] : fg.tails[i]) {
            ext.full[y] = ext.tail_near[i];
            ext.full[z] = ext.tail_far[i];
        }
    }
    if (spec.family == FamilyType::G) {
        auto between = [&](double xi, double xj) { return (rho * xi + xj) / denom; };
        ext.full[fg.spine[1]] = between(x[0], x[1]);  // x_12
        ext.full[fg.spine[2]] = between(x[1], x[0]);  // x_21
        ext.full[fg.spine[4]] = between(x[1], x[2]);  // x_23
        ext.full[fg.spine[5]] = between(x[2], x[1]);  // x_32
    } else {
        ext.full[fg.spine[1]] = (rho * (x[0] + x[1]) + x[2]) / denom;  // x'_{12}
        ext.full[fg.spine[3]] = (x[0] + x[1] + rho * x[2]) / denom;    // x'_3
    }
    ext.spine_values.reserve(fg.spine.size());
    for (int v : fg.spine) ext.spine_values.push_back(ext.full[v]);
    return ext;
}

double relative_residual(const Graph& g, const std::vector<double>& x, double rho) {
    double worst = 0.0, scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (int u = 0; u < g.size(); ++u) {
        double acc = 0.0;
        for (int w : g.neighbors(u)) acc += x[w];
        worst = std::max(worst, std::abs(acc - rho * x[u]));
    }
    return scale > 0.0 ? worst / scale : worst;
}

double TPoly::eval(double t) const {
    double acc = 0.0;
    double tp = 1.0 / (t * t * t);
    for (int i = 0; i < 6; ++i) {
        acc += k[i] * tp;
        tp *= t;
    }
    return acc;
}

double CasePolyEntry::closed_form(double lambda, double t) const {
    return ((lambda + lam2.eval(t)) * lambda + lam1.eval(t)) * lambda + lam0.eval(t);
}

namespace {

// TPoly builder: pairs of (exponent, coefficient)
TPoly tp(std::initializer_list<std::pair<int, int>> terms) {
    TPoly p;
    for (auto [e, c] : terms) p.k[e + 3] = c;
    return p;
}

std::vector<CasePolyEntry> build_case_table() {
    std::vector<CasePolyEntry> t;
    auto add = [&](int case_id, const char* label, int a, int b, int c, int m1, int m2, int m3, TPoly l2, TPoly l1,
                   TPoly l0) {
        t.push_back({case_id, label, a, b, c, m1, m2, m3, l2, l1, l0});
    };
    // case 1: n = 6m
    add(1, "f1", 1, 0, 0, -1, -2, -1, tp({{1, 2}, {-1, 1}}), tp({{2, 1}}), tp({{-1, -1}}));
    add(1, "f2", 0, 1, 0, -1, -2, -1, tp({{1, 2}, {-1, 1}}), tp({{2, 1}}), tp({{1, -1}}));
    add(1, "f3", 0, 1, 0, -1, -3, 0, tp({{1, 2}, {-1, 1}}), tp({{2, 1}, {0, -1}}), tp({{1, -1}}));
    add(1, "f4", 1, 0, 0, -2, -2, 0, tp({{1, 2}, {-1, 1}}), tp({{2, 1}, {0, -1}}), tp({{1, -1}, {-1, -1}}));
    add(1, "f5", 1, 0, 0, -2, -1, -1, tp({{1, 2}, {-1, 1}}), tp({{2, 1}, {0, -1}}), tp({{1, -2}, {-1, -1}}));
    add(1, "f6", 1, 1, 1, -1, -3, -1, tp({{1, 1}, {-1, 3}}), tp({{-2, 3}}), tp({{-1, -1}, {-3, 1}}));
    add(1, "f7", 1, 1, 1, -2, -2, -1, tp({{1, 1}, {-1, 3}}), tp({{-2, 3}}), tp({{1, -1}, {-1, -1}, {-3, 1}}));
    // case 2: n = 6m + 1
    add(2, "g1", 1, 0, 1, -1, -2, -1, tp({{1, 1}, {-1, 2}}), tp({{-2, 1}}), tp({{-1, -1}}));
    add(2, "case2.2", 1, 0, 1, -2, -1, -1, tp({{1, 1}, {-1, 2}}), tp({{-2, 1}, {0, -1}}), tp({{1, -1}, {-1, -2}}));
    add(2, "case2.3", 1, 1, 0, -1, -2, -1, tp({{1, 1}, {-1, 2}}), tp({{-2, 1}}), tp({{1, -1}}));
    add(2, "case2.4", 1, 1, 0, -2, -2, 0, tp({{1, 1}, {-1, 2}}), tp({{-2, 1}, {0, -1}}), tp({{1, -1}, {-1, -1}}));
    add(2, "g2", 0, 0, 0, -1, -2, 0, tp({{1, 2}}), tp({{2, 1}, {0, -2}}), tp({{1, -1}}));
    add(2, "case2.6", 0, 0, 0, -1, -1, -1, tp({{1, 2}}), tp({{2, 1}, {0, -2}}), tp({{1, -2}}));
    // case 3: n = 6m + 2
    add(3, "g3", 1, 0, 0, -1, -2, 0, tp({{1, 1}, {-1, 1}}), tp({{0, -1}}), tp({{-1, -1}}));
    add(3, "case3.2", 0, 1, 0, -1, -2, 0, tp({{1, 1}, {-1, 1}}), tp({{0, -1}}), tp({{1, -1}}));
    add(3, "case3.3", 1, 0, 0, -1, -1, -1, tp({{1, 1}, {-1, 1}}), tp({{0, -1}}), tp({{1, -1}, {-1, -1}}));
    add(3, "case3.4", 1, 1, 1, -1, -2, -1, tp({{-1, 3}}), tp({{-2, 3}, {0, -2}}), tp({{-1, -2}, {-3, 1}}));
    add(3, "g4", 0, 1, 0, 0, -3, 0, tp({{1, 1}, {-1, 1}}), tp({{0, -2}}), tp({}));
    add(3, "case3.6", 1, 0, 0, -2, -1, 0, tp({{1, 1}, {-1, 1}}), tp({{0, -2}}), tp({{1, -1}, {-1, -1}}));
    // case 4: n = 6m + 3
    add(4, "g5", 0, 0, 0, 0, -2, 0, tp({{1, 1}}), tp({{0, -2}}), tp({}));
    add(4, "case4.2", 0, 0, 0, -1, -1, 0, tp({{1, 1}}), tp({{0, -2}}), tp({{1, -1}}));
    add(4, "g6", 1, 1, 0, -1, -2, 0, tp({{-1, 2}}), tp({{-2, 1}, {0, -2}}), tp({{-1, -1}}));
    add(4, "case4.4", 1, 0, 1, -1, -1, -1, tp({{-1, 2}}), tp({{-2, 1}, {0, -2}}), tp({{-1, -2}}));
    // case 5: n = 6m + 4
    add(5, "g7", 0, 1, 0, 0, -2, 0, tp({{-1, 1}}), tp({{0, -2}}), tp({}));
    add(5, "case5.2", 1, 0, 0, -1, -1, 0, tp({{-1, 1}}), tp({{0, -2}}), tp({{-1, -1}}));
    add(5, "g8", 1, 1, 1, 0, -2, -1, tp({{-1, 3}, {1, -1}}), tp({{-2, 3}, {0, -4}}),
        tp({{1, 1}, {-1, -3}, {-3, 1}}));
    add(5, "case5.4", 1, 1, 1, -1, -1, -1, tp({{-1, 3}, {1, -1}}), tp({{-2, 3}, {0, -4}}),
        tp({{-1, -3}, {-3, 1}}));
    // case 6: n = 6m + 5
    add(6, "g9", 0, 0, 0, 0, -1, 0, tp({}), tp({{0, -2}}), tp({}));
    add(6, "g10", 1, 1, 0, 0, -2, 0, tp({{-1, 2}, {1, -1}}), tp({{-2, 1}, {0, -3}}), tp({{1, 1}, {-1, -1}}));
    add(6, "case6.3", 1, 0, 1, -1, 0, -1, tp({{-1, 2}, {1, -1}}), tp({{-2, 1}, {0, -4}}), tp({{-1, -3}}));
    add(6, "case6.4", 1, 0, 1, 0, -1, -1, tp({{-1, 2}, {1, -1}}), tp({{-2, 1}, {0, -3}}), tp({{1, 1}, {-1, -2}}));
    add(6, "case6.5", 1, 1, 0, -1, -1, 0, tp({{-1, 2}, {1, -1}}), tp({{-2, 1}, {0, -3}}), tp({{-1, -1}}));
    add(6, "case6.6", 1, 1, 0, -1, -2, 1, tp({{-1, 2}, {1, -1}}), tp({{-2, 1}, {0, -4}}), tp({{1, 1}, {-1, -2}}));
    return t;
}

double det_shifted(double lambda, const Sym3& m) {
    const double b11 = lambda - m.a11, b22 = lambda - m.a22, b33 = lambda - m.a33;
    const double b12 = -m.a12, b13 = -m.a13, b23 = -m.a23;
    return b11 * (b22 * b33 - b23 * b23) - b12 * (b12 * b33 - b23 * b13) + b13 * (b12 * b23 - b22 * b13);
}

CasePolyReport audit_case_poly(const CasePolyEntry& e, int samples, bool parallel) {
    if (samples < 1) throw invalid_parameter("verify_case_poly: samples must be positive");
    CasePolyReport rep;
    rep.entry = e.label;
    rep.samples = samples;
    int nl = 1;
    while (nl * nl < samples) ++nl;
    int nt = (samples + nl - 1) / nl;
    const long total = static_cast<long>(nl) * nt;
    double max_err = 0.0, worst_l = 0.0, worst_t = 0.0;
#pragma omp parallel if (parallel)
    {
        double local_err = -1.0, local_l = 0.0, local_t = 0.0;
#pragma omp for nowait
        for (long idx = 0; idx < total; ++idx) {
            int i = static_cast<int>(idx / nt);
            int j = static_cast<int>(idx % nt);
            double lambda = -3.0 + 6.0 * (nl == 1 ? 0.5 : static_cast<double>(i) / (nl - 1));
            double t = 2.0 + 4.0 * (nt == 1 ? 0.5 : static_cast<double>(j) / (nt - 1));
            double direct = det_shifted(lambda, a_matrix(e.a, e.b, e.c, e.m1, e.m2, e.m3, t));
            double closed = e.closed_form(lambda, t);
            double err = std::abs(direct - closed) / std::max({1.0, std::abs(direct), std::abs(closed)});
            if (err > local_err) {
                local_err = err;
                local_l = lambda;
                local_t = t;
            }
        }
#pragma omp critical
        if (local_err > max_err) {
            max_err = local_err;
            worst_l = local_l;
            worst_t = local_t;
        }
    }
    rep.max_rel_err = max_err;
    rep.worst_lambda = worst_l;
    rep.worst_t = worst_t;
    rep.ok = max_err <= 1e-9;
    return rep;
}

}  // namespace

const std::vector<CasePolyEntry>& case_table() {
    static const std::vector<CasePolyEntry> table = build_case_table();
    return table;
}

CasePolyReport verify_case_poly(const CasePolyEntry& entry, int samples) { return audit_case_poly(entry, samples, true); }

CasePolyReport verify_case_poly_serial(const CasePolyEntry& entry, int samples) {
    return audit_case_poly(entry, samples, false);
}

std::vector<FamilySpec> case_candidates(int n) {
    if (n < 39) throw invalid_parameter("case_candidates: requires n >= 39");
    const int m = n / 6;
    const int case_id = n % 6 + 1;
    std::vector<FamilySpec> out;
    for (const auto& e : case_table())
        if (e.case_id == case_id)
            out.push_back({FamilyType::G, e.a, e.b, e.c, m + e.m1, m + e.m2, m + e.m3});
    return out;
}

FamilySpec case_winner(int n) {
    auto candidates = case_candidates(n);
    std::vector<double> rho(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) rho[i] = solve_rho_reduced(candidates[i]);
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (rho[i] < rho[best]) best = i;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == best || std::abs(rho[i] - rho[best]) >= 1e-7) continue;
        // near-tie: settle with exact characteristic polynomials
        if (n > 48)
            throw model_error("case_winner: near-tie between " + candidates[best].to_string() + " and " +
                              candidates[i].to_string() + " beyond the exact-comparison window");
        Ordering ord = compare_largest_roots(char_poly_exact(build_family(candidates[i])),
                                             char_poly_exact(build_family(candidates[best])));
        if (ord == Ordering::EQ)
            throw model_error("case_winner: exact tie between " + candidates[best].to_string() + " and " +
                              candidates[i].to_string());
        if (ord == Ordering::LT) best = i;
    }
    return candidates[best];
}

}  // namespace specdiss
