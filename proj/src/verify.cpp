#include "specdiss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "specdiss/dissociation.hpp"
#include "specdiss/errors.hpp"
#include "specdiss/family.hpp"
#include "specdiss/intpoly.hpp"
#include "specdiss/reduced.hpp"
#include "specdiss/spectral.hpp"

namespace specdiss {

using nlohmann::json;

std::string VerifyReport::to_json() const {
    json j{{"name", name}, {"status", ok ? "PASS" : "FAIL"}, {"detail", lines}};
    return j.dump(2);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw invalid_parameter("random_tree: n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return path(2);
    // Pruefer decoding gives the uniform distribution on labeled trees
    std::vector<int> code(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& c : code) c = pick(rng);
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    Graph g(n);
    std::vector<char> used(n, 0);
    for (int c : code) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                g.add_edge(leaf, c);
                used[leaf] = 1;
                --deg[c];
                break;
            }
        }
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 1 && !used[i]) (u < 0 ? u : v) = i;
    g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    Graph g = random_tree(n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < extra_edges; ++e) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            int u = pick(rng), v = pick(rng);
            if (u != v && !g.has_edge(u, v)) {
                g.add_edge(u, v);
                break;
            }
        }
    }
    return g;
}

VerifyReport verify_star_law() {
    VerifyReport rep;
    rep.name = "star-law";
    rep.ok = true;
    for (int t = 1; t <= 12; ++t) {
        double rho = spectral_radius(star(t), 1e-12).rho;
        double err = std::abs(rho - std::sqrt(static_cast<double>(t)));
        if (err > 1e-10) {
            rep.ok = false;
            rep.add("S_" + std::to_string(t) + ": |rho - sqrt(t)| = " + std::to_string(err));
        }
    }
    if (rep.ok) rep.add("rho(S_t) = sqrt(t) within 1e-10 for t = 1..12");
    return rep;
}

namespace {

// exact trichotomy of rho against 2 for a small graph
// 0: rho < 2, 1: rho = 2, 2: rho > 2, 3: ambiguous (cannot happen:
// integer char polys separate eigenvalues from a non-root 2)
int classify_against_two(const Graph& g) {
    auto cp = char_poly_small(g);
    long long at2 = 0;
    for (int i = static_cast<int>(cp.size()) - 1; i >= 0; --i) at2 = at2 * 2 + cp[i];
    if (at2 == 0) {
        std::vector<mpz_class> cs(cp.begin(), cp.end());
        IntPolynomial p(std::move(cs));
        return sturm_root_count(p, 2, g.size() + 1) == 0 ? 1 : 2;
    }
    std::vector<double> cd(cp.begin(), cp.end());
    double rho = largest_root_newton(cd);
    if (std::abs(rho - 2.0) < 1e-4) return 3;
    return rho < 2.0 ? 0 : 2;
}

}  // namespace

VerifyReport verify_smith_sweep(const RunConfig& cfg) {
    VerifyReport rep;
    rep.name = "smith-sweep";
    rep.ok = true;
    const int workers = cfg.effective_workers();
    for (int n = 1; n <= 7; ++n) {
        const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
        std::uint64_t connected = 0, below = 0, at = 0;
        std::uint64_t violations = 0;
        std::string first_violation;
#pragma omp parallel for schedule(dynamic, 4096) num_threads(workers) reduction(+ : connected, below, at, violations) \
    if (workers > 1)
        for (long long mask = 0; mask < static_cast<long long>(limit); ++mask) {
            Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
            if (!is_connected(g)) continue;
            ++connected;
            int cls = classify_against_two(g);
            bool in_below = is_smith_sublimit(g);
            bool in_at = is_smith_boundary(g);
            if (cls == 0) ++below;
            if (cls == 1) ++at;
            bool fine = cls != 3 && ((cls == 0) == in_below) && ((cls == 1) == in_at);
            if (!fine) {
                ++violations;
#pragma omp critical
                if (first_violation.empty()) first_violation = encode_graph6(g);
            }
        }
        std::ostringstream os;
        os << "n=" << n << ": connected=" << connected << " rho<2: " << below << " rho=2: " << at
           << " violations=" << violations;
        if (violations > 0) {
            rep.ok = false;
            os << " first=" << first_violation;
        }
        rep.add(os.str());
    }
    return rep;
}

VerifyReport verify_lemma14(int count, const RunConfig& cfg) {
    VerifyReport rep;
    rep.name = "lemma14-fixed-point";
    rep.ok = true;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> leaf(0, 2), tail(0, 11), fam(0, 1);
    double worst_gap = 0.0, worst_residual = 0.0;
    int done_g = 0, done_h = 0;
    while (done_g < count || done_h < count / 2) {
        bool want_h = done_g >= count || (done_h < count / 2 && fam(rng) == 1);
        FamilySpec spec;
        spec.family = want_h ? FamilyType::H : FamilyType::G;
        spec.a = leaf(rng);
        spec.b = leaf(rng);
        spec.c = leaf(rng);
        spec.p = tail(rng);
        spec.q = want_h ? 1 + tail(rng) % 11 : tail(rng);
        spec.r = tail(rng);
        int n = spec.vertex_count();
        if (n < 14 || n > 80) continue;
        double reduced = solve_rho_reduced(spec);
        Graph g = build_family(spec);
        double direct = spectral_radius(g, 1e-12).rho;
        double gap = std::abs(reduced - direct);
        worst_gap = std::max(worst_gap, gap);
        Sym3 b = spec.family == FamilyType::G ? b1_matrix(reduced, spec) : b2_matrix(reduced, spec);
        auto anchors = top_eigenvector_sym3(b);
        auto ext = reconstruct_perron(spec, reduced, anchors);
        double res = relative_residual(g, ext.full, reduced);
        worst_residual = std::max(worst_residual, res);
        if (gap > 1e-9 || res > 1e-8) {
            rep.ok = false;
            rep.add(spec.to_string() + ": gap=" + std::to_string(gap) + " residual=" + std::to_string(res));
        }
        (want_h ? done_h : done_g) += 1;
    }
    std::ostringstream os;
    os << done_g << " G specs + " << done_h << " H specs; worst |reduced-direct| = " << worst_gap
       << ", worst reconstruction residual = " << worst_residual;
    rep.add(os.str());
    return rep;
}

VerifyReport verify_cor15() {
    VerifyReport rep;
    rep.name = "corollary15-bound";
    rep.ok = true;
    int cases = 0;
    double tightest = 1e9;
    for (int m = 2; m <= 13; ++m) {
        std::array<double, 6> rho{};
        for (int l = 0; l <= 5; ++l) {
            int n = 6 * m + l;
            rho[l] = spectral_radius(build_family(theorem1_extremal(n)), 1e-12).rho;
            ++cases;
            tightest = std::min(tightest, (m + 3) - rho[l] * rho[l]);
            if (!(rho[l] * rho[l] < m + 3)) {
                rep.ok = false;
                rep.add("m=" + std::to_string(m) + " l=" + std::to_string(l) +
                        ": rho^2 = " + std::to_string(rho[l] * rho[l]));
            }
        }
        // G_{m,l} embeds in G_{m,5}, so its radius cannot exceed rho(G_{m,5})
        for (int l = 0; l <= 4; ++l)
            if (rho[l] > rho[5] + 1e-12) {
                rep.ok = false;
                rep.add("m=" + std::to_string(m) + " l=" + std::to_string(l) + ": rho exceeds rho(G_{m,5})");
            }
    }
    rep.add(std::to_string(cases) + " (m,l) cases; smallest slack of m+3-rho^2 = " + std::to_string(tightest));
    return rep;
}

VerifyReport verify_casepolys(int samples) {
    VerifyReport rep;
    rep.name = "case-polynomials";
    rep.ok = true;
    double worst = 0.0;
    for (const auto& entry : case_table()) {
        CasePolyReport r = verify_case_poly(entry, samples);
        worst = std::max(worst, r.max_rel_err);
        if (!r.ok) {
            rep.ok = false;
            std::ostringstream os;
            os << entry.label << ": max rel err " << r.max_rel_err << " at lambda=" << r.worst_lambda
               << " t=" << r.worst_t;
            rep.add(os.str());
        }
    }
    rep.add(std::to_string(case_table().size()) + " entries x " + std::to_string(samples) +
            " samples, worst rel err = " + std::to_string(worst));
    const CasePolyEntry* g10 = nullptr;
    for (const auto& e : case_table())
        if (e.label == "g10") g10 = &e;
    double worst_g10 = 0.0;
    for (int i = 0; i < 100; ++i) {
        double t = 2.0 + 4.0 * i / 99.0;
        worst_g10 = std::max(worst_g10, std::abs(g10->closed_form(t, t)));
    }
    if (worst_g10 > 1e-12) {
        rep.ok = false;
        rep.add("g10(t) identity violated: worst |g10(t)| = " + std::to_string(worst_g10));
    } else {
        rep.add("g10(t) = 0 at 100 points, worst |value| = " + std::to_string(worst_g10));
    }
    return rep;
}

VerifyReport verify_ordering_chains() {
    VerifyReport rep;
    rep.name = "ordering-chains";
    rep.ok = true;
    const char* chain1[] = {"f1", "f2", "f3", "f4", "f5"};
    const char* chain2[] = {"f6", "f7"};
    auto find = [](const char* label) -> const CasePolyEntry& {
        for (const auto& e : case_table())
            if (e.label == label) return e;
        throw error("ordering-chains: missing label");
    };
    std::uint64_t checked = 0;
    auto check_chain = [&](const char* const* labels, int len) {
        for (int i = 0; i + 1 < len; ++i) {
            const auto& hi = find(labels[i]);
            const auto& lo = find(labels[i + 1]);
            for (int li = 1; li <= 60; ++li)
                for (int ti = 0; ti <= 40; ++ti) {
                    double lambda = 5.0 * li / 60.0;
                    double t = 2.0 + 4.0 * ti / 40.0;
                    ++checked;
                    if (!(hi.closed_form(lambda, t) > lo.closed_form(lambda, t))) {
                        rep.ok = false;
                        std::ostringstream os;
                        os << labels[i] << " <= " << labels[i + 1] << " at lambda=" << lambda << " t=" << t;
                        rep.add(os.str());
                    }
                }
        }
    };
    check_chain(chain1, 5);
    check_chain(chain2, 2);
    rep.add("strict pointwise ordering on " + std::to_string(checked) + " grid comparisons");
    return rep;
}

namespace {

// hybrid strict comparison: true iff rho(a) > rho(b), settled exactly when close
bool rho_strictly_greater(const Graph& a, const Graph& b) {
    double ra = spectral_radius(a, 1e-12).rho;
    double rb = spectral_radius(b, 1e-12).rho;
    if (std::abs(ra - rb) >= 1e-7) return ra > rb;
    return compare_largest_roots(char_poly_exact(a), char_poly_exact(b)) == Ordering::GT;
}

}  // namespace

VerifyReport verify_monotonicity(const RunConfig& cfg) {
    VerifyReport rep;
    rep.name = "lemma-monotonicity";
    rep.ok = true;
    std::mt19937_64 rng(cfg.seed);

    // proper subgraph (edge removal keeping connectivity)
    int done = 0, violations = 0;
    while (done < 50) {
        std::uniform_int_distribution<int> size(6, 14), extra(1, 6);
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g.size(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges.emplace_back(u, v);
        std::shuffle(edges.begin(), edges.end(), rng);
        bool found = false;
        for (auto [u, v] : edges) {
            Graph sub = without_edge(g, u, v);
            if (!is_connected(sub)) continue;
            found = true;
            if (!rho_strictly_greater(g, sub)) ++violations;
            break;
        }
        if (found) ++done;
    }
    if (violations > 0) rep.ok = false;
    rep.add("proper-subgraph strictness: 50 instances, " + std::to_string(violations) + " violations");

    // internal-path subdivision
    done = 0;
    violations = 0;
    while (done < 50) {
        std::uniform_int_distribution<int> size(6, 12), extra(0, 4);
        Graph g = random_connected_graph(size(rng), extra(rng), rng);
        if (is_wtilde_graph(g)) continue;
        auto e = find_internal_path_edge(g);
        if (!e) continue;
        Graph sub = subdivide(g, e->first, e->second);
        if (!rho_strictly_greater(g, sub)) ++violations;
        ++done;
    }
    if (violations > 0) rep.ok = false;
    rep.add("internal-path subdivision decrease: 50 instances, " + std::to_string(violations) + " violations");

    // path shift G^{k,m} vs G^{k+1,m-1}
    done = 0;
    violations = 0;
    while (done < 50) {
        std::uniform_int_distribution<int> size(3, 8), extra(0, 3), kk(1, 4);
        Graph base = random_connected_graph(size(rng), extra(rng), rng);
        int k = kk(rng), m = kk(rng);
        if (k < m) std::swap(k, m);
        std::uniform_int_distribution<int> vert(0, base.size() - 1);
        int v = vert(rng);
        Graph a = attach_two_paths(base, v, k, m);
        Graph b = attach_two_paths(base, v, k + 1, m - 1);
        if (!rho_strictly_greater(a, b)) ++violations;
        ++done;
    }
    if (violations > 0) rep.ok = false;
    rep.add("path-shift inequality: 50 instances, " + std::to_string(violations) + " violations");

    // matrix sum bounds on nonnegative symmetric 3x3 pairs
    done = 0;
    violations = 0;
    std::uniform_real_distribution<double> entry(0.0, 5.0);
    while (done < 100) {
        auto rand_sym = [&] {
            Sym3 s;
            s.a11 = entry(rng);
            s.a22 = entry(rng);
            s.a33 = entry(rng);
            s.a12 = entry(rng);
            s.a13 = entry(rng);
            s.a23 = entry(rng);
            return s;
        };
        Sym3 a = rand_sym(), b = rand_sym();
        Sym3 sum;
        sum.a11 = a.a11 + b.a11;
        sum.a22 = a.a22 + b.a22;
        sum.a33 = a.a33 + b.a33;
        sum.a12 = a.a12 + b.a12;
        sum.a13 = a.a13 + b.a13;
        sum.a23 = a.a23 + b.a23;
        double la = lambda1_sym3(a), lb = lambda1_sym3(b), ls = lambda1_sym3(sum);
        if (!(std::max(la, lb) <= ls + 1e-9 && ls <= la + lb + 1e-9)) ++violations;
        ++done;
    }
    if (violations > 0) rep.ok = false;
    rep.add("matrix-sum bounds: 100 instances, " + std::to_string(violations) + " violations");
    return rep;
}

namespace {

int diss_brute_force(const Graph& g) {
    const int n = g.size();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row(v)[0];
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v) & 1)
                if (std::popcount(rows[v] & mask) > 1) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

VerifyReport verify_dissociation_oracles(const RunConfig& cfg) {
    VerifyReport rep;
    rep.name = "dissociation-oracles";
    rep.ok = true;
    std::mt19937_64 rng(cfg.seed);
    int mismatch_dp = 0;
    {
        std::uniform_int_distribution<int> size(2, 18);
        for (int i = 0; i < 500; ++i) {
            Graph t = random_tree(size(rng), rng);
            if (diss_tree_dp(t) != diss_exact(t).first) {
                ++mismatch_dp;
                rep.add("tree DP mismatch: " + encode_graph6(t));
            }
        }
    }
    int mismatch_bf = 0;
    {
        std::uniform_int_distribution<int> size(2, 12), extra(0, 8);
        for (int i = 0; i < 200; ++i) {
            Graph g = random_connected_graph(size(rng), extra(rng), rng);
            if (diss_exact(g).first != diss_brute_force(g)) {
                ++mismatch_bf;
                rep.add("branch-and-bound mismatch: " + encode_graph6(g));
            }
        }
    }
    rep.ok = mismatch_dp == 0 && mismatch_bf == 0;
    rep.add("500 trees DP vs exact: " + std::to_string(mismatch_dp) + " mismatches; 200 graphs exact vs subsets: " +
            std::to_string(mismatch_bf) + " mismatches");
    return rep;
}

VerifyReport verify_claims() {
    VerifyReport rep;
    rep.name = "claims-1-2";
    rep.ok = true;
    std::uint64_t trees_checked = 0, sets_checked = 0, claim_failures = 0, disconnected = 0;
    for (int n = 5; n <= 12; ++n) {
        auto stream = enumerate_free_trees(n);
        while (auto t = stream()) {
            if (diss_tree_dp(*t) != n - 3) continue;
            ++trees_checked;
            std::vector<std::uint64_t> rows(n);
            for (int v = 0; v < n; ++v) rows[v] = t->row(v)[0];
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                if (std::popcount(mask) != n - 3) continue;
                bool valid = true;
                for (int v = 0; v < n && valid; ++v)
                    if ((mask >> v) & 1)
                        if (std::popcount(rows[v] & mask) > 1) valid = false;
                if (!valid) continue;
                std::vector<int> d;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) d.push_back(v);
                Hypergraph h = generated_hypergraph(*t, d);
                ++sets_checked;
                if (!claim1_check(h) || !claim2_check(h)) {
                    ++claim_failures;
                    if (claim_failures <= 3) rep.add("claim failure: " + encode_graph6(*t));
                }
                if (!hypergraph_connected(h)) ++disconnected;
            }
        }
    }
    rep.ok = claim_failures == 0;
    std::ostringstream os;
    os << trees_checked << " trees with diss = n-3 (n <= 12), " << sets_checked
       << " maximum dissociation sets; claim violations: " << claim_failures
       << "; disconnected hypergraphs: " << disconnected;
    rep.add(os.str());
    return rep;
}

}  // namespace specdiss
