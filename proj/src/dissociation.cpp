#include "specdiss/dissociation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

#include "specdiss/errors.hpp"

namespace specdiss {

bool is_dissociation_set(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.size(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.size()) throw invalid_parameter("is_dissociation_set: vertex out of range");
        in[v] = 1;
    }
    for (int v : s) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (in[w]) ++d;
        if (d > 1) return false;
    }
    return true;
}

namespace {

struct Bnb {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> rows;  // neighborhoods as single-word masks
    std::vector<int> order;           // exploration order (descending degree)
    int best = 0;
    std::uint64_t best_set = 0;

    explicit Bnb(const Graph& graph) : g(graph), n(graph.size()), rows(n) {
        for (int v = 0; v < n; ++v) rows[v] = n > 0 ? g.row(v)[0] : 0;
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    // chosen/matched are masks over original vertex ids
    bool try_add(int v, std::uint64_t& chosen, std::uint64_t& matched) const {
        std::uint64_t nb = rows[v] & chosen;
        int c = std::popcount(nb);
        if (c >= 2) return false;
        if (c == 1) {
            std::uint64_t u = nb;  // single bit
            if (matched & u) return false;
            matched |= u | (std::uint64_t{1} << v);
        }
        chosen |= std::uint64_t{1} << v;
        return true;
    }

    void search(int pos, int count, std::uint64_t chosen, std::uint64_t matched) {
        if (count + (n - pos) <= best) return;
        if (pos == n) {
            best = count;
            best_set = chosen;
            return;
        }
        int v = order[pos];
        std::uint64_t c2 = chosen, m2 = matched;
        if (try_add(v, c2, m2)) search(pos + 1, count + 1, c2, m2);
        search(pos + 1, count, chosen, matched);
    }

    // first set of the known optimum size in id order = lex-smallest witness
    bool witness(int pos, int count, std::uint64_t chosen, std::uint64_t matched, int target, std::uint64_t& out) const {
        if (count == target) {
            out = chosen;
            return true;
        }
        if (count + (n - pos) < target) return false;
        int v = pos;
        std::uint64_t c2 = chosen, m2 = matched;
        if (try_add(v, c2, m2) && witness(pos + 1, count + 1, c2, m2, target, out)) return true;
        return witness(pos + 1, count, chosen, matched, target, out);
    }
};

}  // namespace

std::pair<int, DissociationCertificate> diss_exact(const Graph& g) {
    if (g.size() > 40) throw resource_limit("diss_exact: n > 40 (use diss_tree_dp for trees)");
    DissociationCertificate cert;
    if (g.size() == 0) return {0, cert};
    Bnb bnb(g);
    // greedy start for the bound
    {
        std::uint64_t chosen = 0, matched = 0;
        int count = 0;
        for (int v : bnb.order)
            if (bnb.try_add(v, chosen, matched)) ++count;
        bnb.best = count;
        bnb.best_set = chosen;
    }
    bnb.search(0, 0, 0, 0);
    std::uint64_t lex_set = bnb.best_set;
    bnb.witness(0, 0, 0, 0, bnb.best, lex_set);
    for (int v = 0; v < g.size(); ++v)
        if ((lex_set >> v) & 1) cert.set.push_back(v);
    cert.size = bnb.best;
    cert.max_induced_degree = 0;
    for (int v : cert.set) {
        int d = 0;
        for (int w : g.neighbors(v))
            if ((lex_set >> w) & 1) ++d;
        cert.max_induced_degree = std::max(cert.max_induced_degree, d);
    }
    return {bnb.best, cert};
}

int diss_tree_dp(const Graph& t) {
    const int n = t.size();
    if (!is_tree(t)) throw invalid_parameter("diss_tree_dp: input is not a tree");
    if (n == 1) return 1;
    // iterative post-order from root 0
    std::vector<int> parent(n, -1), dfs_order;
    dfs_order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        dfs_order.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    // dp[v][0]: v out; dp[v][1]: v in S, no S-neighbor in its subtree;
    // dp[v][2]: v in S, matched to one child. If v is in S every child
    // must be out, except the single open child that matches it.
    constexpr int NEG = -1 << 20;
    std::vector<std::array<int, 3>> dp(n);
    for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
        int v = *it;
        int out = 0, children_out = 0;
        int best_swap = NEG;  // promote one child from state 0 to state 1
        for (int w : t.neighbors(v)) {
            if (w == parent[v]) continue;
            out += std::max({dp[w][0], dp[w][1], dp[w][2]});
            children_out += dp[w][0];
            best_swap = std::max(best_swap, dp[w][1] - dp[w][0]);
        }
        dp[v] = {out, 1 + children_out, best_swap > NEG ? 1 + children_out + best_swap : NEG};
    }
    return std::max({dp[0][0], dp[0][1], dp[0][2]});
}

Hypergraph generated_hypergraph(const Graph& g, const std::vector<int>& dissociation) {
    if (!is_dissociation_set(g, dissociation)) throw invalid_parameter("generated_hypergraph: D is not a dissociation set");
    const int n = g.size();
    std::vector<char> in_d(n, 0);
    for (int v : dissociation) in_d[v] = 1;
    Hypergraph h;
    for (int v = 0; v < n; ++v)
        if (!in_d[v]) h.vertices.push_back(v);

    // type 1: plain edges inside V'
    for (int u = 0; u < n; ++u) {
        if (in_d[u]) continue;
        for (int v : g.neighbors(u))
            if (!in_d[v] && u < v) h.edges.push_back({u, v});
    }

    auto neighborhood_edge = [&](const std::vector<int>& comp) {
        std::vector<int> e;
        for (int u : comp)
            for (int w : g.neighbors(u))
                if (!in_d[w]) e.push_back(w);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() >= 2) h.edges.push_back(std::move(e));
    };

    // components of G[D] are singletons or matched pairs
    std::vector<char> done(n, 0);
    for (int u = 0; u < n; ++u) {
        if (!in_d[u] || done[u]) continue;
        done[u] = 1;
        int mate = -1;
        for (int w : g.neighbors(u))
            if (in_d[w]) mate = w;
        if (mate == -1) {
            neighborhood_edge({u});
        } else {
            done[mate] = 1;
            neighborhood_edge({u, mate});
        }
    }
    return h;
}

Graph skeleton(const Graph& g, const std::vector<int>& anchors) {
    const int n = g.size();
    std::vector<char> is_anchor(n, 0);
    for (int v : anchors) {
        if (v < 0 || v >= n) throw invalid_parameter("skeleton: anchor out of range");
        is_anchor[v] = 1;
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (is_anchor[v] || comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (!is_anchor[w] && comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<char>> touches(ncomp, std::vector<char>(anchors.size(), 0));
    for (std::size_t ai = 0; ai < anchors.size(); ++ai)
        for (int w : g.neighbors(anchors[ai]))
            if (!is_anchor[w]) touches[comp[w]][ai] = 1;
    std::vector<char> drop(ncomp, 0);
    for (int c = 0; c < ncomp; ++c) {
        int cnt = 0;
        for (char t : touches[c]) cnt += t;
        drop[c] = cnt == 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (is_anchor[v] || !drop[comp[v]]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool claim1_check(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    return true;
}

bool claim2_check(const Hypergraph& h) {
    if (h.edges.size() != 3) return true;
    std::vector<int> support;
    for (const auto& e : h.edges) {
        if (e.size() != 2) return true;
        support.insert(support.end(), e.begin(), e.end());
    }
    std::sort(support.begin(), support.end());
    std::vector<int> uniq = support;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() != 3) return true;
    // three distinct 2-edges on three vertices = the forbidden C_3
    std::vector<std::vector<int>> es = h.edges;
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) != es.end();
}

bool hypergraph_connected(const Hypergraph& h) {
    if (h.vertices.size() <= 1) return true;
    std::vector<int> ids = h.vertices;
    std::sort(ids.begin(), ids.end());
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<int> uf(ids.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const auto& e : h.edges)
        for (std::size_t i = 1; i < e.size(); ++i) uf[find(index_of(e[i]))] = find(index_of(e[0]));
    int root = find(0);
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

}  // namespace specdiss
