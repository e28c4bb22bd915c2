#include "specdiss/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "specdiss/errors.hpp"

namespace specdiss {

namespace {

std::vector<int> tree_centers(const Graph& t) {
    const int n = t.size();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : t.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

std::string encode_rooted(const Graph& t, int root, int banned) {
    std::string out = "(";
    std::vector<std::string> parts;
    for (int w : t.neighbors(root))
        if (w != banned) parts.push_back(encode_rooted(t, w, root));
    std::sort(parts.begin(), parts.end());
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& t) {
    if (!is_tree(t)) throw invalid_parameter("tree_canonical_form: input is not a tree");
    auto centers = tree_centers(t);
    if (centers.size() == 1) return "T1:" + encode_rooted(t, centers[0], -1);
    std::string a = encode_rooted(t, centers[0], centers[1]);
    std::string b = encode_rooted(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "T2:" + a + "|" + b;
}

namespace {

std::vector<int> refined_colors(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // canonical renumbering each round: signatures sorted globally
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> fresh(n);
        for (const auto& [s, v] : sig) fresh[v] = rank[s];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> slot_color;  // required color per position
    std::vector<int> placed;      // vertex at each position
    std::vector<char> used;
    std::string best;
    std::string current;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.size()) {
        color = refined_colors(g);
        slot_color.assign(color.begin(), color.end());
        std::sort(slot_color.begin(), slot_color.end());
        used.assign(n, 0);
    }

    void run() {
        placed.clear();
        current.clear();
        dfs(true);
    }

    void dfs(bool tied) {
        int k = static_cast<int>(placed.size());
        if (k == n) {
            if (best.empty() || current < best) best = current;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != slot_color[k]) continue;
            std::string chunk(k, '0');
            for (int i = 0; i < k; ++i)
                if (g.has_edge(placed[i], v)) chunk[i] = '1';
            bool child_tied = tied;
            if (!best.empty() && tied) {
                int cmp = chunk.compare(best.substr(current.size(), chunk.size()));
                if (cmp > 0) continue;
                if (cmp < 0) child_tied = false;
            }
            used[v] = 1;
            placed.push_back(v);
            std::size_t before = current.size();
            current += chunk;
            dfs(child_tied);
            current.resize(before);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.size() >= 2 && is_tree(g)) return tree_canonical_form(g);
    if (g.size() > 12) throw resource_limit("canonical_form: general graphs supported up to n = 12");
    if (g.size() <= 1) return "G:" + std::to_string(g.size()) + ":";
    CanonSearch search(g);
    search.run();
    std::string colors;
    for (int c : search.slot_color) colors += std::to_string(c) + ".";
    return "G:" + std::to_string(g.size()) + ":" + colors + ":" + search.best;
}

}  // namespace specdiss
