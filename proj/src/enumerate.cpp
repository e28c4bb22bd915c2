#include "specdiss/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "specdiss/errors.hpp"

namespace specdiss {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

GraphStream enumerate_labeled_connected(int n) {
    if (n < 1 || n > 7) throw resource_limit("enumerate_labeled_connected: supported for 1 <= n <= 7");
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    auto mask = std::make_shared<std::uint64_t>(0);
    return [n, limit, mask]() -> std::optional<Graph> {
        while (*mask < limit) {
            Graph g = graph_from_edge_mask(n, (*mask)++);
            if (is_connected(g)) return g;
        }
        return std::nullopt;
    };
}

std::uint64_t count_labeled_connected(int n) {
    // inclusion-exclusion over the component containing vertex 1
    if (n < 1) throw invalid_parameter("count_labeled_connected: n >= 1");
    std::vector<std::uint64_t> c(n + 1, 0);
    auto pow2 = [](int e) { return e >= 64 ? 0 : std::uint64_t{1} << e; };
    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    for (int k = 1; k <= n; ++k) {
        std::uint64_t total = pow2(k * (k - 1) / 2);
        for (int j = 1; j < k; ++j) total -= binom[k - 1][j - 1] * c[j] * pow2((k - j) * (k - j - 1) / 2);
        c[k] = total;
    }
    return c[n];
}

// -- rooted trees ----------------------------------------------------------
//
// Beyer-Hedetniemi successor on level sequences, root at level 0.

namespace {

std::vector<std::vector<int>> generate_rooted_levels(int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> l(size);
    for (int i = 0; i < size; ++i) l[i] = i;
    while (true) {
        out.push_back(l);
        int p = -1;
        for (int i = size - 1; i >= 0; --i)
            if (l[i] >= 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (l[i] == l[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < size; ++i) l[i] = l[i - (p - q)];
    }
    return out;
}

}  // namespace

const std::vector<std::vector<int>>& rooted_tree_levels(int size) {
    if (size < 1 || size > 16) throw resource_limit("rooted_tree_levels: supported for 1 <= size <= 16");
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(size);
    if (it == cache.end()) it = cache.emplace(size, generate_rooted_levels(size)).first;
    return it->second;
}

Graph tree_from_levels(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    if (n == 0 || levels[0] != 0) throw invalid_parameter("tree_from_levels: sequence must start at level 0");
    Graph g(n);
    std::vector<int> last_at(n, -1);
    last_at[0] = 0;
    for (int i = 1; i < n; ++i) {
        int lv = levels[i];
        if (lv < 1 || lv >= n || last_at[lv - 1] < 0) throw invalid_parameter("tree_from_levels: invalid level sequence");
        g.add_edge(last_at[lv - 1], i);
        last_at[lv] = i;
    }
    return g;
}

// -- free trees ------------------------------------------------------------

namespace {

struct FreeTreeGen {
    int n = 0;
    int smax = 0;
    // flattened item list: sizes descending, index within size ascending
    std::vector<std::pair<int, int>> items;  // (size, index into rooted_tree_levels(size))
    std::vector<int> choice;                 // item positions, non-decreasing
    std::vector<int> frame_pos;              // DFS cursor per depth
    int remaining = 0;
    bool uni_done = false;
    // bicentroid cursor (n even)
    long bi_i = 0, bi_j = 0;
    bool bi_active = false;

    explicit FreeTreeGen(int order) : n(order) {
        smax = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
        for (int s = smax; s >= 1; --s)
            for (int idx = 0; idx < static_cast<int>(rooted_tree_levels(s).size()); ++idx) items.emplace_back(s, idx);
        remaining = n - 1;
        frame_pos.push_back(0);
        if (n % 2 == 0) bi_active = true;
    }

    Graph assemble() const {
        std::vector<int> levels{0};
        for (int pos : choice) {
            const auto& sub = rooted_tree_levels(items[pos].first)[items[pos].second];
            for (int lv : sub) levels.push_back(lv + 1);
        }
        return tree_from_levels(levels);
    }

    Graph assemble_bi(long i, long j) const {
        const auto& half = rooted_tree_levels(n / 2);
        const auto& a = half[i];
        const auto& b = half[j];
        Graph g(n);
        auto add_subtree = [&](const std::vector<int>& levels, int offset) {
            std::vector<int> last_at(levels.size(), -1);
            last_at[0] = offset;
            for (std::size_t v = 1; v < levels.size(); ++v) {
                g.add_edge(last_at[levels[v] - 1], offset + static_cast<int>(v));
                last_at[levels[v]] = offset + static_cast<int>(v);
            }
        };
        add_subtree(a, 0);
        add_subtree(b, n / 2);
        g.add_edge(0, n / 2);
        return g;
    }

    std::optional<Graph> next() {
        if (n == 1) {
            if (uni_done) return std::nullopt;
            uni_done = true;
            return Graph(1);
        }
        while (!uni_done) {
            // DFS over non-decreasing item positions summing to n-1
            int depth = static_cast<int>(choice.size());
            bool descended = false;
            while (frame_pos[depth] < static_cast<int>(items.size())) {
                int pos = frame_pos[depth];
                int s = items[pos].first;
                if (s <= remaining) {
                    choice.push_back(pos);
                    remaining -= s;
                    frame_pos.push_back(pos);  // children at or after this item
                    descended = true;
                    break;
                }
                ++frame_pos[depth];
            }
            if (descended) {
                if (remaining == 0) {
                    Graph g = assemble();
                    backtrack();
                    return g;
                }
                continue;
            }
            // exhausted this frame
            if (choice.empty()) {
                uni_done = true;
                break;
            }
            backtrack();
        }
        if (bi_active) {
            const long half_count = static_cast<long>(rooted_tree_levels(n / 2).size());
            if (bi_i < half_count) {
                Graph g = assemble_bi(bi_i, bi_j);
                if (++bi_j >= half_count) {
                    ++bi_i;
                    bi_j = bi_i;
                }
                return g;
            }
        }
        return std::nullopt;
    }

    void backtrack() {
        frame_pos.pop_back();
        remaining += items[choice.back()].first;
        choice.pop_back();
        ++frame_pos[choice.size()];
    }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// multisets with repetition from r(s) types per size, over partitions
std::uint64_t count_multisets(int total, int max_part, int largest_allowed,
                              const std::vector<std::uint64_t>& types) {
    if (total == 0) return 1;
    std::uint64_t acc = 0;
    for (int s = std::min(total, std::min(max_part, largest_allowed)); s >= 1; --s) {
        for (int k = 1; k * s <= total; ++k) {
            std::uint64_t ways = binomial(types[s] + k - 1, k);
            acc += ways * count_multisets(total - k * s, max_part, s - 1, types);
        }
    }
    return acc;
}

}  // namespace

GraphStream enumerate_free_trees(int n) {
    if (n < 1 || n > 24) throw resource_limit("enumerate_free_trees: supported for 1 <= n <= 24");
    auto gen = std::make_shared<FreeTreeGen>(n);
    return [gen]() { return gen->next(); };
}

std::uint64_t count_free_trees(int n) {
    if (n < 1 || n > 24) throw resource_limit("count_free_trees: supported for 1 <= n <= 24");
    if (n == 1) return 1;
    int smax = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    std::vector<std::uint64_t> types(std::max(smax, n / 2) + 1, 0);
    for (int s = 1; s < static_cast<int>(types.size()); ++s) types[s] = rooted_tree_levels(s).size();
    std::uint64_t total = count_multisets(n - 1, smax, smax, types);
    if (n % 2 == 0) {
        std::uint64_t r = rooted_tree_levels(n / 2).size();
        total += r * (r + 1) / 2;
    }
    return total;
}

}  // namespace specdiss
