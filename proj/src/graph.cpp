#include "specdiss/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "specdiss/errors.hpp"

namespace specdiss {

Graph::Graph(int n) {
    if (n < 0) throw invalid_parameter("vertex count must be nonnegative");
    n_ = n;
    words_ = n == 0 ? 1 : (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw invalid_parameter("vertex id " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_parameter("self loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

Graph path(int n) {
    if (n < 1) throw invalid_parameter("path requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw invalid_parameter("cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph star(int t) {
    if (t < 0) throw invalid_parameter("star requires t >= 0");
    Graph g(t + 1);
    for (int i = 1; i <= t; ++i) g.add_edge(0, i);
    return g;
}

namespace {

// center + legs given as lengths
Graph spider(const std::vector<int>& legs) {
    int n = 1;
    for (int l : legs) n += l;
    Graph g(n);
    int next = 1;
    for (int l : legs) {
        int prev = 0;
        for (int i = 0; i < l; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

}  // namespace

Graph smith_graph(SmithKind kind, int n) {
    switch (kind) {
        case SmithKind::W: {
            if (n < 4) throw invalid_parameter("W(n) requires n >= 4");
            Graph out(n);
            for (int i = 0; i + 1 < n - 1; ++i) out.add_edge(i, i + 1);
            out.add_edge(1, n - 1);
            return out;
        }
        case SmithKind::WTilde: {
            if (n < 6) throw invalid_parameter("WTilde(n) requires n >= 6");
            Graph out(n);
            for (int i = 0; i + 1 < n - 2; ++i) out.add_edge(i, i + 1);
            out.add_edge(1, n - 2);
            out.add_edge(n - 4, n - 1);
            return out;
        }
        case SmithKind::E6: return spider({1, 2, 2});
        case SmithKind::E7: return spider({1, 2, 3});
        case SmithKind::E8: return spider({1, 2, 4});
        case SmithKind::E6Tilde: return spider({2, 2, 2});
        case SmithKind::E7Tilde: return spider({1, 3, 3});
        case SmithKind::E8Tilde: return spider({1, 2, 5});
    }
    throw invalid_parameter("unknown smith graph kind");
}

Graph subdivide(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw invalid_edge("subdivide: uv is not an edge");
    Graph out(g.size() + 1);
    for (int a = 0; a < g.size(); ++a)
        for (int b : g.neighbors(a))
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
    out.add_edge(u, g.size());
    out.add_edge(v, g.size());
    return out;
}

Graph attach_two_paths(const Graph& g, int v, int k, int m) {
    if (v < 0 || v >= g.size()) throw invalid_parameter("attach_two_paths: vertex out of range");
    if (k < 0 || m < 0) throw invalid_parameter("attach_two_paths: path lengths must be nonnegative");
    Graph out(g.size() + k + m);
    for (int a = 0; a < g.size(); ++a)
        for (int b : g.neighbors(a))
            if (a < b) out.add_edge(a, b);
    int next = g.size();
    for (int len : {k, m}) {
        int prev = v;
        for (int i = 0; i < len; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
    }
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw invalid_parameter("delete_vertex: vertex out of range");
    std::vector<int> keep;
    keep.reserve(g.size() - 1);
    for (int i = 0; i < g.size(); ++i)
        if (i != v) keep.push_back(i);
    return induced_subgraph(g, keep);
}

Graph with_edge(const Graph& g, int u, int v) {
    Graph out = g;
    out.add_edge(u, v);
    return out;
}

Graph without_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw invalid_edge("without_edge: uv is not an edge");
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.size()) throw invalid_parameter("induced_subgraph: vertex out of range");
        if (pos[v] != -1) throw invalid_parameter("induced_subgraph: duplicate vertex");
        pos[v] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int b : g.neighbors(keep[i]))
            if (pos[b] > static_cast<int>(i)) out.add_edge(static_cast<int>(i), pos[b]);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    std::vector<int> stack{0};
    std::vector<char> seen(g.size(), 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size();
}

bool is_tree(const Graph& g) { return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_connected(g); }

bool is_internal_path(const Graph& g, const std::vector<int>& seq) {
    const std::size_t l = seq.size();
    if (l < 2) return false;
    // distinct except possibly first == last
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            if (seq[i] == seq[j] && !(i == 0 && j == l - 1)) return false;
    for (std::size_t i = 0; i + 1 < l; ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    if (g.degree(seq.front()) < 3 || g.degree(seq.back()) < 3) return false;
    for (std::size_t i = 1; i + 1 < l; ++i)
        if (g.degree(seq[i]) != 2) return false;
    return true;
}

std::optional<std::pair<int, int>> find_internal_path_edge(const Graph& g) {
    // (u,v) lies on an internal path iff following degree-2 chains away
    // from both endpoints reaches vertices of degree >= 3.
    auto chain_end = [&](int from, int toward) -> int {
        int prev = from, cur = toward;
        int steps = 0;
        while (g.degree(cur) == 2 && steps++ <= g.size()) {
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
        }
        return g.degree(cur) >= 3 ? cur : -1;
    };
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (chain_end(v, u) >= 0 && chain_end(u, v) >= 0) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_cycle_graph(const Graph& g) {
    if (g.size() < 3 || g.edge_count() != g.size() || !is_connected(g)) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::optional<std::vector<int>> spider_legs(const Graph& g) {
    if (!is_tree(g)) return std::nullopt;
    int center = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) >= 3) {
            if (center != -1) return std::nullopt;
            center = v;
        }
    }
    if (center == -1) return std::nullopt;
    std::vector<int> legs;
    for (int start : g.neighbors(center)) {
        int len = 1, prev = center, cur = start;
        while (g.degree(cur) == 2) {
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            ++len;
        }
        if (g.degree(cur) != 1) return std::nullopt;  // not reachable for trees with one branch vertex
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    return legs;
}

bool is_w_graph(const Graph& g) {
    auto legs = spider_legs(g);
    if (!legs || legs->size() != 3) return false;
    return (*legs)[0] == 1 && (*legs)[1] == 1;
}

bool is_wtilde_graph(const Graph& g) {
    if (!is_tree(g) || g.size() < 6) return false;
    std::vector<int> junctions;
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) > 3) return false;
        if (g.degree(v) == 3) junctions.push_back(v);
    }
    if (junctions.size() != 2) return false;
    for (int j : junctions) {
        int leaf_neighbors = 0;
        for (int w : g.neighbors(j))
            if (g.degree(w) == 1) ++leaf_neighbors;
        if (leaf_neighbors != 2) return false;
    }
    return true;
}

namespace {

bool spider_matches(const Graph& g, std::initializer_list<int> want) {
    auto legs = spider_legs(g);
    return legs && std::equal(legs->begin(), legs->end(), want.begin(), want.end()) && legs->size() == want.size();
}

}  // namespace

bool is_smith_sublimit(const Graph& g) {
    return is_path_graph(g) || is_w_graph(g) || spider_matches(g, {1, 2, 2}) || spider_matches(g, {1, 2, 3}) ||
           spider_matches(g, {1, 2, 4});
}

bool is_smith_boundary(const Graph& g) {
    return is_cycle_graph(g) || is_wtilde_graph(g) || spider_matches(g, {2, 2, 2}) || spider_matches(g, {1, 3, 3}) ||
           spider_matches(g, {1, 2, 5});
}

// -- graph6 --------------------------------------------------------------
//
// Standard format: N(n) followed by the upper triangle in column-major
// order, packed 6 bits per byte, each byte offset by 63.

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw invalid_parameter("graph6: vertex count too large");
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    std::string out;
    append_size(out, g.size());
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.size(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (text.size() < pos + k) throw parse_error("graph6: truncated input", text.size());
    };
    need(1);
    long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        ++pos;
        need(3);
        n = 0;
        for (int k = 0; k < 3; ++k) {
            int c = static_cast<unsigned char>(text[pos]) - 63;
            if (c < 0 || c > 63) throw parse_error("graph6: bad size byte", pos);
            n = (n << 6) | c;
            ++pos;
        }
    } else {
        n = static_cast<unsigned char>(text[pos]) - 63;
        if (n < 0 || n > 62) throw parse_error("graph6: bad size byte", pos);
        ++pos;
    }
    Graph g(static_cast<int>(n));
    int acc = 0, have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                need(1);
                acc = static_cast<unsigned char>(text[pos]) - 63;
                if (acc < 0 || acc > 63) throw parse_error("graph6: bad data byte", pos);
                ++pos;
                have = 6;
            }
            if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
            --have;
        }
    if (pos != text.size()) throw parse_error("graph6: trailing bytes", pos);
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.size(); ++v) os << "  " << v << ";\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace specdiss
