#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specdiss {

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency is a symmetric bit matrix stored row-major; graphs with
/// n <= 64 use one word per row, larger graphs just use more words.
/// Treat values as immutable once built: transformations below return
/// fresh graphs, which makes sharing across worker threads safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    int words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// -- constructors ------------------------------------------------------

Graph path(int n);
Graph cycle(int n);
Graph star(int t);  // t leaves, t+1 vertices

enum class SmithKind { W, E6, E7, E8, WTilde, E6Tilde, E7Tilde, E8Tilde };

// W(n): path on n-1 vertices with a pendant at its second vertex (n >= 4).
// WTilde(n): path on n-2 vertices with pendants at the second vertex from
// each end (n >= 6). The E/ETilde kinds have fixed sizes and ignore n.
Graph smith_graph(SmithKind kind, int n = 0);

// -- elementary transformations (pure; inputs unchanged) ---------------

Graph subdivide(const Graph& g, int u, int v);
Graph attach_two_paths(const Graph& g, int v, int k, int m);  // G^{k,m}
Graph delete_vertex(const Graph& g, int v);                   // renumbers densely
Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// -- queries -----------------------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_internal_path(const Graph& g, const std::vector<int>& seq);

// Some edge lying on an internal path, if the graph has one.
std::optional<std::pair<int, int>> find_internal_path_edge(const Graph& g);

// -- structure predicates (Smith's classification) ---------------------

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);
// Leg lengths of a spider (tree with exactly one vertex of degree >= 3),
// sorted ascending; nullopt when g is not a spider.
std::optional<std::vector<int>> spider_legs(const Graph& g);
bool is_w_graph(const Graph& g);
bool is_wtilde_graph(const Graph& g);
bool is_smith_sublimit(const Graph& g);   // spectral radius < 2 family
bool is_smith_boundary(const Graph& g);   // spectral radius = 2 family

// -- serialization -----------------------------------------------------

std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& text);
std::string to_dot(const Graph& g);

}  // namespace specdiss
