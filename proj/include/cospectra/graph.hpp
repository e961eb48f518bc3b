#pragma once

#include "cospectra/exact_matrix.hpp"
#include "cospectra/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cospectra {

struct Edge {
    int from = 0;
    int to = 0;
    Rational weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex-labeled graph on vertices 0..n-1 with exact rational edge weights.
///
/// Undirected graphs store each edge once with from < to. Edges are kept
/// sorted, so two graphs with the same edge set compare equal. Self-loops
/// are rejected unless the graph is directed and constructed with
/// `allow_loops`.
class Graph {
public:
    Graph(int n, bool directed, std::vector<Edge> edges, bool allow_loops = false);

    int order() const { return n_; }
    bool directed() const { return directed_; }
    bool allows_loops() const { return allow_loops_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// True if some edge carries a weight other than 1.
    bool weighted() const;
    std::vector<int> degrees() const;
    /// Neighbor lists ignoring direction and weight.
    std::vector<std::vector<int>> neighbors() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    bool directed_;
    bool allow_loops_;
    std::vector<Edge> edges_;
};

/// Two distinct vertex indices. For undirected graphs `i < j` after
/// `normalized()`.
struct VertexPair {
    int i = 0;
    int j = 1;

    VertexPair normalized() const { return i < j ? *this : VertexPair{j, i}; }
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// Throws InvalidArgument unless both indices are in [0, n) and distinct.
void validate_pair(VertexPair p, std::size_t n);

/// Edge list: optional header `n=<int> directed=<bool> [loops=<bool>]`,
/// then one edge per line as `u v` or `u v w` with `w` a rational literal.
/// `#` starts a comment. Errors carry the offending line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 for undirected, unweighted, loop-free graphs with n <= 62.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

ExactMatrix adjacency_matrix(const Graph& g);

/// Connectivity of the underlying undirected graph.
bool is_connected(const Graph& g);

/// True iff some weight-preserving vertex permutation maps p.i to p.j.
/// Backtracking with refined-degree pruning; throws BudgetExceeded when the
/// graph has more than `max_order` vertices.
bool automorphism_maps(const Graph& g, VertexPair p, int max_order = 12);

} // namespace cospectra
