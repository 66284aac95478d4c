#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rescurv/linalg.hpp"

namespace rescurv {

/// Immutable simple undirected connected graph with a label <-> index map.
/// Vertex labels are arbitrary whitespace-free tokens remapped to dense
/// indices; all matrices use indices, all reports use labels.
class Graph {
public:
    /// Validates: indices in range, no self-loops, no duplicate edges,
    /// connected. Labels default to "0".."n-1".
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                            std::vector<std::string> labels = {});

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index for a label, or -1 when unknown.
    int index_of(const std::string& label) const;

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    /// One "u v" line per edge, lexicographic index order. Reparses to the
    /// same graph up to label order.
    std::string to_edge_list() const;
    /// {"n":..., "labels":[...], "edges":[[i,j],...]} with i<j, sorted.
    std::string to_json() const;

private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // i<j, lexicographically sorted
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
};

/// Parses edge-list text: two whitespace-separated vertex tokens per line,
/// '#' starts a comment, vertices indexed by first appearance.
/// Throws EmptyInputError, MalformedLineError, SelfLoopError,
/// DuplicateEdgeError, DisconnectedError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

struct DistanceTable {
    std::vector<std::vector<int>> dist; // hop counts, symmetric, zero diagonal
    int diameter = 0;
};

/// Exact hop distances by BFS from every vertex.
DistanceTable bfs_distances(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> coloring; // 0/1 per vertex, filled when bipartite
};

Bipartition is_bipartite(const Graph& g);

/// Kirchhoff Laplacian L = D - A.
SymMatrix laplacian(const Graph& g);

} // namespace rescurv
