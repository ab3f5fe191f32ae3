#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specpart/errors.hpp"

namespace specpart {

/// Simple undirected graph with dense adjacency. Vertices are 0..n-1.
/// Instances are treated as immutable once built; every operation in the
/// library takes graphs by const reference and never mutates them, so
/// concurrent readers are safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    int degree(int u) const;

    // Duplicate edges collapse silently; self-loops and out-of-range
    // endpoints are rejected.
    void add_edge(int u, int v);

    // All edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int u) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Degree and connectivity summary, recomputable from the graph.
struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = false;
    bool is_connected = false;
    bool has_isolated_vertex = false;
};

/// Parameters (n, d, lambda, mu) of a strongly regular graph, when the
/// graph is one. Complete and edgeless graphs are excluded by convention.
struct SrgParams {
    int n = 0;
    int degree = 0;
    int lambda = 0;
    int mu = 0;
};

Graph from_edge_list(const std::vector<std::pair<int, int>>& edges, int n);

DegreeProfile degree_profile(const Graph& g);

Graph complement(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

std::optional<SrgParams> strongly_regular_params(const Graph& g);

// --- family generators -----------------------------------------------------

Graph gen_complete(int n);
Graph gen_complete_multipartite(const std::vector<int>& part_sizes);
Graph gen_cycle(int n);

// Line graph of K_v. Vertices are the 2-subsets of {0..v-1} enumerated in
// lexicographic order; two vertices are adjacent when the subsets intersect.
Graph gen_triangular(int v);

// v edge-disjoint triangles through the common vertex 0; triangle i uses
// vertices 2i+1 and 2i+2.
Graph gen_friendship(int v);

// --- edge-list text format ---------------------------------------------------
//
// First line "n m", then m lines "u v" with 0-indexed endpoints; lines
// starting with '#' are comments. The only graph ingestion format.

Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace specpart
