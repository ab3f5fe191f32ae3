#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specpart/cliques.hpp"
#include "specpart/graph.hpp"
#include "specpart/spectral.hpp"

namespace specpart {

/// A set of cliques partitioning the edge set of the host graph: every edge
/// lies in exactly one clique, equivalently two distinct cliques share at
/// most one vertex. Canonical form: each clique sorted, the list sorted
/// lexicographically.
struct CliquePartition {
    Graph host;
    std::vector<Clique> cliques;

    bool operator==(const CliquePartition&) const = default;
};

// Sorts members and the list into canonical form.
CliquePartition make_clique_partition(Graph host, std::vector<Clique> cliques);

struct PartitionStats {
    int size = 0;                 // number of cliques
    int total_size = 0;           // sum of clique sizes
    std::vector<int> q_degrees;   // cliques through each vertex
    int max_clique_size = 0;
};

// Checks the partition and returns its statistics. Rejects edges covered
// zero or multiple times, non-adjacent pairs inside a clique, cliques of
// size < 2, and non-canonical clique lists.
PartitionStats validate(const CliquePartition& p);

// Graph on the cliques; i ~ j iff the cliques intersect.
Graph clique_graph(const CliquePartition& p);

/// 0/1 vertex-clique incidence structure B: rows are host vertices, columns
/// are cliques, B[i][j] = 1 iff vertex i lies in clique j.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cell;

    bool at(int i, int j) const { return cell[static_cast<std::size_t>(i) * cols + j] != 0; }
};

IncidenceMatrix incidence_matrix(const CliquePartition& p);

// B * B^T and B^T * B as dense symmetric matrices.
SymMatrix vertex_gram(const IncidenceMatrix& b);
SymMatrix clique_gram(const IncidenceMatrix& b);

// Checks, in exact integer arithmetic, that B B^T equals A(host) plus the
// diagonal of per-vertex clique counts and that B^T B equals the adjacency
// of the clique graph plus the diagonal of clique sizes. A test oracle:
// must hold for every valid partition.
bool verify_gram_identities(const CliquePartition& p);

// --- exact solvers -----------------------------------------------------------

// Graphs with more edges than this are refused unless SolveOptions::force.
inline constexpr int kSolveEdgeGuard = 60;

struct SolveOptions {
    int workers = 1;              // worker threads for independent branches
    bool exclude_trivial = false; // reject the one-clique partition of a complete graph
    bool force = false;           // bypass the edge-count guard
    double timeout_seconds = 0.0; // 0 = unlimited
    long long max_nodes = 0;      // 0 = unlimited
};

struct SolveResult {
    long long optimum = 0;
    std::vector<Clique> witness;  // partition cliques, or the packed cliques for k_t
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Minimum number of cliques of size <= t partitioning the edges. Exhaustive
// branch-and-bound: always extend the lowest-index uncovered edge, try
// candidate cliques largest-first then lexicographic, prune with
// count + ceil(remaining / C(t,2)). Optimum and witness are independent of
// the worker count.
SolveResult solve_cp_t(const Graph& g, int t, const SolveOptions& opts = {});

// Minimum over all clique sizes; equals solve_cp_t at t = clique number.
SolveResult solve_cp(const Graph& g, const SolveOptions& opts = {});

// Minimum total size (sum of clique sizes) with cliques of size <= t; same
// search tree with cost-per-edge pruning.
SolveResult solve_pi_t(const Graph& g, int t, const SolveOptions& opts = {});

SolveResult solve_pi(const Graph& g, const SolveOptions& opts = {});

// Maximum number of pairwise edge-disjoint t-cliques (t >= 3).
SolveResult solve_kt(const Graph& g, int t, const SolveOptions& opts = {});

// A partition into cliques of size exactly t, if one exists. Backtracking
// exact cover with minimum-remaining-candidates edge selection, after the
// divisibility pre-filters C(t,2) | m and (t-1) | deg(u). Not subject to
// the edge guard; honors max_nodes (SearchLimitError on exhaustion).
std::optional<CliquePartition> find_kt_decomposition(const Graph& g, int t,
                                                     const SolveOptions& opts = {});

}  // namespace specpart
