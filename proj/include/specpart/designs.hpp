#pragma once

#include <utility>
#include <vector>

#include "specpart/graph.hpp"
#include "specpart/partition.hpp"

namespace specpart {

/// A point set 0..num_points-1 with uniform-size blocks. Valid instances are
/// Steiner 2-designs: every point pair lies in exactly one block. Blocks are
/// kept sorted internally and listed lexicographically.
struct Design {
    int num_points = 0;
    std::vector<std::vector<int>> blocks;
};

struct DesignParams {
    int v = 0;  // points
    int k = 0;  // block size
    int r = 0;  // blocks through a point, (v-1)/(k-1)
    int b = 0;  // number of blocks
};

// Checks pair coverage and block-size uniformity; returns the parameters.
// The single-block design with k = v is admitted as the degenerate case.
DesignParams validate_design(const Design& d);

// Affine plane of prime order q: points GF(q)^2 labelled q*x + y, lines
// y = a x + b plus the verticals; a 2-(q^2, q, 1) design.
Design affine_plane(int q);

// Projective plane of prime order q via homogeneous coordinates over GF(q);
// a 2-(q^2+q+1, q+1, 1) design.
Design projective_plane(int q);

// All pairs of a v-set as blocks; the 2-(v, 2, 1) design.
Design trivial_pair_design(int v);

// Steiner triple system on v points, v = 3 (mod 6), from the Bose
// construction over the cyclic group of order v/3.
Design bose_sts(int v);

// Graph on the blocks (lexicographic labels), adjacent when they share a
// point, together with the canonical decomposition into the cliques of
// blocks through each point. The degenerate single-block design yields a
// one-vertex graph and an empty partition.
std::pair<Graph, CliquePartition> block_graph(const Design& d);

// Inverse direction: a regular graph with a size-t clique decomposition in
// which every two cliques share exactly one vertex determines a Steiner
// 2-design whose points are the cliques and whose blocks collect, for each
// graph vertex, the cliques through it. Each violated precondition is
// reported distinctly.
Design decomposition_to_design(const Graph& g, const CliquePartition& p);

// block_graph followed by decomposition_to_design recovers a design with the
// same (v, k, r, b); a test oracle, never false on a valid design.
bool roundtrip_check(const Design& d);

}  // namespace specpart
