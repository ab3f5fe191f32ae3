#pragma once

#include <vector>

#include "specpart/graph.hpp"

namespace specpart {

// A clique is kept as a sorted list of distinct vertices; sortedness is the
// canonical form used everywhere (solver witnesses, designs, JSON).
using Clique = std::vector<int>;

// True iff all pairs are adjacent; singletons and the empty set qualify.
bool is_clique(const Graph& g, const std::vector<int>& vertices);

// All inclusion-maximal cliques, each sorted, list in lexicographic order.
// Pivoting branch-and-bound enumeration.
std::vector<Clique> maximal_cliques(const Graph& g);

int clique_number(const Graph& g);

// All cliques with 2 <= size <= t, in lexicographic order. Singletons are
// excluded: a clique covering no edge never helps a partition.
std::vector<Clique> cliques_up_to(const Graph& g, int t);

}  // namespace specpart
