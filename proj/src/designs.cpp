#include "specpart/designs.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace specpart {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

void canonicalize(Design& d) {
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
}

}  // namespace

DesignParams validate_design(const Design& d) {
    int v = d.num_points;
    if (v < 2) throw PreconditionError("design needs at least 2 points");
    if (d.blocks.empty()) throw PreconditionError("design has no blocks");
    std::size_t k = d.blocks.front().size();
    if (k < 2) throw PreconditionError("blocks must have size >= 2");
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(v) * v, 0);
    for (const auto& block : d.blocks) {
        if (block.size() != k) throw PreconditionError("blocks have non-uniform sizes");
        for (std::size_t i = 0; i < block.size(); ++i) {
            int p = block[i];
            if (p < 0 || p >= v) throw PreconditionError("block point out of range");
            if (i > 0 && block[i - 1] >= p)
                throw PreconditionError("block points not sorted and distinct");
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                std::uint8_t& mark = seen[static_cast<std::size_t>(block[i]) * v + block[j]];
                if (mark)
                    throw PreconditionError("point pair (" + std::to_string(block[i]) + ", " +
                                            std::to_string(block[j]) + ") in two blocks");
                mark = 1;
            }
    }
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (!seen[static_cast<std::size_t>(i) * v + j])
                throw PreconditionError("point pair (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ") in no block");
    DesignParams params;
    params.v = v;
    params.k = static_cast<int>(k);
    // Pair coverage forces r = (v-1)/(k-1) to be the same integer for all
    // points, so only the arithmetic remains.
    params.r = (v - 1) / (params.k - 1);
    params.b = static_cast<int>(d.blocks.size());
    return params;
}

Design affine_plane(int q) {
    if (!is_prime(q)) throw PreconditionError("affine plane order must be prime");
    Design d;
    d.num_points = q * q;
    auto point = [q](int x, int y) { return q * x + y; };
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            for (int x = 0; x < q; ++x) line.push_back(point(x, (a * x + b) % q));
            d.blocks.push_back(std::move(line));
        }
    }
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        for (int y = 0; y < q; ++y) line.push_back(point(c, y));
        d.blocks.push_back(std::move(line));
    }
    canonicalize(d);
    return d;
}

Design projective_plane(int q) {
    if (!is_prime(q)) throw PreconditionError("projective plane order must be prime");
    // Canonical representatives of the 1-dimensional subspaces of GF(q)^3:
    // (1, a, b), then (0, 1, c), then (0, 0, 1).
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int c = 0; c < q; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});

    Design d;
    d.num_points = static_cast<int>(reps.size());
    for (const auto& line : reps) {
        std::vector<int> block;
        for (std::size_t p = 0; p < reps.size(); ++p) {
            int dot = line[0] * reps[p][0] + line[1] * reps[p][1] + line[2] * reps[p][2];
            if (dot % q == 0) block.push_back(static_cast<int>(p));
        }
        d.blocks.push_back(std::move(block));
    }
    canonicalize(d);
    return d;
}

Design trivial_pair_design(int v) {
    if (v < 3) throw PreconditionError("pair design needs v >= 3");
    Design d;
    d.num_points = v;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) d.blocks.push_back({i, j});
    canonicalize(d);
    return d;
}

Design bose_sts(int v) {
    if (v < 9 || v % 6 != 3) throw PreconditionError("Bose construction needs v = 3 (mod 6), v >= 9");
    int n = v / 3;  // odd, so 2 is invertible mod n
    int half = (n + 1) / 2;
    auto point = [n](int x, int copy) { return copy * n + x; };
    Design d;
    d.num_points = v;
    for (int x = 0; x < n; ++x) d.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int mid = static_cast<int>((static_cast<long long>(x + y) * half) % n);
            for (int copy = 0; copy < 3; ++copy)
                d.blocks.push_back({point(x, copy), point(y, copy), point(mid, (copy + 1) % 3)});
        }
    canonicalize(d);
    return d;
}

std::pair<Graph, CliquePartition> block_graph(const Design& d) {
    DesignParams params = validate_design(d);
    int b = params.b;
    Graph g(b);
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            const auto& x = d.blocks[i];
            const auto& y = d.blocks[j];
            int common = 0;
            for (std::size_t a = 0, c = 0; a < x.size() && c < y.size();) {
                if (x[a] == y[c]) {
                    ++common;
                    ++a;
                    ++c;
                } else if (x[a] < y[c]) {
                    ++a;
                } else {
                    ++c;
                }
            }
            if (common >= 1) g.add_edge(i, j);
        }
    }
    std::vector<Clique> cliques;
    if (params.r >= 2) {
        for (int p = 0; p < params.v; ++p) {
            Clique q;
            for (int i = 0; i < b; ++i)
                if (std::binary_search(d.blocks[i].begin(), d.blocks[i].end(), p))
                    q.push_back(i);
            cliques.push_back(std::move(q));
        }
    }
    return {g, make_clique_partition(g, std::move(cliques))};
}

Design decomposition_to_design(const Graph& g, const CliquePartition& p) {
    DegreeProfile profile = degree_profile(g);
    if (!profile.is_regular) throw PreconditionError("graph is not regular");
    PartitionStats stats = validate(p);
    if (p.host != g) throw PreconditionError("partition host differs from the given graph");
    if (p.cliques.empty()) throw PreconditionError("decomposition has no cliques");
    int t = static_cast<int>(p.cliques.front().size());
    if (stats.max_clique_size != t || stats.total_size != t * stats.size)
        throw PreconditionError("not a uniform clique decomposition: clique sizes differ");
    int v = stats.size;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            const Clique& a = p.cliques[i];
            const Clique& b = p.cliques[j];
            int common = 0;
            for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
                if (a[x] == b[y]) {
                    ++common;
                    ++x;
                    ++y;
                } else if (a[x] < b[y]) {
                    ++x;
                } else {
                    ++y;
                }
            }
            if (common != 1)
                throw PreconditionError("cliques " + std::to_string(i) + " and " +
                                        std::to_string(j) + " share " + std::to_string(common) +
                                        " vertices, expected exactly 1");
        }
    Design d;
    d.num_points = v;
    for (int u = 0; u < g.order(); ++u) {
        std::vector<int> block;
        for (int i = 0; i < v; ++i)
            if (std::binary_search(p.cliques[i].begin(), p.cliques[i].end(), u))
                block.push_back(i);
        d.blocks.push_back(std::move(block));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    validate_design(d);
    return d;
}

bool roundtrip_check(const Design& d) {
    DesignParams before = validate_design(d);
    auto [g, partition] = block_graph(d);
    if (partition.cliques.empty()) return false;  // degenerate, nothing to recover
    Design back = decomposition_to_design(g, partition);
    DesignParams after = validate_design(back);
    return before.v == after.v && before.k == after.k && before.r == after.r &&
           before.b == after.b;
}

}  // namespace specpart
