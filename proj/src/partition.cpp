#include "specpart/partition.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <thread>

namespace specpart {

CliquePartition make_clique_partition(Graph host, std::vector<Clique> cliques) {
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    return CliquePartition{std::move(host), std::move(cliques)};
}

PartitionStats validate(const CliquePartition& p) {
    const Graph& g = p.host;
    int n = g.order();
    PartitionStats stats;
    stats.q_degrees.assign(n, 0);

    std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * n, 0);
    const Clique* prev = nullptr;
    for (const auto& c : p.cliques) {
        if (c.size() < 2) throw PreconditionError("clique of size < 2 in partition");
        if (prev && !(*prev <= c))
            throw PreconditionError("cliques not in canonical lexicographic order");
        prev = &c;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int u = c[i];
            if (u < 0 || u >= n) throw PreconditionError("clique vertex out of range");
            if (i > 0 && c[i - 1] >= u)
                throw PreconditionError("clique vertices not sorted and distinct");
            stats.q_degrees[u] += 1;
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                int u = c[i], v = c[j];
                if (!g.adjacent(u, v))
                    throw PreconditionError("clique contains non-adjacent pair (" +
                                            std::to_string(u) + ", " + std::to_string(v) + ")");
                std::uint8_t& mark = covered[static_cast<std::size_t>(u) * n + v];
                if (mark)
                    throw PreconditionError("edge (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ") covered by two cliques");
                mark = 1;
            }
        }
        stats.size += 1;
        stats.total_size += static_cast<int>(c.size());
        stats.max_clique_size = std::max(stats.max_clique_size, static_cast<int>(c.size()));
    }
    for (const auto& [u, v] : g.edges()) {
        if (!covered[static_cast<std::size_t>(u) * n + v])
            throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") not covered by any clique");
    }
    return stats;
}

Graph clique_graph(const CliquePartition& p) {
    validate(p);
    int v = static_cast<int>(p.cliques.size());
    Graph omega(v);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            const Clique& a = p.cliques[i];
            const Clique& b = p.cliques[j];
            bool meet = false;
            for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
                if (a[x] == b[y]) {
                    meet = true;
                    break;
                }
                if (a[x] < b[y])
                    ++x;
                else
                    ++y;
            }
            if (meet) omega.add_edge(i, j);
        }
    }
    return omega;
}

IncidenceMatrix incidence_matrix(const CliquePartition& p) {
    validate(p);
    IncidenceMatrix b;
    b.rows = p.host.order();
    b.cols = static_cast<int>(p.cliques.size());
    b.cell.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
    for (int j = 0; j < b.cols; ++j)
        for (int u : p.cliques[j]) b.cell[static_cast<std::size_t>(u) * b.cols + j] = 1;
    return b;
}

SymMatrix vertex_gram(const IncidenceMatrix& b) {
    SymMatrix m(b.rows);
    for (int i = 0; i < b.rows; ++i) {
        for (int k = i; k < b.rows; ++k) {
            int sum = 0;
            for (int j = 0; j < b.cols; ++j) sum += b.at(i, j) && b.at(k, j) ? 1 : 0;
            m.set(i, k, sum);
        }
    }
    return m;
}

SymMatrix clique_gram(const IncidenceMatrix& b) {
    SymMatrix m(b.cols);
    for (int i = 0; i < b.cols; ++i) {
        for (int k = i; k < b.cols; ++k) {
            int sum = 0;
            for (int u = 0; u < b.rows; ++u) sum += b.at(u, i) && b.at(u, k) ? 1 : 0;
            m.set(i, k, sum);
        }
    }
    return m;
}

bool verify_gram_identities(const CliquePartition& p) {
    PartitionStats stats = validate(p);
    const Graph& g = p.host;
    int n = g.order();
    int v = static_cast<int>(p.cliques.size());
    IncidenceMatrix b = incidence_matrix(p);

    // B B^T against A(G) + diag(q_degrees), in exact integers.
    for (int i = 0; i < n; ++i) {
        for (int k = i; k < n; ++k) {
            int prod = 0;
            for (int j = 0; j < v; ++j) prod += b.at(i, j) && b.at(k, j) ? 1 : 0;
            int expected = i == k ? stats.q_degrees[i] : (g.adjacent(i, k) ? 1 : 0);
            if (prod != expected) return false;
        }
    }

    // B^T B against A(clique graph) + diag(clique sizes).
    Graph omega = clique_graph(p);
    for (int i = 0; i < v; ++i) {
        for (int k = i; k < v; ++k) {
            int prod = 0;
            for (int u = 0; u < n; ++u) prod += b.at(u, i) && b.at(u, k) ? 1 : 0;
            int expected = i == k ? static_cast<int>(p.cliques[i].size())
                                  : (omega.adjacent(i, k) ? 1 : 0);
            if (prod != expected) return false;
        }
    }
    return true;
}

// --- solver machinery --------------------------------------------------------

namespace {

constexpr long long kUnset = LLONG_MAX / 4;

struct SharedBudget {
    std::atomic<long long> nodes{0};
    long long max_nodes = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> aborted{false};
    std::atomic<bool> timed_out{false};
    std::atomic<bool> node_limited{false};

    void configure(const SolveOptions& opts) {
        max_nodes = opts.max_nodes;
        if (opts.timeout_seconds > 0) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(opts.timeout_seconds));
        }
    }

    // Flushes a worker's local node count and checks the budgets.
    void flush(long long delta) {
        long long total = nodes.fetch_add(delta, std::memory_order_relaxed) + delta;
        if (max_nodes > 0 && total > max_nodes) {
            node_limited.store(true, std::memory_order_relaxed);
            aborted.store(true, std::memory_order_relaxed);
        }
        if (has_deadline && std::chrono::steady_clock::now() > deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            aborted.store(true, std::memory_order_relaxed);
        }
    }

    bool abort_requested() const { return aborted.load(std::memory_order_relaxed); }

    void raise_if_exhausted() const {
        if (timed_out.load()) throw TimeoutError("solver timed out");
        if (node_limited.load()) throw SearchLimitError("solver node budget exhausted");
    }
};

void atomic_min(std::atomic<long long>& a, long long v) {
    long long cur = a.load(std::memory_order_relaxed);
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

void atomic_max(std::atomic<long long>& a, long long v) {
    long long cur = a.load(std::memory_order_relaxed);
    while (v > cur && !a.compare_exchange_weak(cur, v)) {
    }
}

struct Component {
    Graph local;
    std::vector<int> to_global;
};

// Components holding at least one edge, with monotone vertex relabeling so
// lexicographic orders agree between local and global labels.
std::vector<Component> edge_components(const Graph& g) {
    std::vector<Component> out;
    for (const auto& verts : connected_components(g)) {
        if (verts.size() < 2) continue;
        Component comp;
        comp.to_global = verts;
        comp.local = Graph(static_cast<int>(verts.size()));
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (g.adjacent(verts[a], verts[b]))
                    comp.local.add_edge(static_cast<int>(a), static_cast<int>(b));
        if (comp.local.edge_count() > 0) out.push_back(std::move(comp));
    }
    return out;
}

struct EdgeInstance {
    int t = 0;
    int m = 0;
    long long pairs_t = 1;  // C(t,2)
    std::vector<Clique> cliques;
    std::vector<std::vector<int>> clique_edges;  // edge ids per clique
    std::vector<std::vector<int>> cands;         // candidate clique ids per edge
};

EdgeInstance build_instance(const Graph& g, int t, bool exact_size) {
    EdgeInstance inst;
    inst.t = t;
    inst.pairs_t = static_cast<long long>(t) * (t - 1) / 2;
    auto edge_list = g.edges();
    inst.m = static_cast<int>(edge_list.size());
    int n = g.order();
    std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
    for (int e = 0; e < inst.m; ++e) {
        auto [u, v] = edge_list[e];
        edge_id[static_cast<std::size_t>(u) * n + v] = e;
        edge_id[static_cast<std::size_t>(v) * n + u] = e;
    }
    for (auto& c : cliques_up_to(g, t)) {
        if (exact_size && static_cast<int>(c.size()) != t) continue;
        inst.cliques.push_back(std::move(c));
    }
    inst.clique_edges.resize(inst.cliques.size());
    inst.cands.assign(inst.m, {});
    for (std::size_t ci = 0; ci < inst.cliques.size(); ++ci) {
        const Clique& c = inst.cliques[ci];
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                int e = edge_id[static_cast<std::size_t>(c[i]) * n + c[j]];
                inst.clique_edges[ci].push_back(e);
                inst.cands[e].push_back(static_cast<int>(ci));
            }
    }
    if (!exact_size) {
        // Large cliques first reaches good incumbents quickly; the list is
        // already lexicographic within one size class.
        for (auto& lst : inst.cands)
            std::stable_sort(lst.begin(), lst.end(), [&](int a, int b) {
                return inst.cliques[a].size() > inst.cliques[b].size();
            });
    }
    return inst;
}

// Branch-and-bound minimization of partition size or total size.
struct MinSearch {
    const EdgeInstance& inst;
    bool minimize_total;
    bool exclude_trivial;
    SharedBudget& budget;
    std::atomic<long long>& best;

    std::vector<std::uint8_t> covered;
    int covered_cnt = 0;
    long long cost = 0;
    int used = 0;
    long long local_nodes = 0;

    explicit MinSearch(const EdgeInstance& i, bool mt, bool ex, SharedBudget& bu,
                       std::atomic<long long>& be)
        : inst(i), minimize_total(mt), exclude_trivial(ex), budget(bu), best(be) {
        covered.assign(inst.m, 0);
    }

    long long completion_lb(long long remaining) const {
        if (remaining <= 0) return 0;
        if (minimize_total) return (2 * remaining + inst.t - 2) / (inst.t - 1);
        return (remaining + inst.pairs_t - 1) / inst.pairs_t;
    }

    bool clique_free(int ci) const {
        for (int e : inst.clique_edges[ci])
            if (covered[e]) return false;
        return true;
    }

    void apply(int ci) {
        for (int e : inst.clique_edges[ci]) covered[e] = 1;
        covered_cnt += static_cast<int>(inst.clique_edges[ci].size());
        cost += minimize_total ? static_cast<long long>(inst.cliques[ci].size()) : 1;
        ++used;
    }

    void undo(int ci) {
        for (int e : inst.clique_edges[ci]) covered[e] = 0;
        covered_cnt -= static_cast<int>(inst.clique_edges[ci].size());
        cost -= minimize_total ? static_cast<long long>(inst.cliques[ci].size()) : 1;
        --used;
    }

    bool tick() {
        if ((++local_nodes & 0x3F) == 0) {
            budget.flush(64);
            local_nodes -= 64;  // keep only the unflushed remainder
        }
        return budget.abort_requested();
    }

    void finish() { budget.flush(local_nodes); local_nodes = 0; }

    void dfs(int from) {
        if (tick()) return;
        if (covered_cnt == inst.m) {
            if (!(exclude_trivial && used == 1)) atomic_min(best, cost);
            return;
        }
        int e = from;
        while (covered[e]) ++e;
        for (int ci : inst.cands[e]) {
            if (!clique_free(ci)) continue;
            long long ncost =
                cost + (minimize_total ? static_cast<long long>(inst.cliques[ci].size()) : 1);
            long long rest = inst.m - covered_cnt - static_cast<long long>(inst.clique_edges[ci].size());
            if (ncost + completion_lb(rest) >= best.load(std::memory_order_relaxed)) continue;
            apply(ci);
            dfs(e);
            undo(ci);
        }
    }
};

// Deterministic single-threaded pass that extracts the first optimal witness
// in canonical branch order; independent of how the optimum was found.
struct MinReplay {
    const EdgeInstance& inst;
    bool minimize_total;
    bool exclude_trivial;
    long long target;

    std::vector<std::uint8_t> covered;
    int covered_cnt = 0;
    long long cost = 0;
    int used = 0;
    std::vector<int> chosen;
    bool done = false;
    long long nodes = 0;

    MinReplay(const EdgeInstance& i, bool mt, bool ex, long long tgt)
        : inst(i), minimize_total(mt), exclude_trivial(ex), target(tgt) {
        covered.assign(inst.m, 0);
    }

    long long completion_lb(long long remaining) const {
        if (remaining <= 0) return 0;
        if (minimize_total) return (2 * remaining + inst.t - 2) / (inst.t - 1);
        return (remaining + inst.pairs_t - 1) / inst.pairs_t;
    }

    void dfs(int from) {
        if (done) return;
        ++nodes;
        if (covered_cnt == inst.m) {
            if (!(exclude_trivial && used == 1)) {
                if (cost != target) throw Error("replay reached a non-optimal cover");
                done = true;
            }
            return;
        }
        int e = from;
        while (covered[e]) ++e;
        for (int ci : inst.cands[e]) {
            bool usable = true;
            for (int eid : inst.clique_edges[ci])
                if (covered[eid]) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            long long csize = static_cast<long long>(inst.cliques[ci].size());
            long long ncost = cost + (minimize_total ? csize : 1);
            long long rest = inst.m - covered_cnt - static_cast<long long>(inst.clique_edges[ci].size());
            if (ncost + completion_lb(rest) > target) continue;
            for (int eid : inst.clique_edges[ci]) covered[eid] = 1;
            covered_cnt += static_cast<int>(inst.clique_edges[ci].size());
            cost = ncost;
            ++used;
            chosen.push_back(ci);
            dfs(e);
            if (done) return;
            chosen.pop_back();
            --used;
            cost -= minimize_total ? csize : 1;
            covered_cnt -= static_cast<int>(inst.clique_edges[ci].size());
            for (int eid : inst.clique_edges[ci]) covered[eid] = 0;
        }
    }
};

// Runs phase-1 branch exploration, parallel over the candidates of the first
// edge when workers allow. Only the incumbent value is shared; the witness
// comes from the deterministic replay afterwards.
long long solve_min_component(const EdgeInstance& inst, bool minimize_total, bool exclude_trivial,
                              const SolveOptions& opts, SharedBudget& budget,
                              std::vector<int>& witness_ids) {
    std::atomic<long long> best{kUnset};
    const std::vector<int>& roots = inst.cands[0];
    int workers = std::max(1, opts.workers);
    int usable = std::min<int>(workers, static_cast<int>(roots.size()));

    if (usable <= 1) {
        MinSearch search(inst, minimize_total, exclude_trivial, budget, best);
        search.dfs(0);
        search.finish();
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            MinSearch search(inst, minimize_total, exclude_trivial, budget, best);
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= roots.size() || budget.abort_requested()) break;
                int ci = roots[idx];
                search.apply(ci);
                search.dfs(0);
                search.undo(ci);
            }
            search.finish();
        };
        std::vector<std::thread> pool;
        pool.reserve(usable);
        for (int w = 0; w < usable; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    budget.raise_if_exhausted();

    long long optimum = best.load();
    if (optimum >= kUnset)
        throw PreconditionError(
            "no admissible clique partition (the only partition is the excluded trivial one)");

    MinReplay replay(inst, minimize_total, exclude_trivial, optimum);
    replay.dfs(0);
    budget.flush(replay.nodes);
    if (!replay.done) throw Error("witness replay failed to reach the optimum");
    witness_ids = replay.chosen;
    return optimum;
}

// Branch-and-bound maximization of an edge-disjoint t-clique packing.
struct MaxSearch {
    const EdgeInstance& inst;
    SharedBudget& budget;
    std::atomic<long long>& best;

    std::vector<std::uint8_t> covered;
    int covered_cnt = 0;
    long long count = 0;
    long long local_nodes = 0;

    MaxSearch(const EdgeInstance& i, SharedBudget& bu, std::atomic<long long>& be)
        : inst(i), budget(bu), best(be) {
        covered.assign(inst.m, 0);
    }

    bool clique_free(int ci) const {
        for (int e : inst.clique_edges[ci])
            if (covered[e]) return false;
        return true;
    }

    void apply(int ci) {
        for (int e : inst.clique_edges[ci]) covered[e] = 1;
        covered_cnt += static_cast<int>(inst.clique_edges[ci].size());
        ++count;
    }

    void undo(int ci) {
        for (int e : inst.clique_edges[ci]) covered[e] = 0;
        covered_cnt -= static_cast<int>(inst.clique_edges[ci].size());
        --count;
    }

    bool tick() {
        if ((++local_nodes & 0x3F) == 0) {
            budget.flush(64);
            local_nodes -= 64;
        }
        return budget.abort_requested();
    }

    void finish() { budget.flush(local_nodes); local_nodes = 0; }

    void dfs(int from) {
        if (tick()) return;
        atomic_max(best, count);
        long long cap = count + (inst.m - covered_cnt) / inst.pairs_t;
        if (cap <= best.load(std::memory_order_relaxed)) return;
        for (std::size_t j = from; j < inst.cliques.size(); ++j) {
            if (!clique_free(static_cast<int>(j))) continue;
            apply(static_cast<int>(j));
            dfs(static_cast<int>(j) + 1);
            undo(static_cast<int>(j));
        }
    }
};

struct MaxReplay {
    const EdgeInstance& inst;
    long long target;

    std::vector<std::uint8_t> covered;
    int covered_cnt = 0;
    long long count = 0;
    std::vector<int> chosen;
    long long nodes = 0;

    MaxReplay(const EdgeInstance& i, long long tgt) : inst(i), target(tgt) {
        covered.assign(inst.m, 0);
    }

    bool dfs(int from) {
        ++nodes;
        if (count == target) return true;
        if (count + (inst.m - covered_cnt) / inst.pairs_t < target) return false;
        for (std::size_t j = from; j < inst.cliques.size(); ++j) {
            bool free = true;
            for (int e : inst.clique_edges[static_cast<int>(j)])
                if (covered[e]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int e : inst.clique_edges[static_cast<int>(j)]) covered[e] = 1;
            covered_cnt += static_cast<int>(inst.clique_edges[j].size());
            ++count;
            chosen.push_back(static_cast<int>(j));
            if (dfs(static_cast<int>(j) + 1)) return true;
            chosen.pop_back();
            --count;
            covered_cnt -= static_cast<int>(inst.clique_edges[j].size());
            for (int e : inst.clique_edges[static_cast<int>(j)]) covered[e] = 0;
        }
        return false;
    }
};

long long solve_max_component(const EdgeInstance& inst, const SolveOptions& opts,
                              SharedBudget& budget, std::vector<int>& witness_ids) {
    std::atomic<long long> best{0};  // the empty packing is always admissible
    int workers = std::max(1, opts.workers);
    int usable = std::min<int>(workers, static_cast<int>(inst.cliques.size()));

    if (usable <= 1) {
        MaxSearch search(inst, budget, best);
        search.dfs(0);
        search.finish();
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            MaxSearch search(inst, budget, best);
            for (;;) {
                std::size_t j = next.fetch_add(1);
                if (j >= inst.cliques.size() || budget.abort_requested()) break;
                search.apply(static_cast<int>(j));
                search.dfs(static_cast<int>(j) + 1);
                search.undo(static_cast<int>(j));
            }
            search.finish();
        };
        std::vector<std::thread> pool;
        pool.reserve(usable);
        for (int w = 0; w < usable; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    budget.raise_if_exhausted();

    long long optimum = best.load();
    MaxReplay replay(inst, optimum);
    bool found = replay.dfs(0);
    budget.flush(replay.nodes);
    if (!found) throw Error("packing replay failed to reach the optimum");
    witness_ids = replay.chosen;
    return optimum;
}

// Exact cover of the edges by size-t cliques, minimum-remaining-candidates
// edge selection, candidates in lexicographic order.
struct CoverSearch {
    const EdgeInstance& inst;
    SharedBudget& budget;

    std::vector<std::uint8_t> covered;
    int covered_cnt = 0;
    std::vector<int> chosen;
    long long local_nodes = 0;

    CoverSearch(const EdgeInstance& i, SharedBudget& bu) : inst(i), budget(bu) {
        covered.assign(inst.m, 0);
    }

    bool clique_free(int ci) const {
        for (int e : inst.clique_edges[ci])
            if (covered[e]) return false;
        return true;
    }

    bool tick() {
        if ((++local_nodes & 0x3F) == 0) {
            budget.flush(64);
            local_nodes -= 64;
        }
        return budget.abort_requested();
    }

    bool dfs() {
        if (tick()) return false;
        if (covered_cnt == inst.m) return true;
        int pick = -1, pick_count = INT_MAX;
        for (int e = 0; e < inst.m; ++e) {
            if (covered[e]) continue;
            int cnt = 0;
            for (int ci : inst.cands[e])
                if (clique_free(ci)) ++cnt;
            if (cnt < pick_count) {
                pick_count = cnt;
                pick = e;
                if (cnt == 0) return false;
                if (cnt == 1) break;
            }
        }
        for (int ci : inst.cands[pick]) {
            if (!clique_free(ci)) continue;
            for (int e : inst.clique_edges[ci]) covered[e] = 1;
            covered_cnt += static_cast<int>(inst.clique_edges[ci].size());
            chosen.push_back(ci);
            if (dfs()) return true;
            if (budget.abort_requested()) return false;
            chosen.pop_back();
            covered_cnt -= static_cast<int>(inst.clique_edges[ci].size());
            for (int e : inst.clique_edges[ci]) covered[e] = 0;
        }
        return false;
    }
};

struct MinimizeOutcome {
    long long optimum = 0;
    std::vector<Clique> witness;
};

MinimizeOutcome run_partition_solver(const Graph& g, int t, bool minimize_total,
                                     const SolveOptions& opts, SharedBudget& budget) {
    MinimizeOutcome out;
    auto comps = edge_components(g);
    bool exclude = opts.exclude_trivial && comps.size() == 1;
    for (const auto& comp : comps) {
        EdgeInstance inst = build_instance(comp.local, t, false);
        std::vector<int> ids;
        out.optimum += solve_min_component(inst, minimize_total, exclude, opts, budget, ids);
        for (int ci : ids) {
            Clique global;
            for (int u : inst.cliques[ci]) global.push_back(comp.to_global[u]);
            out.witness.push_back(std::move(global));
        }
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_edge_guard(const Graph& g, const SolveOptions& opts) {
    if (!opts.force && g.edge_count() > kSolveEdgeGuard)
        throw SizeGuardError("instance has " + std::to_string(g.edge_count()) + " edges (> " +
                             std::to_string(kSolveEdgeGuard) + "); rerun with force enabled");
}

}  // namespace

SolveResult solve_cp_t(const Graph& g, int t, const SolveOptions& opts) {
    if (t < 2) throw PreconditionError("clique partitions need t >= 2");
    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    if (g.edge_count() == 0) return res;
    check_edge_guard(g, opts);
    SharedBudget budget;
    budget.configure(opts);
    auto out = run_partition_solver(g, t, false, opts, budget);
    res.optimum = out.optimum;
    res.witness = std::move(out.witness);
    res.nodes_explored = budget.nodes.load();
    res.elapsed_seconds = seconds_since(start);
    return res;
}

SolveResult solve_cp(const Graph& g, const SolveOptions& opts) {
    if (g.edge_count() == 0) return {};
    check_edge_guard(g, opts);
    return solve_cp_t(g, clique_number(g), opts);
}

SolveResult solve_pi_t(const Graph& g, int t, const SolveOptions& opts) {
    if (t < 2) throw PreconditionError("clique partitions need t >= 2");
    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    if (g.edge_count() == 0) return res;
    check_edge_guard(g, opts);
    SharedBudget budget;
    budget.configure(opts);
    auto out = run_partition_solver(g, t, true, opts, budget);
    res.optimum = out.optimum;
    res.witness = std::move(out.witness);
    res.nodes_explored = budget.nodes.load();
    res.elapsed_seconds = seconds_since(start);
    return res;
}

SolveResult solve_pi(const Graph& g, const SolveOptions& opts) {
    if (g.edge_count() == 0) return {};
    check_edge_guard(g, opts);
    return solve_pi_t(g, clique_number(g), opts);
}

SolveResult solve_kt(const Graph& g, int t, const SolveOptions& opts) {
    if (t < 3) throw PreconditionError("edge-disjoint clique packing needs t >= 3");
    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    if (g.edge_count() == 0) return res;
    check_edge_guard(g, opts);
    SharedBudget budget;
    budget.configure(opts);
    for (const auto& comp : edge_components(g)) {
        EdgeInstance inst = build_instance(comp.local, t, true);
        std::vector<int> ids;
        res.optimum += solve_max_component(inst, opts, budget, ids);
        for (int ci : ids) {
            Clique global;
            for (int u : inst.cliques[ci]) global.push_back(comp.to_global[u]);
            res.witness.push_back(std::move(global));
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    res.nodes_explored = budget.nodes.load();
    res.elapsed_seconds = seconds_since(start);
    return res;
}

std::optional<CliquePartition> find_kt_decomposition(const Graph& g, int t,
                                                     const SolveOptions& opts) {
    if (t < 2) throw PreconditionError("decompositions need t >= 2");
    if (g.edge_count() == 0) return make_clique_partition(g, {});
    SharedBudget budget;
    budget.configure(opts);
    long long pairs_t = static_cast<long long>(t) * (t - 1) / 2;
    std::vector<Clique> all;
    for (const auto& comp : edge_components(g)) {
        if (comp.local.edge_count() % pairs_t != 0) return std::nullopt;
        for (int u = 0; u < comp.local.order(); ++u)
            if (comp.local.degree(u) % (t - 1) != 0) return std::nullopt;
        EdgeInstance inst = build_instance(comp.local, t, true);
        CoverSearch search(inst, budget);
        bool found = search.dfs();
        budget.flush(search.local_nodes);
        budget.raise_if_exhausted();
        if (!found) return std::nullopt;
        for (int ci : search.chosen) {
            Clique global;
            for (int u : inst.cliques[ci]) global.push_back(comp.to_global[u]);
            all.push_back(std::move(global));
        }
    }
    return make_clique_partition(g, std::move(all));
}

}  // namespace specpart
