#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specpart/designs.hpp"
#include "specpart/json_io.hpp"
#include "specpart/partition.hpp"

using namespace specpart;

namespace {

CliquePartition triforce_partition() {
    return make_clique_partition(oracles::triforce_graph(), {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}});
}

CliquePartition all_edges_partition(const Graph& g) {
    std::vector<Clique> cliques;
    for (const auto& [u, v] : g.edges()) cliques.push_back({u, v});
    return make_clique_partition(g, std::move(cliques));
}

void check_stats_invariants(const Graph& g, const PartitionStats& stats) {
    CHECK(stats.total_size == std::accumulate(stats.q_degrees.begin(), stats.q_degrees.end(), 0));
    // Edge double counting: sum of C(|Q_i|, 2) must be m; recomputed from the
    // stats via total size is not possible, so callers check per partition.
    CHECK(stats.size >= 0);
    CHECK(g.order() == static_cast<int>(stats.q_degrees.size()));
}

}  // namespace

TEST_CASE("validate on the reference partitions") {
    CliquePartition p = triforce_partition();
    PartitionStats stats = validate(p);
    CHECK(stats.size == 3);
    CHECK(stats.total_size == 9);
    CHECK(stats.q_degrees == std::vector<int>{1, 2, 2, 1, 2, 1});
    CHECK(stats.max_clique_size == 3);
    check_stats_invariants(p.host, stats);

    CliquePartition edges = all_edges_partition(gen_cycle(5));
    PartitionStats es = validate(edges);
    CHECK(es.size == 5);
    CHECK(es.total_size == 10);
    CHECK(es.q_degrees == std::vector<int>(5, 2));

    CliquePartition whole = make_clique_partition(gen_complete(4), {{0, 1, 2, 3}});
    PartitionStats ws = validate(whole);
    CHECK(ws.size == 1);
    CHECK(ws.total_size == 4);

    int pair_sum = 0;
    for (const auto& c : p.cliques) pair_sum += static_cast<int>(c.size() * (c.size() - 1) / 2);
    CHECK(pair_sum == p.host.edge_count());
}

TEST_CASE("validate rejects defective partitions") {
    Graph g = oracles::triforce_graph();

    // Edge (4,5) left uncovered.
    CHECK_THROWS_AS(validate(make_clique_partition(
                        g, {{0, 1, 2}, {1, 3, 4}, {2, 4}, {2, 5}})),
                    PreconditionError);

    // Edge (1,2) covered twice.
    CHECK_THROWS_AS(validate(make_clique_partition(
                        g, {{0, 1, 2}, {1, 2}, {1, 3, 4}, {2, 4, 5}})),
                    PreconditionError);

    // {0, 3} is not an edge.
    CHECK_THROWS_AS(validate(make_clique_partition(g, {{0, 3}})), PreconditionError);

    // Singleton clique.
    CHECK_THROWS_AS(validate(make_clique_partition(g, {{0}})), PreconditionError);

    // Non-canonical order is rejected when bypassing make_clique_partition.
    CliquePartition raw{g, {{1, 3, 4}, {0, 1, 2}, {2, 4, 5}}};
    CHECK_THROWS_AS(validate(raw), PreconditionError);

    CliquePartition unsorted{g, {{2, 1, 0}}};
    CHECK_THROWS_AS(validate(unsorted), PreconditionError);
}

TEST_CASE("clique graph") {
    CHECK(clique_graph(triforce_partition()) == gen_complete(3));

    Graph star = from_edge_list({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 5);
    CHECK(clique_graph(all_edges_partition(star)) == gen_complete(4));

    auto [t5, decomposition] = block_graph(trivial_pair_design(5));
    CHECK(t5 == gen_triangular(5));
    CHECK(clique_graph(decomposition) == gen_complete(5));
}

TEST_CASE("incidence matrix") {
    IncidenceMatrix b = incidence_matrix(triforce_partition());
    CHECK(b.rows == 6);
    CHECK(b.cols == 3);
    std::vector<int> col_sums(3, 0), row_sums(6, 0);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (b.at(i, j)) {
                ++col_sums[j];
                ++row_sums[i];
            }
    CHECK(col_sums == std::vector<int>{3, 3, 3});
    CHECK(row_sums == std::vector<int>{1, 2, 2, 1, 2, 1});

    IncidenceMatrix single = incidence_matrix(make_clique_partition(gen_complete(4), {{0, 1, 2, 3}}));
    CHECK(single.cols == 1);
    for (int i = 0; i < 4; ++i) CHECK(single.at(i, 0));

    IncidenceMatrix k3 = incidence_matrix(all_edges_partition(gen_complete(3)));
    CHECK(k3.cols == 3);
    for (int j = 0; j < 3; ++j) {
        int ones = 0;
        for (int i = 0; i < 3; ++i) ones += k3.at(i, j) ? 1 : 0;
        CHECK(ones == 2);
    }
}

TEST_CASE("gram identities") {
    CHECK(verify_gram_identities(triforce_partition()));

    std::mt19937 rng(3);
    for (int round = 0; round < 15; ++round) {
        Graph g = oracles::random_graph(rng, 3 + round % 8, 0.45);
        if (g.edge_count() == 0) continue;
        CHECK(verify_gram_identities(all_edges_partition(g)));
    }

    auto [t5, decomposition] = block_graph(trivial_pair_design(5));
    CHECK(verify_gram_identities(decomposition));
    PartitionStats stats = validate(decomposition);
    CHECK(stats.q_degrees == std::vector<int>(10, 2));
    for (const auto& c : decomposition.cliques) CHECK(c.size() == 4);

    // Row sums of the clique gram of the reference partition: clique size 3
    // plus one shared vertex with each of the two other cliques.
    SymMatrix gram = clique_gram(incidence_matrix(triforce_partition()));
    CHECK(max_row_sum(gram) == doctest::Approx(5.0));
}

TEST_CASE("solve_cp_t on pinned instances") {
    CHECK(solve_cp_t(gen_complete(4), 2).optimum == 6);
    CHECK(solve_cp_t(oracles::triforce_graph(), 3).optimum == 3);
    CHECK(solve_cp_t(gen_complete(7), 3).optimum == 7);
    CHECK_THROWS_AS(solve_cp_t(gen_complete(3), 1), PreconditionError);
    CHECK(solve_cp_t(from_edge_list({}, 4), 3).optimum == 0);
}

TEST_CASE("solve_cp on pinned instances") {
    for (int n = 2; n <= 7; ++n) CHECK(solve_cp(gen_complete(n)).optimum == 1);
    CHECK(solve_cp(gen_triangular(5)).optimum == 5);
    CHECK(solve_cp(gen_friendship(3)).optimum == 3);
    CHECK(solve_cp(oracles::triforce_graph()).optimum == 3);
}

TEST_CASE("solve_pi_t and solve_pi on pinned instances") {
    CHECK(solve_pi_t(gen_complete(4), 2).optimum == 12);
    CHECK(solve_pi_t(gen_complete(7), 3).optimum == 21);
    CHECK(solve_pi_t(oracles::triforce_graph(), 3).optimum == 9);

    for (int n = 2; n <= 6; ++n) CHECK(solve_pi(gen_complete(n)).optimum == n);
    CHECK(solve_pi(oracles::triforce_graph()).optimum == 9);
    CHECK(solve_pi(gen_cycle(5)).optimum == 10);
}

TEST_CASE("solve_kt on pinned instances") {
    CHECK(solve_kt(oracles::petersen(), 3).optimum == 0);
    CHECK(solve_kt(gen_complete(4), 3).optimum == 1);
    CHECK(solve_kt(gen_complete(7), 3).optimum == 7);
    CHECK_THROWS_AS(solve_kt(gen_complete(4), 2), PreconditionError);
}

TEST_CASE("witnesses validate and satisfy the gram identities") {
    std::mt19937 rng(23);
    for (int round = 0; round < 12; ++round) {
        Graph g = oracles::random_connected_graph(rng, 4 + round % 4, 0.5);
        for (int t : {2, 3}) {
            SolveResult r = solve_cp_t(g, t, {});
            CliquePartition p = make_clique_partition(g, r.witness);
            PartitionStats stats = validate(p);
            CHECK(stats.size == r.optimum);
            CHECK(stats.max_clique_size <= t);
            CHECK(verify_gram_identities(p));

            SolveResult pi = solve_pi_t(g, t, {});
            CliquePartition pp = make_clique_partition(g, pi.witness);
            CHECK(validate(pp).total_size == pi.optimum);
        }
        SolveResult kt = solve_kt(g, 3, {});
        CHECK(static_cast<long long>(kt.witness.size()) == kt.optimum);
        std::vector<std::uint8_t> used(g.order() * g.order(), 0);
        for (const auto& c : kt.witness) {
            CHECK(c.size() == 3);
            CHECK(is_clique(g, c));
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    std::uint8_t& mark = used[c[i] * g.order() + c[j]];
                    CHECK(!mark);
                    mark = 1;
                }
        }
    }
}

TEST_CASE("the one-clique partition can be excluded") {
    for (int n = 3; n <= 7; ++n) {
        SolveOptions opts;
        opts.exclude_trivial = true;
        CHECK(solve_cp(gen_complete(n), opts).optimum == n);
    }
    SolveOptions opts;
    opts.exclude_trivial = true;
    CHECK_THROWS_AS(solve_cp(gen_complete(2), opts), PreconditionError);
}

TEST_CASE("solvers handle disconnected graphs per component") {
    Graph two_triangles = from_edge_list({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 6);
    CHECK(solve_cp(two_triangles).optimum == 2);
    CHECK(solve_pi(two_triangles).optimum == 6);
    CHECK(solve_kt(two_triangles, 3).optimum == 2);

    // A component plus isolated vertices.
    Graph with_isolated = from_edge_list({{0, 1}, {1, 2}, {0, 2}}, 5);
    CHECK(solve_cp(with_isolated).optimum == 1);
}

TEST_CASE("monotonicity in t and the total-size comparison") {
    std::mt19937 rng(31);
    for (int round = 0; round < 10; ++round) {
        Graph g = oracles::random_connected_graph(rng, 5 + round % 3, 0.55);
        long long prev_cp = -1, prev_pi = -1;
        for (int t = 2; t <= 4; ++t) {
            long long cp_t = solve_cp_t(g, t, {}).optimum;
            long long pi_t = solve_pi_t(g, t, {}).optimum;
            if (t > 2) {
                CHECK(prev_cp >= cp_t);
                CHECK(prev_pi >= pi_t);
            }
            prev_cp = cp_t;
            prev_pi = pi_t;
        }
        long long cp = solve_cp(g).optimum;
        long long pi = solve_pi(g).optimum;
        int omega = clique_number(g);
        CHECK(pi <= static_cast<long long>(omega) * cp);
    }
}

TEST_CASE("solver results agree with the naive oracles") {
    std::mt19937 rng(47);
    for (int round = 0; round < 30; ++round) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_connected_graph(rng, n, 0.5);
        for (int t : {2, 3}) {
            CHECK(solve_cp_t(g, t, {}).optimum == oracles::naive_min_partition(g, t, false));
            CHECK(solve_pi_t(g, t, {}).optimum == oracles::naive_min_partition(g, t, true));
        }
        CHECK(solve_kt(g, 3, {}).optimum == oracles::naive_max_packing(g, 3));
    }
}

TEST_CASE("find_kt_decomposition") {
    CHECK(!find_kt_decomposition(gen_complete(4), 3).has_value());

    auto octa = find_kt_decomposition(gen_complete_multipartite({2, 2, 2}), 3);
    REQUIRE(octa.has_value());
    CHECK(octa->cliques.size() == 4);
    PartitionStats stats = validate(*octa);
    CHECK(stats.max_clique_size == 3);
    CHECK(stats.total_size == 12);

    auto t5 = find_kt_decomposition(gen_triangular(5), 4);
    REQUIRE(t5.has_value());
    CHECK(*t5 == block_graph(trivial_pair_design(5)).second);

    // K_2-decomposition is just the edge set.
    auto edges = find_kt_decomposition(gen_cycle(5), 2);
    REQUIRE(edges.has_value());
    CHECK(edges->cliques.size() == 5);

    // Divisibility passes on C_9 but the search finds no triangle at all.
    CHECK(!find_kt_decomposition(gen_cycle(9), 3).has_value());

    CHECK_THROWS_AS(find_kt_decomposition(gen_complete(4), 1), PreconditionError);
}

TEST_CASE("decomposition witnesses use every edge exactly once") {
    for (auto [g, t] : std::vector<std::pair<Graph, int>>{
             {gen_complete(7), 3}, {gen_complete_multipartite({3, 3, 3, 3}), 4}}) {
        auto d = find_kt_decomposition(g, t);
        REQUIRE(d.has_value());
        PartitionStats stats = validate(*d);
        CHECK(stats.max_clique_size == t);
        CHECK(stats.total_size == t * stats.size);
        CHECK(stats.size * t * (t - 1) / 2 == g.edge_count());
    }
}

TEST_CASE("identical results across worker counts") {
    std::vector<std::pair<Graph, int>> instances = {
        {gen_complete(6), 3}, {gen_triangular(5), 4}, {complement(gen_cycle(7)), 3}};
    for (const auto& [g, t] : instances) {
        SolveOptions base;
        base.workers = 1;
        SolveResult reference_cp = solve_cp_t(g, t, base);
        SolveResult reference_pi = solve_pi_t(g, t, base);
        SolveResult reference_kt = solve_kt(g, t, base);
        for (int workers : {2, 8}) {
            SolveOptions opts;
            opts.workers = workers;
            SolveResult cp = solve_cp_t(g, t, opts);
            CHECK(cp.optimum == reference_cp.optimum);
            CHECK(cp.witness == reference_cp.witness);
            SolveResult pi = solve_pi_t(g, t, opts);
            CHECK(pi.optimum == reference_pi.optimum);
            CHECK(pi.witness == reference_pi.witness);
            SolveResult kt = solve_kt(g, t, opts);
            CHECK(kt.optimum == reference_kt.optimum);
            CHECK(kt.witness == reference_kt.witness);
        }
    }
}

TEST_CASE("edge guard and timeout") {
    CHECK_THROWS_AS(solve_cp(gen_complete(13)), SizeGuardError);

    SolveOptions opts;
    opts.force = true;
    opts.timeout_seconds = 0.05;
    CHECK_THROWS_AS(solve_cp(complement(gen_cycle(13)), opts), TimeoutError);
}

TEST_CASE("partition JSON round trip") {
    CliquePartition p = triforce_partition();
    auto j = partition_to_json(p);
    CliquePartition back = partition_from_json(j);
    CHECK(back.host == p.host);
    CHECK(back.cliques == p.cliques);
    validate(back);

    nlohmann::json bad = {{"n", 3}};
    CHECK_THROWS_AS(partition_from_json(bad), ParseError);
    nlohmann::json loop = {{"n", 2}, {"cliques", {{0, 0}}}};
    CHECK_THROWS_AS(partition_from_json(loop), ParseError);
}
