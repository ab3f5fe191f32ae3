#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "specpart/graph.hpp"

using namespace specpart;

TEST_CASE("from_edge_list builds the requested graph") {
    Graph triangle = from_edge_list({{0, 1}, {1, 2}, {0, 2}}, 3);
    CHECK(triangle == gen_complete(3));

    Graph g = oracles::triforce_graph();
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.adjacent(1, 4));
    CHECK(!g.adjacent(0, 5));

    Graph empty = from_edge_list({}, 4);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("from_edge_list rejects bad input and collapses duplicates") {
    CHECK_THROWS_AS(from_edge_list({{0, 3}}, 3), PreconditionError);
    CHECK_THROWS_AS(from_edge_list({{-1, 0}}, 3), PreconditionError);
    CHECK_THROWS_AS(from_edge_list({{1, 1}}, 3), PreconditionError);

    Graph g = from_edge_list({{0, 1}, {1, 0}, {0, 1}}, 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree_profile") {
    DegreeProfile k5 = degree_profile(gen_complete(5));
    CHECK(k5.min_degree == 4);
    CHECK(k5.is_regular);
    CHECK(k5.is_connected);
    CHECK(!k5.has_isolated_vertex);

    DegreeProfile f2 = degree_profile(gen_friendship(2));
    CHECK(f2.min_degree == 2);
    CHECK(f2.max_degree == 4);
    CHECK(!f2.is_regular);
    CHECK(f2.is_connected);

    DegreeProfile path = degree_profile(from_edge_list({{0, 1}, {1, 2}}, 3));
    CHECK(path.min_degree == 1);
    CHECK(!path.is_regular);
    CHECK(path.is_connected);

    DegreeProfile lonely = degree_profile(from_edge_list({{0, 1}}, 3));
    CHECK(lonely.has_isolated_vertex);
    CHECK(!lonely.is_connected);
}

TEST_CASE("complement") {
    CHECK(complement(gen_complete(4)).edge_count() == 0);

    // C_5 is self-complementary: same counts, 2-regular, connected.
    Graph cc5 = complement(gen_cycle(5));
    DegreeProfile p = degree_profile(cc5);
    CHECK(cc5.edge_count() == 5);
    CHECK(p.is_regular);
    CHECK(p.min_degree == 2);
    CHECK(p.is_connected);

    Graph cc7 = complement(gen_cycle(7));
    CHECK(cc7.edge_count() == 14);
    CHECK(degree_profile(cc7).is_regular);
    CHECK(degree_profile(cc7).min_degree == 4);
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        Graph g = oracles::random_graph(rng, 1 + round % 9, 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("family generators match their closed-form counts") {
    Graph k33 = gen_complete_multipartite({3, 3, 3});
    CHECK(k33.order() == 9);
    CHECK(k33.edge_count() == 27);
    CHECK(degree_profile(k33).min_degree == 6);
    CHECK(degree_profile(k33).is_regular);

    for (int p = 2; p <= 4; ++p)
        for (int a = 1; a <= 4; ++a) {
            Graph g = gen_complete_multipartite(std::vector<int>(p, a));
            CHECK(g.edge_count() == a * a * p * (p - 1) / 2);
        }

    for (int v = 3; v <= 8; ++v) {
        Graph t = gen_triangular(v);
        CHECK(t.order() == v * (v - 1) / 2);
        DegreeProfile p = degree_profile(t);
        CHECK(p.is_regular);
        CHECK(p.min_degree == 2 * v - 4);
    }

    for (int v = 1; v <= 6; ++v) {
        Graph f = gen_friendship(v);
        CHECK(f.order() == 2 * v + 1);
        CHECK(f.edge_count() == 3 * v);
    }

    Graph t5 = gen_triangular(5);
    CHECK(t5.edge_count() == 30);

    CHECK(gen_complete_multipartite({1, 1, 1}) == gen_complete(3));
    CHECK(gen_cycle(3) == gen_complete(3));
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(gen_complete(0), PreconditionError);
    CHECK_THROWS_AS(gen_cycle(2), PreconditionError);
    CHECK_THROWS_AS(gen_triangular(2), PreconditionError);
    CHECK_THROWS_AS(gen_friendship(0), PreconditionError);
    CHECK_THROWS_AS(gen_complete_multipartite({2, 0}), PreconditionError);
    CHECK_THROWS_AS(gen_complete_multipartite({}), PreconditionError);
}

TEST_CASE("edge-list text round trip") {
    std::mt19937 rng(11);
    for (int round = 0; round < 10; ++round) {
        Graph g = oracles::random_graph(rng, 2 + round, 0.5);
        std::stringstream buf;
        write_edge_list(buf, g);
        CHECK(read_edge_list(buf) == g);
    }
}

TEST_CASE("edge-list parser accepts comments and rejects junk") {
    std::stringstream ok("# header comment\n3 2\n0 1\n# inner comment\n1 2\n");
    Graph g = read_edge_list(ok);
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);

    std::stringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(missing), ParseError);

    std::stringstream selfloop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(selfloop), ParseError);

    std::stringstream header("nonsense\n");
    CHECK_THROWS_AS(read_edge_list(header), ParseError);

    std::stringstream range("2 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(range), ParseError);
}

TEST_CASE("connected components") {
    Graph g = from_edge_list({{0, 1}, {2, 3}, {3, 4}}, 6);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK(comps[2] == std::vector<int>{5});
}

TEST_CASE("strongly regular parameter detection") {
    auto pet = strongly_regular_params(oracles::petersen());
    REQUIRE(pet.has_value());
    CHECK(pet->degree == 3);
    CHECK(pet->lambda == 0);
    CHECK(pet->mu == 1);

    auto t5 = strongly_regular_params(gen_triangular(5));
    REQUIRE(t5.has_value());
    CHECK(t5->degree == 6);
    CHECK(t5->lambda == 3);
    CHECK(t5->mu == 4);

    CHECK(!strongly_regular_params(gen_complete(5)).has_value());
    CHECK(!strongly_regular_params(gen_friendship(2)).has_value());
}
