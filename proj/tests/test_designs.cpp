#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "specpart/designs.hpp"
#include "specpart/json_io.hpp"
#include "specpart/spectral.hpp"

using namespace specpart;

namespace {

struct CorpusEntry {
    const char* label;
    Design design;
};

std::vector<CorpusEntry> design_corpus() {
    std::vector<CorpusEntry> corpus;
    corpus.push_back({"pairs(4)", trivial_pair_design(4)});
    corpus.push_back({"pairs(5)", trivial_pair_design(5)});
    corpus.push_back({"pairs(6)", trivial_pair_design(6)});
    corpus.push_back({"projective(2)", projective_plane(2)});
    corpus.push_back({"projective(3)", projective_plane(3)});
    corpus.push_back({"affine(2)", affine_plane(2)});
    corpus.push_back({"affine(3)", affine_plane(3)});
    corpus.push_back({"sts(9)", bose_sts(9)});
    return corpus;
}

}  // namespace

TEST_CASE("validate_design parameters") {
    DesignParams fano = validate_design(projective_plane(2));
    CHECK(fano.v == 7);
    CHECK(fano.k == 3);
    CHECK(fano.r == 3);
    CHECK(fano.b == 7);

    DesignParams pairs5 = validate_design(trivial_pair_design(5));
    CHECK(pairs5.v == 5);
    CHECK(pairs5.k == 2);
    CHECK(pairs5.r == 4);
    CHECK(pairs5.b == 10);

    DesignParams ag3 = validate_design(affine_plane(3));
    CHECK(ag3.v == 9);
    CHECK(ag3.k == 3);
    CHECK(ag3.r == 4);
    CHECK(ag3.b == 12);
}

TEST_CASE("validate_design rejections") {
    Design doubled{4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    CHECK_THROWS_AS(validate_design(doubled), PreconditionError);

    Design uncovered{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    CHECK_THROWS_AS(validate_design(uncovered), PreconditionError);

    Design mixed{4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}};
    CHECK_THROWS_AS(validate_design(mixed), PreconditionError);

    Design range{3, {{0, 7}, {0, 2}, {1, 2}}};
    CHECK_THROWS_AS(validate_design(range), PreconditionError);
}

TEST_CASE("plane constructions need prime order") {
    CHECK_THROWS_AS(affine_plane(4), PreconditionError);
    CHECK_THROWS_AS(affine_plane(1), PreconditionError);
    CHECK_THROWS_AS(projective_plane(6), PreconditionError);
    validate_design(affine_plane(5));
    validate_design(projective_plane(5));
}

TEST_CASE("affine plane of order 2 degenerates to the pair design") {
    Design a2 = affine_plane(2);
    Design pairs = trivial_pair_design(4);
    CHECK(a2.num_points == pairs.num_points);
    CHECK(a2.blocks == pairs.blocks);
}

TEST_CASE("triple systems from the Bose construction") {
    DesignParams s9 = validate_design(bose_sts(9));
    CHECK(s9.v == 9);
    CHECK(s9.k == 3);
    CHECK(s9.b == 12);

    DesignParams s15 = validate_design(bose_sts(15));
    CHECK(s15.b == 35);
    CHECK(s15.r == 7);

    CHECK(validate_design(bose_sts(21)).b == 70);

    CHECK_THROWS_AS(bose_sts(7), PreconditionError);
    CHECK_THROWS_AS(bose_sts(12), PreconditionError);
}

TEST_CASE("block graphs of the reference designs") {
    auto [k7, fano_cliques] = block_graph(projective_plane(2));
    CHECK(k7 == gen_complete(7));
    CHECK(fano_cliques.cliques.size() == 7);
    for (const auto& c : fano_cliques.cliques) CHECK(c.size() == 3);

    auto [t5, pair_cliques] = block_graph(trivial_pair_design(5));
    CHECK(t5 == gen_triangular(5));
    CHECK(pair_cliques.cliques.size() == 5);
    for (const auto& c : pair_cliques.cliques) CHECK(c.size() == 4);

    // The block graph of an affine plane of order 3 is the complete
    // 4-partite graph with parts of size 3, up to labels.
    auto [ag, ag_cliques] = block_graph(affine_plane(3));
    CHECK(ag.order() == 12);
    CHECK(ag.edge_count() == 54);
    DegreeProfile profile = degree_profile(ag);
    CHECK(profile.is_regular);
    CHECK(profile.min_degree == 9);
    Spectrum s = sym_eigenvalues(SymMatrix::adjacency(ag));
    CHECK(s.grouped.size() == 3);
    CHECK(s.grouped[0].first == doctest::Approx(9.0));
    CHECK(s.grouped[1].second == 8);
    CHECK(s.grouped[2].first == doctest::Approx(-3.0));
    CHECK(ag_cliques.cliques.size() == 9);
}

TEST_CASE("block graph structural invariants across the corpus") {
    for (const auto& entry : design_corpus()) {
        CAPTURE(entry.label);
        DesignParams params = validate_design(entry.design);
        auto [g, partition] = block_graph(entry.design);
        PartitionStats stats = validate(partition);
        CHECK(stats.size == params.v);
        int t = params.r;
        CHECK(stats.max_clique_size == t);
        CHECK(params.v - 1 == t * (params.k - 1));
        CHECK(clique_graph(partition) == gen_complete(params.v));
        CHECK(verify_gram_identities(partition));

        // Strongly regular or complete.
        bool complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
        if (!complete) CHECK(strongly_regular_params(g).has_value());

        // Eigenvalues: degree once, t-1-k with multiplicity v-1, -k on the
        // rest, degenerate multiplicities dropped.
        Spectrum s = sym_eigenvalues(SymMatrix::adjacency(g));
        std::vector<std::pair<double, int>> expected;
        int delta = degree_profile(g).min_degree;
        expected.emplace_back(delta, 1);
        if (params.v - 1 > 0) expected.emplace_back(t - 1 - params.k, params.v - 1);
        if (g.order() - params.v > 0) expected.emplace_back(-params.k, g.order() - params.v);
        std::sort(expected.begin(), expected.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        REQUIRE(s.grouped.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(s.grouped[i].first == doctest::Approx(expected[i].first).epsilon(1e-6));
            CHECK(s.grouped[i].second == expected[i].second);
        }
    }
}

TEST_CASE("decomposition_to_design recovers designs") {
    auto fano = find_kt_decomposition(gen_complete(7), 3);
    REQUIRE(fano.has_value());
    DesignParams params = validate_design(decomposition_to_design(gen_complete(7), *fano));
    CHECK(params.v == 7);
    CHECK(params.k == 3);

    auto [t5, partition] = block_graph(trivial_pair_design(5));
    Design pairs = decomposition_to_design(t5, partition);
    CHECK(pairs.num_points == 5);
    CHECK(pairs.blocks == trivial_pair_design(5).blocks);

    // The octahedron's triangle decompositions convert: every pair of
    // triangles in such a decomposition meets in exactly one vertex.
    Graph octa = gen_complete_multipartite({2, 2, 2});
    auto od = find_kt_decomposition(octa, 3);
    REQUIRE(od.has_value());
    DesignParams op = validate_design(decomposition_to_design(octa, *od));
    CHECK(op.v == 4);
    CHECK(op.k == 2);
    CHECK(op.b == 6);
}

TEST_CASE("decomposition_to_design rejections are specific") {
    // Disjoint cliques: two separate triangles share zero vertices.
    Graph two = from_edge_list({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 6);
    CliquePartition tp = make_clique_partition(two, {{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_WITH_AS(decomposition_to_design(two, tp),
                         doctest::Contains("share 0"), PreconditionError);

    // Irregular host.
    Graph f2 = gen_friendship(2);
    CliquePartition fp = make_clique_partition(f2, {{0, 1, 2}, {0, 3, 4}});
    CHECK_THROWS_WITH_AS(decomposition_to_design(f2, fp), doctest::Contains("not regular"),
                         PreconditionError);

    // Mixed clique sizes: one triangle plus leftover edges of the octahedron.
    Graph octa = gen_complete_multipartite({2, 2, 2});
    std::vector<Clique> mixed = {{0, 2, 4}};
    for (const auto& [u, v] : octa.edges()) {
        bool in_triangle = (u == 0 || u == 2 || u == 4) && (v == 0 || v == 2 || v == 4);
        if (!in_triangle) mixed.push_back({u, v});
    }
    CliquePartition mp = make_clique_partition(octa, std::move(mixed));
    CHECK_THROWS_WITH_AS(decomposition_to_design(octa, mp), doctest::Contains("sizes differ"),
                         PreconditionError);
}

TEST_CASE("round trips over the corpus") {
    CHECK(roundtrip_check(projective_plane(2)));
    CHECK(roundtrip_check(trivial_pair_design(6)));
    CHECK(roundtrip_check(affine_plane(5)));
    for (const auto& entry : design_corpus()) {
        CAPTURE(entry.label);
        CHECK(roundtrip_check(entry.design));
    }
}

TEST_CASE("design JSON round trip") {
    Design d = affine_plane(3);
    Design back = design_from_json(design_to_json(d));
    CHECK(back.num_points == d.num_points);
    CHECK(back.blocks == d.blocks);

    nlohmann::json bad = {{"v", 5}};
    CHECK_THROWS_AS(design_from_json(bad), ParseError);
}
