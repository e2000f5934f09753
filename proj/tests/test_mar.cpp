#include <doctest.h>

#include <random>

#include "kps/design.hpp"
#include "kps/errors.hpp"
#include "kps/mar.hpp"
#include "kps/metrics.hpp"
#include "kps/target.hpp"

using namespace kps;

namespace {

Graph random_graph(std::mt19937& rng, int n, int density_pct) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < density_pct) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("run_mar on tiny graphs") {
    auto k3 = run_mar(complete_graph(3), MarConfig{3, CliqueStrategy::GreedyLargest});
    CHECK(k3.assignment.key_pool.size() == 1);
    for (const auto& ring : k3.assignment.rings) CHECK(ring == std::set<int>{0});
    CHECK(k3.trace.initial_key_count == 3);
    REQUIRE(k3.trace.steps.size() == 1);
    CHECK(k3.trace.steps[0].clique == std::vector<int>{0, 1, 2});
    CHECK(k3.trace.steps[0].removed_count == 2);

    Graph path;  // 0-1-2 has no triangle, so nothing collapses
    path.n = 3;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto r = run_mar(path, MarConfig{3, CliqueStrategy::GreedyEdge});
    CHECK(r.assignment.key_pool.size() == 2);
    CHECK(r.assignment.rings[1].size() == 2);
    CHECK(r.trace.steps.empty());

    // c0 = 2 keeps the unique key per edge
    auto flat = run_mar(complete_graph(4), MarConfig{2, CliqueStrategy::GreedyLargest});
    CHECK(flat.assignment.key_pool.size() == 6);
    CHECK(flat.trace.steps.empty());

    CHECK_THROWS_AS(run_mar(complete_graph(3), MarConfig{1}), PreconditionError);
}

TEST_CASE("guided run on the matched-pairs instance") {
    auto target = matched_pairs_target(7);
    MarConfig config;
    config.strategy = CliqueStrategy::Guided;
    config.guided_cliques = pair_clique_decomposition(stanton_design()).cliques;
    auto result = run_mar(target.must, config);

    CHECK(result.assignment.key_pool.size() == 28);
    for (const auto& ring : result.assignment.rings) CHECK(ring.size() == 6);
    CHECK(kps_design_graph(result.assignment) == target.must);

    CHECK(result.trace.initial_key_count == 84);
    REQUIRE(result.trace.steps.size() == 28);
    for (const auto& step : result.trace.steps) {
        CHECK(step.clique.size() == 3);
        CHECK(step.removed_count == 2);
    }

    // a guided clique absent from the residual is rejected
    MarConfig bad = config;
    bad.guided_cliques.push_back({0, 1, 7});  // (0,7) is a forbidden non-edge
    CHECK_THROWS_AS(run_mar(target.must, bad), PreconditionError);
}

TEST_CASE("mar invariants on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(rng, 6 + static_cast<int>(rng() % 7), 55);
        for (auto strategy : {CliqueStrategy::GreedyLargest, CliqueStrategy::GreedyEdge}) {
            int c0 = 3 + static_cast<int>(rng() % 3);
            auto result = run_mar(g, MarConfig{c0, strategy});
            // exactness
            CHECK(kps_design_graph(result.assignment) == g);
            // key bookkeeping: |pool| = |E| - sum of removed keys
            long long removed = 0;
            for (const auto& step : result.trace.steps) {
                removed += step.removed_count;
                CHECK(static_cast<int>(step.clique.size()) <= c0);
                CHECK(step.clique.size() >= 3);
            }
            CHECK(static_cast<long long>(result.assignment.key_pool.size()) ==
                  g.edge_count() - removed);
        }
    }
}

TEST_CASE("nr_lower_bound") {
    CHECK(nr_lower_bound(12, 3, 84, 1) == Rational(11, 14));
    CHECK(nr_lower_bound(12, 2, 84, 1) == Rational(6, 7));
    CHECK(nr_lower_bound(12, 3, 84, 0) == Rational(1));
    CHECK(nr_lower_bound(12, 3, 84, 5) == Rational(0));  // clamped
    CHECK_THROWS_AS(nr_lower_bound(0, 3, 84, 1), PreconditionError);
}

TEST_CASE("capture_compromise_count") {
    auto target = matched_pairs_target(7);
    MarConfig config;
    config.strategy = CliqueStrategy::Guided;
    config.guided_cliques = pair_clique_decomposition(stanton_design()).cliques;
    auto mar = run_mar(target.must, config);

    CHECK(capture_compromise_count(mar.assignment, target.must, {0}) == 6);
    CHECK(capture_compromise_count(mar.assignment, target.must, {}) == 0);

    // unique key per edge: no external link is ever compromised
    auto flat = run_mar(target.must, MarConfig{2, CliqueStrategy::GreedyLargest});
    for (int n : {0, 3, 13})
        CHECK(capture_compromise_count(flat.assignment, target.must, {n}) == 0);

    CHECK_THROWS_AS(capture_compromise_count(mar.assignment, complete_graph(14), {0}),
                    DesignGraphMismatch);
}

TEST_CASE("worst_case_capture") {
    auto target = matched_pairs_target(7);
    MarConfig config;
    config.strategy = CliqueStrategy::Guided;
    config.guided_cliques = pair_clique_decomposition(stanton_design()).cliques;
    auto mar = run_mar(target.must, config);
    CHECK(worst_case_capture(mar.assignment, target.must, 1, true) == 18);
    CHECK(worst_case_capture(mar.assignment, target.must, 1, false) == 6);

    auto flat = run_mar(target.must, MarConfig{2, CliqueStrategy::GreedyLargest});
    CHECK(worst_case_capture(flat.assignment, target.must, 1, true) == 12);
    CHECK(worst_case_capture(flat.assignment, target.must, 1, false) == 0);

    // a partial c0=4 run concentrated on one node
    MarConfig skewed;
    skewed.c0 = 4;
    skewed.strategy = CliqueStrategy::Guided;
    skewed.guided_cliques = {{0, 1, 2, 3}, {0, 4, 5, 6}, {0, 8, 9, 10}, {0, 11, 12, 13}};
    auto partial = run_mar(target.must, skewed);
    CHECK(worst_case_capture(partial.assignment, target.must, 1, true) == 24);
}

TEST_CASE("worst-case compromise never beats the analytic bound") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = random_graph(rng, 7 + static_cast<int>(rng() % 5), 60);
        if (g.edge_count() == 0) continue;
        int c0 = 3 + static_cast<int>(rng() % 2);
        auto result = run_mar(g, MarConfig{c0, CliqueStrategy::GreedyLargest});
        for (long long x : {1, 2}) {
            long long worst = worst_case_capture(result.assignment, g, x, true);
            Rational resilient = Rational(1) - Rational(worst, g.edge_count());
            CHECK(resilient >= nr_lower_bound(std::max(1, g.max_degree()), c0,
                                              g.edge_count(), x));
        }
    }
}

TEST_CASE("extract_design recovers lambda=1 designs") {
    auto fano = extract_design(design_graph(projective_plane(2)), 3);
    CHECK(validate_bibd(fano) == DesignParams{1, 3, 3, 7, 7});

    auto affine = extract_design(design_graph(affine_plane(3)), 4);
    CHECK(validate_bibd(affine) == DesignParams{1, 3, 4, 9, 12});

    Graph c5;
    c5.n = 5;
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK_THROWS_AS(extract_design(c5, 3), NotDecomposable);
    CHECK_THROWS_AS(extract_design(complete_graph(4), 3), NotDecomposable);
    CHECK_THROWS_AS(extract_design(complete_graph(4), 1), PreconditionError);
}
