#include <doctest.h>

#include "kps/design.hpp"
#include "kps/errors.hpp"
#include "kps/target.hpp"

using namespace kps;

TEST_CASE("classical target") {
    auto t3 = classical_target(3);
    CHECK(t3.may.edge_count() == 3);
    CHECK(t3.must.edge_count() == 0);
    CHECK(t3.forbid.edge_count() == 0);
    CHECK(classical_target(14).may.edge_count() == 91);
    CHECK_THROWS_AS(classical_target(1), PreconditionError);
}

namespace {

// Reference J matrix built entry by entry.
bool j_entry(int m, int n, int b0, int tau0) {
    if (m == n) return false;
    if (m % b0 < tau0 && n % b0 < tau0) return true;
    return m / b0 == n / b0;
}

}  // namespace

TEST_CASE("hierarchical target equals the reference matrix") {
    auto t = hierarchical_target(2, 7, 1);
    CHECK(t.may.edge_count() == 43);  // 2*C(7,2) + 1 central pair
    CHECK(t.must.edge_count() == 0);
    CHECK(t.forbid.edge_count() == 0);

    CHECK(hierarchical_target(2, 7, 0).may.edge_count() == 42);
    CHECK(hierarchical_target(3, 4, 2).may.edge_count() == 30);

    for (auto [s, b0, tau0] : {std::tuple{2, 7, 1}, {3, 4, 2}, {4, 5, 3}, {2, 3, 0}}) {
        auto target = hierarchical_target(s, b0, tau0);
        for (int m = 0; m < target.n; ++m)
            for (int n = m + 1; n < target.n; ++n)
                CHECK(target.may.has_edge(m, n) == j_entry(m, n, b0, tau0));
    }
}

TEST_CASE("matched pairs target") {
    auto t = matched_pairs_target(7);
    CHECK(t.must.edge_count() == 84);
    CHECK(t.forbid.edge_count() == 7);
    CHECK(t.may.edge_count() == 0);
    CHECK(validate_target(t).ok);

    // must equals the stanton design graph under the identity labeling
    CHECK(t.must == design_graph(stanton_design()));

    auto one = matched_pairs_target(1);
    CHECK(one.must.edge_count() == 0);
    CHECK(one.forbid.edge_count() == 1);

    auto two = matched_pairs_target(2);
    CHECK(two.must.edge_count() == 4);  // K4 minus the matching {(0,2),(1,3)}
    CHECK(two.must.has_edge(0, 1));
    CHECK_FALSE(two.must.has_edge(0, 2));
}

TEST_CASE("validate_target catches overlaps and count mismatches") {
    CHECK(validate_target(classical_target(5)).ok);

    TargetGraph bad;
    bad.n = 3;
    bad.must.n = bad.forbid.n = bad.may.n = 3;
    bad.must.add_edge(0, 1);
    bad.forbid.add_edge(0, 1);
    auto w = validate_target(bad);
    CHECK_FALSE(w.ok);
    CHECK(w.detail.find("(0,1)") != std::string::npos);

    TargetGraph mismatch;
    mismatch.n = 3;
    mismatch.must.n = 2;
    mismatch.forbid.n = mismatch.may.n = 3;
    CHECK_FALSE(validate_target(mismatch).ok);
}

TEST_CASE("generator outputs always satisfy disjointness") {
    for (int n : {2, 5, 9}) CHECK(validate_target(classical_target(n)).ok);
    for (int p : {1, 3, 7}) CHECK(validate_target(matched_pairs_target(p)).ok);
    CHECK(validate_target(hierarchical_target(3, 4, 2)).ok);
}
