#include <doctest.h>

#include "kps/design.hpp"
#include "kps/errors.hpp"

using namespace kps;

TEST_CASE("derive_params follows the parameter identities") {
    auto p = derive_params(3, 4, 8);
    CHECK(p == DesignParams{3, 4, 7, 8, 14});
    CHECK(derive_params(1, 3, 7) == DesignParams{1, 3, 3, 7, 7});
    CHECK_THROWS_AS(derive_params(1, 3, 8), NonIntegralParameters);

    // Fisher-type identities hold for every derivable quintuple.
    for (long long lambda = 1; lambda <= 3; ++lambda)
        for (long long k = 2; k <= 6; ++k)
            for (long long v = k + 1; v <= 20; ++v) {
                try {
                    auto q = derive_params(lambda, k, v);
                    CHECK(q.r * (k - 1) == lambda * (v - 1));
                    CHECK(q.b * k * (k - 1) == lambda * v * (v - 1));
                } catch (const NonIntegralParameters&) {
                }
            }
}

TEST_CASE("stanton design validates as (3,4,7,8,14)") {
    auto d = stanton_design();
    CHECK(d.v == 8);
    CHECK(d.blocks.size() == 14);
    CHECK(d.blocks[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(validate_bibd(d) == DesignParams{3, 4, 7, 8, 14});
    CHECK(check_g_design(d) == 2);
}

TEST_CASE("validate_bibd names the first witness") {
    auto d = stanton_design();
    d.blocks.pop_back();
    CHECK_THROWS_AS(validate_bibd(d), UnequalReplication);

    auto uneven = stanton_design();
    uneven.blocks[3] = {0, 1, 2};
    CHECK_THROWS_AS(validate_bibd(uneven), UnequalBlockSizes);
}

TEST_CASE("intersection profiles") {
    auto profile = intersection_profile(stanton_design());
    CHECK(profile.counts[0] == 7);
    CHECK(profile.counts[2] == 84);
    CHECK(profile.total() == 91);

    auto fano = projective_plane(2);
    auto fano_profile = intersection_profile(fano);
    CHECK(fano_profile.counts[1] == 21);
    CHECK(fano_profile.total() == 21);

    // two identical blocks intersect in k points
    Design twin{4, {{0, 1}, {0, 1}, {2, 3}}};
    CHECK(intersection_profile(twin).counts[2] == 1);
}

TEST_CASE("check_g_design distinguishes support shapes") {
    CHECK(check_g_design(stanton_design()) == 2);
    CHECK(check_g_design(affine_plane(3)) == 1);
    CHECK(check_g_design(projective_plane(2)) == 1);
    // support {0,1,2} is not a g-design
    Design mixed{5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {0, 2, 4}}};
    CHECK_FALSE(check_g_design(mixed).has_value());
}

TEST_CASE("catalog planes validate with lambda = 1") {
    CHECK(validate_bibd(projective_plane(2)) == DesignParams{1, 3, 3, 7, 7});
    CHECK(validate_bibd(projective_plane(3)) == DesignParams{1, 4, 4, 13, 13});
    CHECK(validate_bibd(affine_plane(2)) == DesignParams{1, 2, 3, 4, 6});
    CHECK(validate_bibd(affine_plane(3)) == DesignParams{1, 3, 4, 9, 12});
    CHECK(validate_bibd(affine_plane(5)) == DesignParams{1, 5, 6, 25, 30});
    CHECK_THROWS_AS(projective_plane(4), UnsupportedOrder);
    CHECK_THROWS_AS(affine_plane(6), UnsupportedOrder);

    // Steiner property: every lambda=1 catalog design is a g-design with g=1
    for (const auto& d : {projective_plane(2), projective_plane(3), affine_plane(3)})
        CHECK(check_g_design(d) == 1);
}

TEST_CASE("brute_force_search agrees with the validator") {
    auto fano = brute_force_search(1, 3, 7, 1'000'000);
    REQUIRE(fano.has_value());
    CHECK(validate_bibd(*fano) == DesignParams{1, 3, 3, 7, 7});

    auto stanton_like = brute_force_search(3, 4, 8, 10'000'000);
    REQUIRE(stanton_like.has_value());
    CHECK(validate_bibd(*stanton_like) == DesignParams{3, 4, 7, 8, 14});

    CHECK_THROWS_AS(brute_force_search(1, 3, 8, 1000), NonIntegralParameters);
    CHECK_THROWS_AS(brute_force_search(1, 3, 9, 2), BudgetExhausted);
}

TEST_CASE("natural_kps maps blocks to rings") {
    auto a = natural_kps(stanton_design());
    CHECK(a.node_count == 14);
    CHECK(a.key_pool.size() == 8);
    for (const auto& ring : a.rings) CHECK(ring.size() == 4);

    auto fano = natural_kps(projective_plane(2));
    CHECK(fano.node_count == 7);
    CHECK(fano.key_pool.size() == 7);
    for (const auto& ring : fano.rings) CHECK(ring.size() == 3);
}

TEST_CASE("natural_capture_count reproduces the single-capture count") {
    auto d = stanton_design();
    CHECK(natural_capture_count(d, {}) == 0);
    for (int n = 0; n < 14; ++n)
        CHECK(natural_capture_count(d, {n}) == 18);  // C(3,2)*C(4,2)

    SUBCASE("monotone under capture-set inclusion") {
        std::set<int> s;
        long long prev = 0;
        for (int n : {0, 5, 9, 13, 2}) {
            s.insert(n);
            long long cur = natural_capture_count(d, s);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}
