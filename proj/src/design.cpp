#include "kps/design.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kps/errors.hpp"

namespace kps {

DesignParams derive_params(long long lambda, long long k, long long v) {
    if (lambda < 1) throw PreconditionError("lambda must be positive");
    if (k < 2 || k >= v) throw PreconditionError("need 2 <= k < v");
    long long rn = lambda * (v - 1);
    if (rn % (k - 1) != 0) {
        std::ostringstream msg;
        msg << "r = " << rn << "/" << (k - 1) << " is not integral";
        throw NonIntegralParameters(msg.str());
    }
    long long r = rn / (k - 1);
    long long bn = lambda * v * (v - 1);
    if (bn % (k * (k - 1)) != 0) {
        std::ostringstream msg;
        msg << "b = " << bn << "/" << k * (k - 1) << " is not integral";
        throw NonIntegralParameters(msg.str());
    }
    long long b = bn / (k * (k - 1));
    return DesignParams{lambda, k, r, v, b};
}

DesignParams validate_bibd(const Design& design) {
    if (design.blocks.empty()) throw PreconditionError("design has no blocks");
    const int v = design.v;
    const auto k = static_cast<long long>(design.blocks[0].size());
    for (const auto& block : design.blocks) {
        if (static_cast<long long>(block.size()) != k)
            throw UnequalBlockSizes("block sizes differ");
        std::set<int> uniq(block.begin(), block.end());
        if (static_cast<long long>(uniq.size()) != k)
            throw UnequalBlockSizes("block contains a repeated point");
        for (int p : block)
            if (p < 0 || p >= v) throw UnequalBlockSizes("point index out of range");
    }
    if (!(2 <= k && k < v)) throw UnequalBlockSizes("need 2 <= k < v");

    std::vector<long long> point_count(v, 0);
    for (const auto& block : design.blocks)
        for (int p : block) ++point_count[p];
    long long r = point_count[0];
    for (int p = 0; p < v; ++p) {
        if (point_count[p] != r) {
            std::ostringstream msg;
            msg << "point " << p << " occurs in " << point_count[p]
                << " blocks, expected " << r;
            throw UnequalReplication(p, static_cast<int>(point_count[p]), msg.str());
        }
    }

    std::vector<long long> pair_count(static_cast<size_t>(v) * v, 0);
    for (const auto& block : design.blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j) {
                int a = std::min(block[i], block[j]);
                int b = std::max(block[i], block[j]);
                ++pair_count[static_cast<size_t>(a) * v + b];
            }
    long long lambda = pair_count[1];
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            long long c = pair_count[static_cast<size_t>(a) * v + b];
            if (c != lambda) {
                std::ostringstream msg;
                msg << "pair (" << a << "," << b << ") occurs in " << c
                    << " blocks, expected " << lambda;
                throw UnbalancedPair(a, b, static_cast<int>(c), msg.str());
            }
        }

    DesignParams params{lambda, k, r, v, static_cast<long long>(design.blocks.size())};
    // Fisher-type identities follow from the exhaustive checks, but assert anyway.
    if (params.r * (k - 1) != lambda * (v - 1) ||
        params.b * k * (k - 1) != lambda * static_cast<long long>(v) * (v - 1))
        throw UnbalancedPair(0, 0, 0, "parameter identities violated");
    return params;
}

IntersectionProfile intersection_profile(const Design& design) {
    IntersectionProfile profile;
    const auto& blocks = design.blocks;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(blocks[i].begin(), blocks[i].end(),
                                  blocks[j].begin(), blocks[j].end(),
                                  std::back_inserter(common));
            ++profile.counts[static_cast<int>(common.size())];
        }
    return profile;
}

std::optional<int> check_g_design(const Design& design) {
    auto profile = intersection_profile(design);
    std::vector<int> support;
    for (auto& [sz, n] : profile.counts)
        if (n > 0) support.push_back(sz);
    if (support.size() == 1 && support[0] > 0) return support[0];
    if (support.size() == 2 && support[0] == 0 && support[1] > 0) return support[1];
    return std::nullopt;
}

Design stanton_design() {
    // a_i maps to i-1. Blocks 4 and 5 are {a1 a3 a6 a8} and {a1 a3 a5 a7},
    // as pinned by the pair-clique key-ring realization of the same design.
    Design d;
    d.v = 8;
    d.blocks = {
        {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {0, 2, 5, 7},
        {0, 2, 4, 6}, {0, 3, 4, 7}, {0, 3, 5, 6},
        {4, 5, 6, 7}, {2, 3, 6, 7}, {2, 3, 4, 5}, {1, 3, 4, 6},
        {1, 3, 5, 7}, {1, 2, 5, 6}, {1, 2, 4, 7},
    };
    return d;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Design projective_plane(int q) {
    if (!is_prime(q)) throw UnsupportedOrder("order must be prime");
    // Points of PG(2,q) as normalized triples over GF(q); lines likewise,
    // with incidence by a zero dot product.
    std::vector<std::array<int, 3>> points;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) points.push_back({1, y, z});
    for (int z = 0; z < q; ++z) points.push_back({0, 1, z});
    points.push_back({0, 0, 1});

    Design d;
    d.v = static_cast<int>(points.size());
    for (const auto& line : points) {  // lines are self-dual copies of the points
        std::vector<int> block;
        for (int p = 0; p < d.v; ++p) {
            int dot = (line[0] * points[p][0] + line[1] * points[p][1] +
                       line[2] * points[p][2]) % q;
            if (dot == 0) block.push_back(p);
        }
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
    }
    return d;
}

Design affine_plane(int q) {
    if (!is_prime(q)) throw UnsupportedOrder("order must be prime");
    // Points (x,y) of AG(2,q); lines y = mx + c plus verticals x = c.
    auto id = [q](int x, int y) { return x * q + y; };
    Design d;
    d.v = q * q;
    for (int m = 0; m < q; ++m)
        for (int c = 0; c < q; ++c) {
            std::vector<int> block;
            for (int x = 0; x < q; ++x) block.push_back(id(x, (m * x + c) % q));
            std::sort(block.begin(), block.end());
            d.blocks.push_back(std::move(block));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<int> block;
        for (int y = 0; y < q; ++y) block.push_back(id(c, y));
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
    }
    return d;
}

namespace {

struct SearchState {
    long long lambda, k, v, b, r;
    long long budget;
    long long nodes_used = 0;
    std::vector<std::vector<int>> chosen;
    std::vector<long long> point_count;
    std::vector<long long> pair_count;  // v*v upper triangle

    long long& pair(int a, int b) { return pair_count[static_cast<size_t>(a) * v + b]; }

    bool search() {
        if (++nodes_used > budget) throw BudgetExhausted("search budget exhausted");
        if (static_cast<long long>(chosen.size()) == b) return true;

        // Branch on the lexicographically first pair that is still deficient.
        int pa = -1, pb = -1;
        for (int a = 0; a < v && pa < 0; ++a)
            for (int bb = a + 1; bb < v; ++bb)
                if (pair(a, bb) < lambda) {
                    pa = a;
                    pb = bb;
                    break;
                }
        if (pa < 0) return false;  // all pairs full but blocks missing

        std::vector<int> block = {pa, pb};
        return extend(block, pb + 1);
    }

    bool extend(std::vector<int>& block, int next) {
        if (static_cast<long long>(block.size()) == k) {
            for (int p : block)
                if (point_count[p] >= r) return false;
            apply(block, +1);
            chosen.push_back(block);
            if (search()) return true;
            chosen.pop_back();
            apply(block, -1);
            return false;
        }
        for (int p = next; p < v; ++p) {
            if (point_count[p] >= r) continue;
            bool ok = true;
            for (int q : block)
                if (pair(std::min(p, q), std::max(p, q)) >= lambda) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            block.push_back(p);
            if (extend(block, p + 1)) return true;
            block.pop_back();
        }
        return false;
    }

    void apply(const std::vector<int>& block, int delta) {
        for (size_t i = 0; i < block.size(); ++i) {
            point_count[block[i]] += delta;
            for (size_t j = i + 1; j < block.size(); ++j)
                pair(block[i], block[j]) += delta;
        }
    }
};

}  // namespace

std::optional<Design> brute_force_search(long long lambda, long long k, long long v,
                                         long long node_budget) {
    DesignParams params = derive_params(lambda, k, v);
    SearchState st;
    st.lambda = lambda;
    st.k = k;
    st.v = v;
    st.b = params.b;
    st.r = params.r;
    st.budget = node_budget;
    st.point_count.assign(v, 0);
    st.pair_count.assign(static_cast<size_t>(v) * v, 0);
    if (!st.search()) return std::nullopt;
    Design d;
    d.v = static_cast<int>(v);
    d.blocks = std::move(st.chosen);
    return d;
}

KeyAssignment natural_kps(const Design& design) {
    KeyAssignment a;
    a.node_count = static_cast<int>(design.blocks.size());
    a.key_pool.resize(design.v);
    std::iota(a.key_pool.begin(), a.key_pool.end(), 0);
    for (const auto& block : design.blocks)
        a.rings.emplace_back(block.begin(), block.end());
    return a;
}

long long natural_capture_count(const Design& design, const std::set<int>& captured) {
    std::set<int> keys;
    for (int n : captured)
        keys.insert(design.blocks[n].begin(), design.blocks[n].end());
    long long compromised = 0;
    const auto& blocks = design.blocks;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(blocks[i].begin(), blocks[i].end(),
                                  blocks[j].begin(), blocks[j].end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;  // no link between disjoint blocks
            bool all_captured = std::all_of(common.begin(), common.end(),
                                            [&](int p) { return keys.count(p) > 0; });
            if (all_captured) ++compromised;
        }
    return compromised;
}

}  // namespace kps
