#ifndef KPS_DESIGN_HPP
#define KPS_DESIGN_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace kps {

/// Parameter quintuple of a balanced incomplete block design.
struct DesignParams {
    long long lambda = 0;  // pair replication
    long long k = 0;       // block size
    long long r = 0;       // point replication
    long long v = 0;       // number of points
    long long b = 0;       // number of blocks

    bool operator==(const DesignParams&) const = default;
};

/// A block design: v points (0..v-1) and an ordered list of blocks,
/// each stored as a sorted point list.
struct Design {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const Design&) const = default;
};

/// Multiset of |B_i ∩ B_j| over all unordered block pairs.
struct IntersectionProfile {
    std::map<int, long long> counts;  // intersection size -> multiplicity

    long long total() const {
        long long t = 0;
        for (auto& [sz, n] : counts) t += n;
        return t;
    }
};

/// A key pre-distribution artifact: one key ring per node over a shared pool.
struct KeyAssignment {
    int node_count = 0;
    std::vector<int> key_pool;          // sorted key identifiers
    std::vector<std::set<int>> rings;   // one per node

    bool operator==(const KeyAssignment&) const = default;
};

// r = lambda(v-1)/(k-1), b = lambda*v(v-1)/(k(k-1)); throws NonIntegralParameters.
DesignParams derive_params(long long lambda, long long k, long long v);

// Exhaustive check of all three BIBD invariants; returns the verified quintuple.
DesignParams validate_bibd(const Design& design);

IntersectionProfile intersection_profile(const Design& design);

// g if the profile support is {g} or {0,g} with g > 0.
std::optional<int> check_g_design(const Design& design);

// The 8-point, 14-block g=2 design used throughout, in citation-stable block order.
Design stanton_design();

// Catalog constructions over prime q.
Design projective_plane(int q);
Design affine_plane(int q);

// Backtracking search with pair-count pruning. Deterministic. Throws
// BudgetExhausted when the node budget runs out (never claims nonexistence).
std::optional<Design> brute_force_search(long long lambda, long long k, long long v,
                                         long long node_budget);

// Keys = points, ring of node i = block i.
KeyAssignment natural_kps(const Design& design);

// Number of block pairs whose (nonempty) intersection lies inside the union
// of the captured blocks.
long long natural_capture_count(const Design& design, const std::set<int>& captured);

}  // namespace kps

#endif
