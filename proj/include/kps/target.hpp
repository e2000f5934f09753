#ifndef KPS_TARGET_HPP
#define KPS_TARGET_HPP

#include <optional>
#include <string>

#include "kps/graph.hpp"

namespace kps {

/// Deployment constraints: pairs that must, must not, or may communicate
/// directly. The three edge sets are pairwise disjoint.
struct TargetGraph {
    int n = 0;
    Graph must;    // G_T^c
    Graph forbid;  // G_T^u
    Graph may;     // G_T^r

    bool operator==(const TargetGraph&) const = default;

    Graph must_or_may() const;
};

// must = forbid = empty, may complete.
TargetGraph classical_target(int n);

// s groups of b0 nodes; the first tau0 of each group are central. May-edges:
// within-group pairs plus central-central pairs across groups.
TargetGraph hierarchical_target(int s, int b0, int tau0);

// must = K_{2p} minus the matching (i, i+p); forbid = that matching; may empty.
TargetGraph matched_pairs_target(int n_pairs);

struct TargetWitness {
    bool ok = true;
    std::string detail;
};
TargetWitness validate_target(const TargetGraph& t);

}  // namespace kps

#endif
