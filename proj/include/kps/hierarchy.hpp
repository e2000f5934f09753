#ifndef KPS_HIERARCHY_HPP
#define KPS_HIERARCHY_HPP

#include <vector>

#include "kps/design.hpp"
#include "kps/metrics.hpp"
#include "kps/target.hpp"

namespace kps {

/// Group scheme: per-group lambda=1 designs with disjoint key pools, plus a
/// shared design over all central nodes.
struct GroupPlan {
    int s = 2;     // group count
    int b0 = 1;    // nodes per group
    int tau0 = 1;  // central nodes per group (the first tau0 indices)
    Design group_design;
    Design central_design;
};

// Node j of group g receives block j of a fresh copy of the group design;
// central nodes additionally receive one block of the central design.
KeyAssignment build_group_kps(const GroupPlan& plan);

// Node j gets block j from a single design copy.
KeyAssignment build_classical_kps(int n, const Design& design);

struct ComparisonReport {
    MetricsReport graph_based;
    MetricsReport classical;
    Rational dcc_delta;
    ExtRational apl_delta;  // absent when either side is infinite
    Rational so_mean_delta;
    long long so_max_delta = 0;
    long long ns_delta = 0;
    std::vector<std::pair<long long, Rational>> nr_delta;
};

ComparisonReport compare(const KeyAssignment& graph_based, const KeyAssignment& classical,
                         const TargetGraph& t, const std::vector<long long>& x_list,
                         const EvalMode& mode = {});

}  // namespace kps

#endif
