#include "kps/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kps/errors.hpp"

namespace kps {

KeyAssignment build_group_kps(const GroupPlan& plan) {
    if (plan.s < 2 || plan.tau0 < 1 || plan.tau0 > plan.b0)
        throw PreconditionError("need s >= 2 and 1 <= tau0 <= b0");
    if (static_cast<int>(plan.group_design.blocks.size()) < plan.b0)
        throw InsufficientBlocks("group design has fewer blocks than nodes per group");
    if (static_cast<int>(plan.central_design.blocks.size()) < plan.s * plan.tau0)
        throw InsufficientBlocks("central design has fewer blocks than central nodes");

    KeyAssignment a;
    a.node_count = plan.s * plan.b0;
    a.rings.resize(a.node_count);

    // Disjoint pool copies: group g occupies [g*v_group, (g+1)*v_group), the
    // central copy sits after all group copies.
    int v_group = plan.group_design.v;
    int central_base = plan.s * v_group;
    int central_index = 0;
    for (int m = 0; m < a.node_count; ++m) {
        int group = m / plan.b0;
        int local = m % plan.b0;
        for (int p : plan.group_design.blocks[local])
            a.rings[m].insert(group * v_group + p);
        if (local < plan.tau0) {
            for (int p : plan.central_design.blocks[central_index])
                a.rings[m].insert(central_base + p);
            ++central_index;
        }
    }
    // The full pools stay in place even when surplus blocks go unused, so
    // ns = s * v_group + v_central by construction.
    a.key_pool.resize(central_base + plan.central_design.v);
    std::iota(a.key_pool.begin(), a.key_pool.end(), 0);
    return a;
}

KeyAssignment build_classical_kps(int n, const Design& design) {
    if (static_cast<int>(design.blocks.size()) < n)
        throw InsufficientBlocks("design has fewer blocks than nodes");
    KeyAssignment a;
    a.node_count = n;
    for (int j = 0; j < n; ++j)
        a.rings.emplace_back(design.blocks[j].begin(), design.blocks[j].end());
    a.key_pool.resize(design.v);
    std::iota(a.key_pool.begin(), a.key_pool.end(), 0);
    return a;
}

ComparisonReport compare(const KeyAssignment& graph_based, const KeyAssignment& classical,
                         const TargetGraph& t, const std::vector<long long>& x_list,
                         const EvalMode& mode) {
    if (graph_based.node_count != classical.node_count)
        throw PreconditionError("node counts differ");
    ComparisonReport report;
    report.graph_based = evaluate(graph_based, t, x_list, mode);
    report.classical = evaluate(classical, t, x_list, mode);
    report.dcc_delta = report.graph_based.dcc - report.classical.dcc;
    if (report.graph_based.apl && report.classical.apl)
        report.apl_delta = *report.graph_based.apl - *report.classical.apl;
    report.so_mean_delta = report.graph_based.so_mean - report.classical.so_mean;
    report.so_max_delta = report.graph_based.so_max - report.classical.so_max;
    report.ns_delta = report.graph_based.ns - report.classical.ns;
    for (size_t i = 0; i < x_list.size(); ++i)
        report.nr_delta.push_back({x_list[i], report.graph_based.nr[i].second -
                                                  report.classical.nr[i].second});
    return report;
}

}  // namespace kps
