#ifndef KPS_MAR_HPP
#define KPS_MAR_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "kps/design.hpp"
#include "kps/graph.hpp"
#include "kps/rational.hpp"

namespace kps {

struct MarConfig {
    int c0 = 3;
    CliqueStrategy strategy = CliqueStrategy::GreedyLargest;
    std::vector<std::vector<int>> guided_cliques;  // consumed in order by Guided
    uint64_t seed = 0;
};

struct MarStep {
    int iteration = 0;
    std::vector<int> clique;   // sorted node set
    int retained_key = 0;      // original edge-key identifier
    int removed_count = 0;     // keys replaced (|E(C)| - 1)
};

struct MarTrace {
    long long initial_key_count = 0;  // |E(G_T^c)|
    std::vector<MarStep> steps;
};

struct MarResult {
    KeyAssignment assignment;
    MarTrace trace;
};

// Table-driven reduction: unique key per edge, then collapse cliques of size
// in [3, c0] to a single retained key until no such clique remains (guided
// runs stop when the supplied list is exhausted). The design graph of the
// result equals the input exactly.
MarResult run_mar(const Graph& gc, const MarConfig& config);

// 1 - x*C(c0,2)*ceil(d/(c0-1)) / edge_count, clamped below at 0.
Rational nr_lower_bound(long long d, long long c0, long long edge_count, long long x);

// Edges of gc between uncaptured nodes whose shared keys are all held by
// captured nodes. Throws DesignGraphMismatch if the assignment's design graph
// is not gc.
long long capture_compromise_count(const KeyAssignment& a, const Graph& gc,
                                   const std::set<int>& captured);

// Maximum compromised-link count over all x-subsets. include_incident also
// counts every link with a captured endpoint.
long long worst_case_capture(const KeyAssignment& a, const Graph& gc, long long x,
                             bool include_incident);

// Partition the edges of a regular graph into r-cliques via guided MAR; the
// retained keys become the points of a lambda=1 design whose blocks are the rings.
Design extract_design(const Graph& g, int r);

}  // namespace kps

#endif
