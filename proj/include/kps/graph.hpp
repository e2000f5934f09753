#ifndef KPS_GRAPH_HPP
#define KPS_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kps/design.hpp"

namespace kps {

using Edge = std::pair<int, int>;  // always stored with first < second

/// Undirected simple graph over dense node indices.
struct Graph {
    int n = 0;
    std::set<Edge> edges;

    bool operator==(const Graph&) const = default;

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    long long edge_count() const { return static_cast<long long>(edges.size()); }
    std::vector<std::set<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
};

Graph complete_graph(int n);

/// A list of cliques intended to edge-partition a host graph.
struct CliqueDecomposition {
    int host_node_count = 0;
    std::vector<std::vector<int>> cliques;  // each sorted
};

struct SrgCertificate {
    int b = 0;  // node count
    int d = 0;  // degree
    int t = 0;  // common neighbors of adjacent pairs
    std::optional<int> u;  // common neighbors of non-adjacent pairs; absent when degenerate
};

// Node per block; edge iff the blocks intersect.
Graph design_graph(const Design& design);

// Certificate iff strongly regular. u is absent for graphs with no
// non-adjacent pair (complete graphs).
std::optional<SrgCertificate> check_srg(const Graph& graph);

// Closed-form srg parameters for a lambda=1 design graph.
struct SrgParams {
    long long d, t, u;
};
SrgParams srg_params_lambda1(long long k, long long v);

// One clique per point pair (g=2 designs, lambda >= 2).
CliqueDecomposition pair_clique_decomposition(const Design& design);

// One clique per point (lambda=1 designs).
CliqueDecomposition point_clique_decomposition(const Design& design);

struct DecompositionWitness {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};
DecompositionWitness verify_decomposition(const Graph& graph,
                                          const CliqueDecomposition& decomp);

enum class CliqueStrategy { GreedyLargest, GreedyEdge, Guided };

// Clique of size in [2, max_size], or absent on an edgeless graph.
// Guided pops from the caller-supplied list. Deterministic; ties by lowest index.
std::optional<std::vector<int>> find_clique(
    const Graph& graph, int max_size, CliqueStrategy strategy,
    std::vector<std::vector<int>>* guided_list = nullptr);

inline constexpr int kUnreachable = -1;

// BFS distances; kUnreachable marks disconnected pairs.
std::vector<std::vector<int>> all_pairs_shortest_paths(const Graph& graph);

}  // namespace kps

#endif
