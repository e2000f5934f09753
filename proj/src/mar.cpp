#include "kps/mar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "kps/errors.hpp"
#include "kps/metrics.hpp"

namespace kps {

namespace {

// Smallest clique seed {a, b, w} on the lexicographically first edge lying in
// a triangle, greedily extended up to max_size. Empty when no triangle exists.
std::vector<int> first_triangle_extended(const Graph& residual, int max_size) {
    auto adj = residual.adjacency();
    for (const auto& [a, b] : residual.edges) {
        std::vector<int> common;
        std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(),
                              adj[b].end(), std::back_inserter(common));
        if (common.empty()) continue;
        std::vector<int> clique = {a, b, common[0]};
        while (static_cast<int>(clique.size()) < max_size) {
            int pick = -1;
            for (int cand : adj[a]) {
                if (std::find(clique.begin(), clique.end(), cand) != clique.end()) continue;
                bool ok = true;
                for (int m : clique)
                    if (m != a && !adj[m].count(cand)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    pick = cand;
                    break;
                }
            }
            if (pick < 0) break;
            clique.push_back(pick);
        }
        std::sort(clique.begin(), clique.end());
        return clique;
    }
    return {};
}

std::vector<int> next_clique(const Graph& residual, const MarConfig& config,
                             std::vector<std::vector<int>>& guided) {
    switch (config.strategy) {
        case CliqueStrategy::Guided: {
            while (!guided.empty()) {
                auto clique = guided.front();
                guided.erase(guided.begin());
                if (clique.size() < 3) continue;  // nothing to collapse
                std::sort(clique.begin(), clique.end());
                for (size_t i = 0; i < clique.size(); ++i)
                    for (size_t j = i + 1; j < clique.size(); ++j)
                        if (!residual.has_edge(clique[i], clique[j]))
                            throw PreconditionError(
                                "guided clique not present in residual graph");
                return clique;
            }
            return {};
        }
        case CliqueStrategy::GreedyLargest: {
            if (config.c0 < 3 || residual.edges.empty()) return {};
            auto found = find_clique(residual, config.c0, CliqueStrategy::GreedyLargest);
            if (found && found->size() >= 3) return *found;
            return first_triangle_extended(residual, config.c0);
        }
        case CliqueStrategy::GreedyEdge:
            if (config.c0 < 3) return {};
            return first_triangle_extended(residual, config.c0);
    }
    return {};
}

}  // namespace

MarResult run_mar(const Graph& gc, const MarConfig& config) {
    if (config.c0 < 2) throw PreconditionError("c0 must be >= 2");
    MarResult result;
    result.trace.initial_key_count = gc.edge_count();

    std::map<Edge, int> edge_key;
    int next_key = 0;
    for (const auto& e : gc.edges) edge_key[e] = next_key++;

    std::vector<std::set<int>> rings(gc.n);
    for (const auto& [e, k] : edge_key) {
        rings[e.first].insert(k);
        rings[e.second].insert(k);
    }

    Graph residual = gc;
    auto guided = config.guided_cliques;
    int iteration = 0;
    while (true) {
        auto clique = next_clique(residual, config, guided);
        if (clique.empty()) break;
        if (static_cast<int>(clique.size()) > config.c0 || clique.size() < 3)
            throw PreconditionError("strategy produced a clique outside [3, c0]");
        ++iteration;

        std::set<int> removed;
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) {
                Edge e{clique[i], clique[j]};
                removed.insert(edge_key.at(e));
                residual.edges.erase(e);
            }
        int retained = *removed.begin();
        for (int m : clique) {
            for (int k : removed) rings[m].erase(k);
            rings[m].insert(retained);
        }
        result.trace.steps.push_back({iteration, clique, retained,
                                      static_cast<int>(removed.size()) - 1});
    }

    // Compact surviving keys to dense indices.
    std::set<int> surviving;
    for (const auto& ring : rings) surviving.insert(ring.begin(), ring.end());
    std::map<int, int> dense;
    for (int k : surviving) dense[k] = static_cast<int>(dense.size());

    result.assignment.node_count = gc.n;
    result.assignment.key_pool.resize(surviving.size());
    std::iota(result.assignment.key_pool.begin(), result.assignment.key_pool.end(), 0);
    for (const auto& ring : rings) {
        std::set<int> remapped;
        for (int k : ring) remapped.insert(dense.at(k));
        result.assignment.rings.push_back(std::move(remapped));
    }
    return result;
}

Rational nr_lower_bound(long long d, long long c0, long long edge_count, long long x) {
    if (d < 1 || c0 < 2 || edge_count < 1) throw PreconditionError("bad bound parameters");
    long long ceil_term = (d + c0 - 2) / (c0 - 1);
    Rational bound = Rational(1) - Rational(Int(x) * binom(c0, 2) * ceil_term, Int(edge_count));
    return bound < Rational(0) ? Rational(0) : bound;
}

namespace {

long long compromised_external(const KeyAssignment& a, const Graph& gc,
                               const std::set<int>& captured) {
    std::set<int> keys;
    for (int n : captured) keys.insert(a.rings[n].begin(), a.rings[n].end());
    long long count = 0;
    for (const auto& [i, j] : gc.edges) {
        if (captured.count(i) || captured.count(j)) continue;
        std::vector<int> shared;
        std::set_intersection(a.rings[i].begin(), a.rings[i].end(), a.rings[j].begin(),
                              a.rings[j].end(), std::back_inserter(shared));
        if (!shared.empty() &&
            std::all_of(shared.begin(), shared.end(),
                        [&](int k) { return keys.count(k) > 0; }))
            ++count;
    }
    return count;
}

}  // namespace

long long capture_compromise_count(const KeyAssignment& a, const Graph& gc,
                                   const std::set<int>& captured) {
    if (kps_design_graph(a) != gc)
        throw DesignGraphMismatch("assignment design graph differs from gc");
    return compromised_external(a, gc, captured);
}

long long worst_case_capture(const KeyAssignment& a, const Graph& gc, long long x,
                             bool include_incident) {
    if (x < 1) throw PreconditionError("x must be positive");
    if (binom(gc.n, x) > kExactEnumerationCap)
        throw ExactModeTooLarge("capture-set enumeration exceeds cap");

    long long worst = 0;
    std::vector<int> idx(x);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == x) {
            std::set<int> captured(idx.begin(), idx.end());
            long long count = compromised_external(a, gc, captured);
            if (include_incident)
                for (const auto& [i, j] : gc.edges)
                    if (captured.count(i) || captured.count(j)) ++count;
            worst = std::max(worst, count);
            return;
        }
        for (int i = start; i < gc.n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return worst;
}

namespace {

struct CliquePartition {
    const Graph& g;
    int r;
    long long budget = 20'000'000;
    std::vector<std::set<int>> adj;
    std::set<Edge> uncovered;
    std::vector<std::vector<int>> cliques;

    bool solve() {
        if (--budget < 0) throw NotDecomposable("clique-partition budget exhausted");
        if (uncovered.empty()) return true;
        auto [a, b] = *uncovered.begin();
        std::vector<int> clique = {a, b};
        return extend(clique);
    }

    bool extend(std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) == r) {
            std::vector<Edge> edges;
            for (size_t i = 0; i < clique.size(); ++i)
                for (size_t j = i + 1; j < clique.size(); ++j)
                    edges.push_back({std::min(clique[i], clique[j]),
                                     std::max(clique[i], clique[j])});
            for (const auto& e : edges) uncovered.erase(e);
            cliques.push_back(clique);
            if (solve()) return true;
            cliques.pop_back();
            for (const auto& e : edges) uncovered.insert(e);
            return false;
        }
        for (int cand = clique.back() + 1; cand < g.n; ++cand) {
            bool ok = true;
            for (int m : clique) {
                Edge e{std::min(m, cand), std::max(m, cand)};
                if (!adj[m].count(cand) || !uncovered.count(e)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            clique.push_back(cand);
            if (extend(clique)) return true;
            clique.pop_back();
        }
        return false;
    }
};

}  // namespace

Design extract_design(const Graph& g, int r) {
    if (r < 2) throw PreconditionError("r must be >= 2");
    long long e = g.edge_count();
    long long clique_edges = static_cast<long long>(r) * (r - 1) / 2;
    if (e == 0 || e % clique_edges != 0)
        throw NotDecomposable("edge count not divisible into r-cliques");
    long long v = e / clique_edges;
    long long b = g.n;
    for (int d : g.degrees())
        if (d % (r - 1) != 0)
            throw NotDecomposable("degree not divisible by r-1");
    // rv/b = (v-1)/r + 1 must be a natural number (the block size k).
    if ((r * v) % b != 0 || (r * v / b) != (v - 1) / r + 1 || (v - 1) % r != 0)
        throw NotDecomposable("parameters admit no lambda=1 design");

    CliquePartition part{g, r};
    part.adj = g.adjacency();
    part.uncovered = g.edges;
    if (!part.solve()) throw NotDecomposable("no r-clique edge partition found");

    MarConfig config;
    config.c0 = r;
    config.strategy = CliqueStrategy::Guided;
    config.guided_cliques = part.cliques;
    MarResult mar = run_mar(g, config);

    Design design;
    design.v = static_cast<int>(mar.assignment.key_pool.size());
    for (const auto& ring : mar.assignment.rings)
        design.blocks.emplace_back(ring.begin(), ring.end());
    return design;
}

}  // namespace kps
