#include "kps/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "kps/errors.hpp"

namespace kps {

void Graph::add_edge(int a, int b) {
    if (a == b) throw PreconditionError("self-loop");
    if (a < 0 || b < 0 || a >= n || b >= n) throw PreconditionError("node index out of range");
    edges.insert({std::min(a, b), std::max(a, b)});
}

bool Graph::has_edge(int a, int b) const {
    return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<std::set<int>> Graph::adjacency() const {
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

int Graph::max_degree() const {
    int best = 0;
    for (int d : degrees()) best = std::max(best, d);
    return best;
}

Graph complete_graph(int n) {
    Graph g;
    g.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.edges.insert({a, b});
    return g;
}

Graph design_graph(const Design& design) {
    Graph g;
    g.n = static_cast<int>(design.blocks.size());
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            std::vector<int> common;
            std::set_intersection(design.blocks[i].begin(), design.blocks[i].end(),
                                  design.blocks[j].begin(), design.blocks[j].end(),
                                  std::back_inserter(common));
            if (!common.empty()) g.edges.insert({i, j});
        }
    return g;
}

std::optional<SrgCertificate> check_srg(const Graph& graph) {
    if (graph.n < 2) throw PreconditionError("need at least 2 nodes");
    auto deg = graph.degrees();
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;

    auto adj = graph.adjacency();
    std::optional<int> t, u;
    bool has_nonadjacent = false;
    for (int a = 0; a < graph.n; ++a)
        for (int b = a + 1; b < graph.n; ++b) {
            std::vector<int> common;
            std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(),
                                  adj[b].end(), std::back_inserter(common));
            int c = static_cast<int>(common.size());
            if (graph.has_edge(a, b)) {
                if (t && *t != c) return std::nullopt;
                t = c;
            } else {
                has_nonadjacent = true;
                if (u && *u != c) return std::nullopt;
                u = c;
            }
        }
    SrgCertificate cert;
    cert.b = graph.n;
    cert.d = deg[0];
    cert.t = t.value_or(0);
    if (has_nonadjacent) cert.u = u;
    return cert;
}

SrgParams srg_params_lambda1(long long k, long long v) {
    derive_params(1, k, v);  // propagates NonIntegralParameters
    SrgParams p;
    p.d = k * (v - k) / (k - 1);
    p.t = (v - 1) / (k - 1) - 2 + (k - 1) * (k - 1);
    p.u = k * k;
    return p;
}

CliqueDecomposition pair_clique_decomposition(const Design& design) {
    DesignParams params = validate_bibd(design);
    auto g = check_g_design(design);
    if (!g || *g != 2 || params.lambda < 2)
        throw NotG2Design("need a g-design with g=2 and lambda >= 2");
    if (params.k * (params.k - 1) != params.lambda * params.v * (params.v - 1) / params.b)
        throw NotG2Design("block-count identity violated");

    CliqueDecomposition decomp;
    decomp.host_node_count = static_cast<int>(design.blocks.size());
    for (int a = 0; a < design.v; ++a)
        for (int b = a + 1; b < design.v; ++b) {
            std::vector<int> clique;
            for (size_t i = 0; i < design.blocks.size(); ++i) {
                const auto& blk = design.blocks[i];
                if (std::binary_search(blk.begin(), blk.end(), a) &&
                    std::binary_search(blk.begin(), blk.end(), b))
                    clique.push_back(static_cast<int>(i));
            }
            if (clique.size() >= 2) decomp.cliques.push_back(std::move(clique));
        }
    return decomp;
}

CliqueDecomposition point_clique_decomposition(const Design& design) {
    DesignParams params = validate_bibd(design);
    if (params.lambda != 1) throw NotSteiner("need lambda = 1");
    // Identity rv/b = (v-1)/r + 1 must hold for the block size to work out.
    if (params.r * params.v * params.r != params.b * ((params.v - 1) + params.r))
        throw NotSteiner("regular-graph identity violated");

    CliqueDecomposition decomp;
    decomp.host_node_count = static_cast<int>(design.blocks.size());
    for (int p = 0; p < design.v; ++p) {
        std::vector<int> clique;
        for (size_t i = 0; i < design.blocks.size(); ++i)
            if (std::binary_search(design.blocks[i].begin(), design.blocks[i].end(), p))
                clique.push_back(static_cast<int>(i));
        decomp.cliques.push_back(std::move(clique));
    }
    return decomp;
}

DecompositionWitness verify_decomposition(const Graph& graph,
                                          const CliqueDecomposition& decomp) {
    DecompositionWitness w;
    std::set<Edge> seen;
    for (size_t c = 0; c < decomp.cliques.size(); ++c) {
        const auto& clique = decomp.cliques[c];
        if (clique.size() < 2) {
            w.ok = false;
            std::ostringstream msg;
            msg << "clique " << c << " has size " << clique.size();
            w.detail = msg.str();
            return w;
        }
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) {
                int a = std::min(clique[i], clique[j]);
                int b = std::max(clique[i], clique[j]);
                if (a < 0 || b >= graph.n) throw PreconditionError("clique node out of range");
                std::ostringstream msg;
                if (!graph.has_edge(a, b)) {
                    w.ok = false;
                    msg << "clique " << c << " not complete: missing edge (" << a << "," << b << ")";
                    w.detail = msg.str();
                    return w;
                }
                if (!seen.insert({a, b}).second) {
                    w.ok = false;
                    msg << "edge (" << a << "," << b << ") covered twice";
                    w.detail = msg.str();
                    return w;
                }
            }
    }
    if (seen != graph.edges) {
        w.ok = false;
        for (const auto& e : graph.edges)
            if (!seen.count(e)) {
                std::ostringstream msg;
                msg << "edge (" << e.first << "," << e.second << ") uncovered";
                w.detail = msg.str();
                break;
            }
    }
    return w;
}

std::optional<std::vector<int>> find_clique(const Graph& graph, int max_size,
                                            CliqueStrategy strategy,
                                            std::vector<std::vector<int>>* guided_list) {
    if (max_size < 2) throw PreconditionError("max_size must be >= 2");
    if (graph.edges.empty() && strategy != CliqueStrategy::Guided) return std::nullopt;
    auto adj = graph.adjacency();

    auto extend = [&](std::vector<int> clique) {
        while (static_cast<int>(clique.size()) < max_size) {
            int pick = -1;
            for (int cand = 0; cand < graph.n; ++cand) {
                if (std::find(clique.begin(), clique.end(), cand) != clique.end()) continue;
                bool ok = true;
                for (int m : clique)
                    if (!adj[m].count(cand)) {
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
    };

    switch (strategy) {
        case CliqueStrategy::GreedyLargest: {
            auto deg = graph.degrees();
            int start = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());
            int mate = *adj[start].begin();
            return extend({start, mate});
        }
        case CliqueStrategy::GreedyEdge: {
            auto [a, b] = *graph.edges.begin();
            return extend({a, b});
        }
        case CliqueStrategy::Guided: {
            if (!guided_list || guided_list->empty()) return std::nullopt;
            auto clique = guided_list->front();
            guided_list->erase(guided_list->begin());
            std::sort(clique.begin(), clique.end());
            return clique;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> all_pairs_shortest_paths(const Graph& graph) {
    auto adj = graph.adjacency();
    std::vector<std::vector<int>> dist(graph.n, std::vector<int>(graph.n, kUnreachable));
    for (int s = 0; s < graph.n; ++s) {
        dist[s][s] = 0;
        std::deque<int> queue = {s};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nb : adj[cur])
                if (dist[s][nb] == kUnreachable) {
                    dist[s][nb] = dist[s][cur] + 1;
                    queue.push_back(nb);
                }
        }
    }
    return dist;
}

}  // namespace kps
