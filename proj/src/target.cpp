#include "kps/target.hpp"

#include <sstream>

#include "kps/errors.hpp"

namespace kps {

Graph TargetGraph::must_or_may() const {
    Graph g;
    g.n = n;
    g.edges = must.edges;
    g.edges.insert(may.edges.begin(), may.edges.end());
    return g;
}

TargetGraph classical_target(int n) {
    if (n < 2) throw PreconditionError("need at least 2 nodes");
    TargetGraph t;
    t.n = n;
    t.must.n = t.forbid.n = n;
    t.may = complete_graph(n);
    return t;
}

TargetGraph hierarchical_target(int s, int b0, int tau0) {
    if (s < 2 || b0 < 1 || tau0 < 0 || tau0 > b0)
        throw PreconditionError("need s >= 2, b0 >= 1, 0 <= tau0 <= b0");
    int n = s * b0;
    TargetGraph t;
    t.n = n;
    t.must.n = t.forbid.n = t.may.n = n;
    auto central = [&](int m) { return (m % b0) < tau0; };
    for (int m = 0; m < n; ++m)
        for (int k = m + 1; k < n; ++k) {
            bool same_group = m / b0 == k / b0;
            if (same_group || (central(m) && central(k))) t.may.add_edge(m, k);
        }
    return t;
}

TargetGraph matched_pairs_target(int n_pairs) {
    if (n_pairs < 1) throw PreconditionError("need at least one pair");
    int n = 2 * n_pairs;
    TargetGraph t;
    t.n = n;
    t.must.n = t.forbid.n = t.may.n = n;
    for (int i = 0; i < n_pairs; ++i) t.forbid.add_edge(i, i + n_pairs);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (b - a != n_pairs) t.must.add_edge(a, b);
    return t;
}

TargetWitness validate_target(const TargetGraph& t) {
    TargetWitness w;
    if (t.must.n != t.n || t.forbid.n != t.n || t.may.n != t.n) {
        w.ok = false;
        w.detail = "node counts disagree";
        return w;
    }
    auto overlap = [&](const Graph& a, const Graph& b, const char* names) {
        for (const auto& e : a.edges)
            if (b.edges.count(e)) {
                w.ok = false;
                std::ostringstream msg;
                msg << "edge (" << e.first << "," << e.second << ") in both " << names;
                w.detail = msg.str();
                return true;
            }
        return false;
    };
    if (overlap(t.must, t.forbid, "must and forbid")) return w;
    if (overlap(t.must, t.may, "must and may")) return w;
    if (overlap(t.forbid, t.may, "forbid and may")) return w;
    return w;
}

}  // namespace kps
