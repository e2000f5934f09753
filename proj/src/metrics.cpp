#include "kps/metrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "kps/errors.hpp"

namespace kps {

namespace {

std::set<int> shared_keys(const KeyAssignment& a, int i, int j) {
    std::set<int> common;
    std::set_intersection(a.rings[i].begin(), a.rings[i].end(), a.rings[j].begin(),
                          a.rings[j].end(), std::inserter(common, common.begin()));
    return common;
}

}  // namespace

Graph kps_design_graph(const KeyAssignment& a) {
    Graph g;
    g.n = a.node_count;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!shared_keys(a, i, j).empty()) g.edges.insert({i, j});
    return g;
}

Rational dcc(const KeyAssignment& a, const TargetGraph& t) {
    if (a.node_count != t.n) throw PreconditionError("node counts differ");
    Graph eval = t.must_or_may();
    if (eval.edges.empty()) throw EmptyEvaluationSet("must ∪ may has no edges");
    Graph gd = kps_design_graph(a);
    long long covered = 0;
    for (const auto& e : eval.edges)
        if (gd.edges.count(e)) ++covered;
    return Rational(covered, eval.edge_count());
}

std::optional<Rational> dicc(const KeyAssignment& a, const TargetGraph& t) {
    if (a.node_count != t.n) throw PreconditionError("node counts differ");
    if (t.must.edges.empty()) return std::nullopt;
    Graph gd = kps_design_graph(a);
    long long covered = 0;
    for (const auto& e : t.must.edges)
        if (gd.edges.count(e)) ++covered;
    return Rational(covered, t.must.edge_count());
}

ExtRational apl(const KeyAssignment& a, const TargetGraph& t) {
    if (a.node_count != t.n) throw PreconditionError("node counts differ");
    Graph eval = t.must_or_may();
    if (eval.edges.empty()) throw EmptyEvaluationSet("must ∪ may has no edges");
    Graph gd = kps_design_graph(a);

    Graph h;
    h.n = t.n;
    for (const auto& e : eval.edges)
        if (gd.edges.count(e)) h.edges.insert(e);

    auto reach = all_pairs_shortest_paths(eval);
    auto dist = all_pairs_shortest_paths(h);
    Int total = 0;
    long long pairs = 0;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j) {
            if (reach[i][j] == kUnreachable) continue;  // not an evaluated pair
            if (dist[i][j] == kUnreachable) return std::nullopt;
            total += dist[i][j];
            ++pairs;
        }
    if (pairs == 0) throw EmptyEvaluationSet("no connected pair to evaluate");
    return Rational(total, Int(pairs));
}

Rational dcc_analytic(long long k, long long v) {
    derive_params(1, k, v);
    return Rational(Int((v - k) * k * k), Int(v * (v - 1) - k * (k - 1)));
}

Rational apl_analytic(const Rational& dcc_value) {
    if (dcc_value < Rational(0) || dcc_value > Rational(1))
        throw PreconditionError("dcc must lie in [0,1]");
    return Rational(2) - dcc_value;
}

Rational nr_analytic(long long b, long long r, long long x) {
    if (r > b || x > b) throw PreconditionError("need r <= b and x <= b");
    if (x > b - r) return Rational(0);
    return Rational(binom(b - r, x), binom(b, x));
}

namespace {

struct NrContext {
    const KeyAssignment& a;
    std::set<int> pre_compromised;          // keys on forbidden design-graph links
    std::vector<std::pair<Edge, std::set<int>>> numerator_links;  // in must∪may∪forbid
    std::vector<Edge> denominator_links;    // in must∪may only
};

NrContext make_context(const KeyAssignment& a, const TargetGraph& t) {
    NrContext ctx{a};
    Graph gd = kps_design_graph(a);
    for (const auto& e : gd.edges) {
        if (t.forbid.edges.count(e)) {
            auto keys = shared_keys(a, e.first, e.second);
            ctx.pre_compromised.insert(keys.begin(), keys.end());
        }
        bool in_eval = t.must.edges.count(e) || t.may.edges.count(e);
        if (in_eval) ctx.denominator_links.push_back(e);
        if (in_eval || t.forbid.edges.count(e))
            ctx.numerator_links.push_back({e, shared_keys(a, e.first, e.second)});
    }
    return ctx;
}

// NR for one concrete capture set. Links incident to a captured node count as
// compromised in the numerator; the denominator holds only external links.
Rational nr_for_set(const NrContext& ctx, const std::set<int>& captured) {
    std::set<int> keys = ctx.pre_compromised;
    for (int n : captured)
        keys.insert(ctx.a.rings[n].begin(), ctx.a.rings[n].end());

    long long denom = 0;
    for (const auto& e : ctx.denominator_links)
        if (!captured.count(e.first) && !captured.count(e.second)) ++denom;
    if (denom == 0) throw EmptyEvaluationSet("no external link to evaluate");

    long long num = 0;
    for (const auto& [e, shared] : ctx.numerator_links) {
        if (captured.count(e.first) && captured.count(e.second)) continue;
        bool compromised = std::all_of(shared.begin(), shared.end(),
                                       [&](int k) { return keys.count(k) > 0; });
        if (compromised) ++num;
    }
    Rational nr = Rational(1) - Rational(num, denom);
    return nr < Rational(0) ? Rational(0) : nr;
}

}  // namespace

Rational nr_empirical(const KeyAssignment& a, const TargetGraph& t,
                      const CaptureModel& model) {
    if (a.node_count != t.n) throw PreconditionError("node counts differ");
    if (model.x > a.node_count) throw PreconditionError("cannot capture more nodes than exist");
    NrContext ctx = make_context(a, t);

    switch (model.mode) {
        case CaptureModel::Mode::Explicit:
            return nr_for_set(ctx, model.explicit_set);
        case CaptureModel::Mode::Exact: {
            if (binom(a.node_count, model.x) > kExactEnumerationCap)
                throw ExactModeTooLarge("capture-set enumeration exceeds cap");
            Rational total(0);
            long long sets = 0;
            std::vector<int> idx(model.x);
            // enumerate x-subsets in lexicographic order
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == model.x) {
                    std::set<int> s(idx.begin(), idx.begin() + depth);
                    total += nr_for_set(ctx, s);
                    ++sets;
                    return;
                }
                for (int i = start; i < a.node_count; ++i) {
                    idx[depth] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
            return total / Rational(sets);
        }
        case CaptureModel::Mode::MonteCarlo: {
            if (model.trials < 1) throw PreconditionError("need at least one trial");
            std::mt19937_64 rng(model.seed);
            Rational total(0);
            std::vector<int> nodes(a.node_count);
            std::iota(nodes.begin(), nodes.end(), 0);
            for (long long trial = 0; trial < model.trials; ++trial) {
                // partial Fisher-Yates draw of x distinct nodes
                for (long long i = 0; i < model.x; ++i) {
                    std::uniform_int_distribution<int> pick(static_cast<int>(i),
                                                           a.node_count - 1);
                    std::swap(nodes[i], nodes[pick(rng)]);
                }
                std::set<int> s(nodes.begin(), nodes.begin() + model.x);
                total += nr_for_set(ctx, s);
            }
            return total / Rational(model.trials);
        }
    }
    throw PreconditionError("unknown capture mode");
}

std::pair<long long, Rational> storage_overhead(const KeyAssignment& a) {
    long long max_size = 0;
    Int total = 0;
    for (const auto& ring : a.rings) {
        max_size = std::max(max_size, static_cast<long long>(ring.size()));
        total += static_cast<long long>(ring.size());
    }
    if (a.rings.empty()) return {0, Rational(0)};
    return {max_size, Rational(total, Int(a.rings.size()))};
}

long long network_scalability(const KeyAssignment& a) {
    return static_cast<long long>(a.key_pool.size());
}

MetricsReport evaluate(const KeyAssignment& a, const TargetGraph& t,
                       const std::vector<long long>& capture_counts,
                       const EvalMode& mode) {
    MetricsReport report;
    report.dcc = dcc(a, t);
    report.dicc = dicc(a, t);
    report.apl = apl(a, t);
    auto [so_max, so_mean] = storage_overhead(a);
    report.so_max = so_max;
    report.so_mean = so_mean;
    report.ns = network_scalability(a);
    report.seed = mode.seed;
    for (long long x : capture_counts) {
        CaptureModel model = mode.monte_carlo
                                 ? CaptureModel::monte_carlo(x, mode.trials, mode.seed)
                                 : CaptureModel::exact(x);
        report.nr.push_back({x, nr_empirical(a, t, model)});
    }
    return report;
}

}  // namespace kps
