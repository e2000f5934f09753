#ifndef KPS_METRICS_HPP
#define KPS_METRICS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "kps/design.hpp"
#include "kps/graph.hpp"
#include "kps/rational.hpp"
#include "kps/target.hpp"

namespace kps {

struct MetricsReport {
    Rational dcc;
    std::optional<Rational> dicc;
    ExtRational apl;              // absent = infinite
    long long so_max = 0;
    Rational so_mean;
    long long ns = 0;             // key-pool size
    std::vector<std::pair<long long, Rational>> nr;  // (x, NR_x)
    uint64_t seed = 0;            // generator seed used for monte-carlo NR
};

struct CaptureModel {
    enum class Mode { Exact, MonteCarlo, Explicit };
    Mode mode = Mode::Exact;
    long long x = 0;
    long long trials = 10000;
    uint64_t seed = 0;
    std::set<int> explicit_set;

    static CaptureModel exact(long long x) { return {Mode::Exact, x}; }
    static CaptureModel monte_carlo(long long x, long long trials, uint64_t seed) {
        return {Mode::MonteCarlo, x, trials, seed};
    }
    static CaptureModel explicit_capture(std::set<int> s) {
        CaptureModel m;
        m.mode = Mode::Explicit;
        m.x = static_cast<long long>(s.size());
        m.explicit_set = std::move(s);
        return m;
    }
};

inline constexpr long long kExactEnumerationCap = 1'000'000;

// Edge (i,j) iff rings i and j intersect.
Graph kps_design_graph(const KeyAssignment& a);

// |E(G_D) ∩ E(must ∪ may)| / |E(must ∪ may)|.
Rational dcc(const KeyAssignment& a, const TargetGraph& t);

// |E(must) ∩ E(G_D)| / |E(must)|; absent when must is empty.
std::optional<Rational> dicc(const KeyAssignment& a, const TargetGraph& t);

// Average shortest-path length in E(G_D) ∩ E(must ∪ may) over pairs connected
// in must ∪ may; absent (infinite) if any evaluated pair is unreachable.
ExtRational apl(const KeyAssignment& a, const TargetGraph& t);

// (v-k)k^2 / (v(v-1) - k(k-1)) for lambda=1 parameters.
Rational dcc_analytic(long long k, long long v);

Rational apl_analytic(const Rational& dcc_value);

// C(b-r, x) / C(b, x).
Rational nr_analytic(long long b, long long r, long long x);

// Fraction of external links not compromised; averaged over capture sets.
Rational nr_empirical(const KeyAssignment& a, const TargetGraph& t,
                      const CaptureModel& model);

std::pair<long long, Rational> storage_overhead(const KeyAssignment& a);

long long network_scalability(const KeyAssignment& a);

struct EvalMode {
    bool monte_carlo = false;
    long long trials = 10000;
    uint64_t seed = 0;
};

MetricsReport evaluate(const KeyAssignment& a, const TargetGraph& t,
                       const std::vector<long long>& capture_counts,
                       const EvalMode& mode = {});

}  // namespace kps

#endif
