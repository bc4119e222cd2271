#pragma once
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace rismesh {

/// Self-contained throughput-maximization instance: demands pick one candidate
/// path each, paths are transmission-id lists, conflict sets constrain the
/// per-frame airtime. Decoupled from the scenario so it can be built directly
/// in tests.
struct OptInstance {
    struct Path {
        std::vector<int> tx; // transmission ids, no duplicates
    };
    struct DemandCands {
        double y_gbit = 0.0;
        std::vector<Path> paths; // nonempty
    };
    std::vector<double> capacity_bps;            // per transmission id
    std::vector<std::vector<int>> conflict_sets; // transmission ids, each sorted
    std::vector<DemandCands> demands;
};

inline constexpr double kUnboundedLambda = std::numeric_limits<double>::infinity();

/// Traffic aggregated per transmission for an assignment (path index per demand).
std::vector<double> aggregate_y_gbit(const OptInstance& inst, const std::vector<int>& assignment);

struct LambdaResult {
    double lambda = kUnboundedLambda; // infinity = unbounded sentinel
    int binding_set = -1;             // lowest-index conflict set carrying the max load
    std::vector<double> set_loads;    // seconds of airtime per conflict set
};

/// lambda = 1 / max over conflict sets of sum y(t)/C(t); unbounded when no set
/// carries positive load.
LambdaResult evaluate_lambda(const OptInstance& inst, const std::vector<int>& assignment);

struct SolveOptions {
    // Assignment-space size at or below which solve_exact enumerates
    // exhaustively instead of branch and bound.
    double exhaustive_limit = 1e6;
};

struct Solution {
    std::vector<int> assignment;
    double lambda = kUnboundedLambda;
    int binding_set = -1;
};

/// Optimal lambda; ties go to the lexicographically smallest assignment.
/// Throws TooLarge when branch and bound would exceed practical bounds
/// (guard for pathological inputs; the sweep uses the heuristic instead).
Solution solve_exact(const OptInstance& inst, const SolveOptions& opts = {});

/// Greedy sequential assignment (each demand takes the path minimizing the
/// current max load) followed by first-improvement local search over
/// single-demand swaps until fixpoint. Deterministic; seed reserved.
Solution solve_heuristic(const OptInstance& inst, std::uint64_t seed = 0);

/// Local search from each given start (plus the greedy start), best lambda
/// wins, ties to the lexicographically smallest assignment. The sweep driver
/// uses this to warm-start across demand counts.
Solution solve_heuristic_multistart(const OptInstance& inst,
                                    const std::vector<std::vector<int>>& extra_starts);

/// G = lambda_li / lambda_sp. Undefined for zero or unbounded lambda_sp, or
/// unbounded lambda_li.
double throughput_gain(double lambda_li, double lambda_sp);

} // namespace rismesh
