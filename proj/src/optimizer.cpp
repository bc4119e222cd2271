#include "rismesh/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rismesh/types.hpp"

namespace rismesh {

namespace {

void check_instance(const OptInstance& inst) {
    for (const auto& d : inst.demands) {
        if (d.paths.empty()) throw std::invalid_argument("demand has no candidate paths");
        for (const auto& p : d.paths)
            for (int t : p.tx)
                if (t < 0 || static_cast<size_t>(t) >= inst.capacity_bps.size())
                    throw std::invalid_argument("path references unknown transmission");
    }
}

} // namespace

std::vector<double> aggregate_y_gbit(const OptInstance& inst, const std::vector<int>& assignment) {
    std::vector<double> y(inst.capacity_bps.size(), 0.0);
    for (size_t j = 0; j < inst.demands.size(); ++j) {
        const auto& d = inst.demands[j];
        const auto& p = d.paths[static_cast<size_t>(assignment[j])];
        for (int t : p.tx) y[static_cast<size_t>(t)] += d.y_gbit;
    }
    return y;
}

LambdaResult evaluate_lambda(const OptInstance& inst, const std::vector<int>& assignment) {
    std::vector<double> y = aggregate_y_gbit(inst, assignment);
    LambdaResult r;
    r.set_loads.assign(inst.conflict_sets.size(), 0.0);
    double max_load = 0.0;
    for (size_t s = 0; s < inst.conflict_sets.size(); ++s) {
        double load = 0.0;
        for (int t : inst.conflict_sets[s])
            load += y[static_cast<size_t>(t)] * 1e9 / inst.capacity_bps[static_cast<size_t>(t)];
        r.set_loads[s] = load;
        if (load > max_load) {
            max_load = load;
            r.binding_set = static_cast<int>(s);
        }
    }
    if (max_load > 0.0) r.lambda = 1.0 / max_load;
    return r;
}

namespace {

// Incremental per-set load engine used only to bound branch-and-bound subtrees;
// every reported or compared lambda is recomputed with evaluate_lambda.
struct LoadEngine {
    std::vector<std::vector<std::vector<std::pair<int, double>>>> delta; // [demand][path] -> (set, load add)
    std::vector<double> load;

    LoadEngine(const OptInstance& inst) : load(inst.conflict_sets.size(), 0.0) {
        std::vector<std::vector<int>> sets_of_tx(inst.capacity_bps.size());
        for (size_t s = 0; s < inst.conflict_sets.size(); ++s)
            for (int t : inst.conflict_sets[s]) sets_of_tx[static_cast<size_t>(t)].push_back(static_cast<int>(s));
        delta.resize(inst.demands.size());
        for (size_t j = 0; j < inst.demands.size(); ++j) {
            delta[j].resize(inst.demands[j].paths.size());
            for (size_t p = 0; p < inst.demands[j].paths.size(); ++p) {
                std::vector<double> add(inst.conflict_sets.size(), 0.0);
                for (int t : inst.demands[j].paths[p].tx)
                    for (int s : sets_of_tx[static_cast<size_t>(t)])
                        add[static_cast<size_t>(s)] +=
                            inst.demands[j].y_gbit * 1e9 / inst.capacity_bps[static_cast<size_t>(t)];
                for (size_t s = 0; s < add.size(); ++s)
                    if (add[s] != 0.0) delta[j][p].push_back({static_cast<int>(s), add[s]});
            }
        }
    }

    void apply(size_t j, int p, double sign) {
        for (const auto& [s, d] : delta[j][static_cast<size_t>(p)]) load[static_cast<size_t>(s)] += sign * d;
    }

    double max_load() const {
        double m = 0.0;
        for (double l : load) m = std::max(m, l);
        return m;
    }
};

bool lambda_better(double cand, double best) { return cand > best; }

Solution finish(const OptInstance& inst, std::vector<int> assignment) {
    LambdaResult r = evaluate_lambda(inst, assignment);
    return {std::move(assignment), r.lambda, r.binding_set};
}

void exact_dfs(const OptInstance& inst, LoadEngine& eng, std::vector<int>& cur, size_t j, Solution& best,
               bool& have_best, std::uint64_t& visited, std::uint64_t node_cap) {
    if (++visited > node_cap) throw TooLarge("branch and bound exceeded the node budget");
    if (j == inst.demands.size()) {
        LambdaResult r = evaluate_lambda(inst, cur);
        if (!have_best || lambda_better(r.lambda, best.lambda)) {
            best = {cur, r.lambda, r.binding_set};
            have_best = true;
        }
        return;
    }
    for (int p = 0; p < static_cast<int>(inst.demands[j].paths.size()); ++p) {
        cur[j] = p;
        eng.apply(j, p, 1.0);
        double ml = eng.max_load();
        double bound = ml > 0.0 ? 1.0 / ml : kUnboundedLambda;
        // The slack keeps near-tie subtrees alive so the exact evaluation
        // decides; incremental sums may drift by a few ulps.
        bool prune = have_best && std::isfinite(best.lambda) && bound <= best.lambda * (1.0 - 1e-12);
        if (!prune) exact_dfs(inst, eng, cur, j + 1, best, have_best, visited, node_cap);
        eng.apply(j, p, -1.0);
    }
    cur[j] = -1;
}

} // namespace

Solution solve_exact(const OptInstance& inst, const SolveOptions& opts) {
    check_instance(inst);
    if (inst.demands.empty()) return finish(inst, {});

    double space = 1.0;
    for (const auto& d : inst.demands) space *= static_cast<double>(d.paths.size());

    if (space <= opts.exhaustive_limit) {
        std::vector<int> cur(inst.demands.size(), 0);
        Solution best = finish(inst, cur);
        // Odometer enumeration in lexicographic order; ties keep the first hit.
        while (true) {
            size_t j = inst.demands.size();
            while (j > 0) {
                --j;
                if (cur[j] + 1 < static_cast<int>(inst.demands[j].paths.size())) {
                    ++cur[j];
                    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(j) + 1, cur.end(), 0);
                    break;
                }
                if (j == 0) return best;
            }
            Solution cand = finish(inst, cur);
            if (lambda_better(cand.lambda, best.lambda)) best = cand;
        }
    }

    LoadEngine eng(inst);
    std::vector<int> cur(inst.demands.size(), -1);
    Solution best;
    bool have_best = false;
    std::uint64_t visited = 0;
    exact_dfs(inst, eng, cur, 0, best, have_best, visited, 50'000'000ULL);
    return best;
}

namespace {

std::vector<int> greedy_start(const OptInstance& inst) {
    std::vector<int> cur;
    cur.reserve(inst.demands.size());
    for (size_t j = 0; j < inst.demands.size(); ++j) {
        OptInstance prefix;
        prefix.capacity_bps = inst.capacity_bps;
        prefix.conflict_sets = inst.conflict_sets;
        prefix.demands.assign(inst.demands.begin(), inst.demands.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        int best_p = 0;
        double best_lambda = -1.0;
        std::vector<int> trial = cur;
        trial.push_back(0);
        for (int p = 0; p < static_cast<int>(inst.demands[j].paths.size()); ++p) {
            trial.back() = p;
            double l = evaluate_lambda(prefix, trial).lambda;
            if (l > best_lambda) {
                best_lambda = l;
                best_p = p;
            }
        }
        cur.push_back(best_p);
    }
    return cur;
}

std::vector<int> local_search(const OptInstance& inst, std::vector<int> cur) {
    double cur_lambda = evaluate_lambda(inst, cur).lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t j = 0; j < inst.demands.size() && !moved; ++j) {
            int keep = cur[j];
            for (int p = 0; p < static_cast<int>(inst.demands[j].paths.size()); ++p) {
                if (p == keep) continue;
                cur[j] = p;
                double l = evaluate_lambda(inst, cur).lambda;
                if (lambda_better(l, cur_lambda)) {
                    cur_lambda = l;
                    moved = true;
                    break;
                }
                cur[j] = keep;
            }
        }
    }
    return cur;
}

} // namespace

Solution solve_heuristic(const OptInstance& inst, std::uint64_t seed) {
    (void)seed; // reserved for randomized restarts; current strategy is deterministic
    check_instance(inst);
    if (inst.demands.empty()) return finish(inst, {});
    return finish(inst, local_search(inst, greedy_start(inst)));
}

Solution solve_heuristic_multistart(const OptInstance& inst, const std::vector<std::vector<int>>& extra_starts) {
    check_instance(inst);
    if (inst.demands.empty()) return finish(inst, {});

    std::vector<std::vector<int>> starts;
    starts.push_back(greedy_start(inst));
    for (const auto& s : extra_starts) {
        if (s.size() != inst.demands.size()) continue;
        bool ok = true;
        for (size_t j = 0; j < s.size(); ++j)
            if (s[j] < 0 || s[j] >= static_cast<int>(inst.demands[j].paths.size())) ok = false;
        if (ok) starts.push_back(s);
    }

    Solution best;
    bool have = false;
    for (const auto& s : starts) {
        Solution cand = finish(inst, local_search(inst, s));
        if (!have || lambda_better(cand.lambda, best.lambda) ||
            (cand.lambda == best.lambda && cand.assignment < best.assignment)) {
            best = cand;
            have = true;
        }
    }
    return best;
}

double throughput_gain(double lambda_li, double lambda_sp) {
    if (!(lambda_sp > 0.0) || !std::isfinite(lambda_sp) || !std::isfinite(lambda_li))
        return std::numeric_limits<double>::quiet_NaN();
    return lambda_li / lambda_sp;
}

} // namespace rismesh
