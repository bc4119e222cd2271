#pragma once
#include <string>
#include <vector>

#include "rismesh/conflict.hpp"
#include "rismesh/optimizer.hpp"
#include "rismesh/relay.hpp"
#include "rismesh/serialize.hpp"
#include "rismesh/topology.hpp"

namespace rismesh {

struct RunConfig {
    GenConfig gen;
    std::string scenario_file; // when set, load instead of generating
    int candidate_k = 5;
    double traffic_gbit = 0.05;
    std::vector<int> demand_sweep{25, 65, 95, 135, 265, 400, 665};
    std::string mode = "heuristic"; // "exact" | "heuristic"
    bool strict_pairs = false;
    double exhaustive_limit = 1e6;
    std::string out_dir = "out";
    bool parallel = true; // OpenMP kernels; results identical either way
};

RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// Candidate routes per distinct demand pair plus the merged transmission
/// universe and its conflict sets (built once, shared by both methods).
struct SolveUniverse {
    struct Pair {
        int bs = -1, ue = -1;
        std::vector<std::vector<int>> route_txs; // per surviving route: tx indices
    };
    TxUniverse universe;
    std::vector<Pair> pairs;       // pairs whose K=1 route survived processing
    int dropped_pairs = 0;         // pairs unservable under DDP-SP (dropped from both)
    ConflictSets conflicts;
    std::vector<std::vector<InterferenceHit>> hits; // per victim, for the audit
};

/// Enumerate candidates (K per pair), apply relay insertion with the
/// scenario's reach limit, merge transmissions by identity, build conflicts.
SolveUniverse build_solve_universe(const Scenario& sc, int k, bool strict_pairs, bool parallel);

/// Candidate processing for one pair: RIS-only candidates that pass, or gain
/// relays; discarded candidates are dropped. Order follows the candidate key.
std::vector<PathRoute> processed_routes(const Scenario& sc, int bs, int ue, int k);

/// Instance over the universe for the given demands, keeping the first
/// `paths_per_demand` routes of each pair (K for DDP-LI, 1 for DDP-SP).
/// Demands on dropped pairs are skipped; dropped_demands reports them.
OptInstance make_instance(const SolveUniverse& su, const std::vector<Demand>& demands,
                          int paths_per_demand, int* dropped_demands = nullptr);

struct SweepRow {
    int demand_count = 0;
    std::string method; // "ddp-li" | "ddp-sp"
    double lambda = kUnboundedLambda;
    double gain = 0.0; // lambda_li / lambda_sp, same value on both method rows
    bool gain_defined = false;
    int dropped_demands = 0;
    std::vector<int> assignment;  // chosen path index per served demand
    std::vector<double> y_gbit;   // aggregated traffic per transmission id
    int binding_set = -1;         // index into the shared conflict sets, -1 if unbounded
    double wall_s = 0.0; // diagnostics only, kept out of the deterministic CSV
};

std::vector<SweepRow> run_solve_sweep(const Scenario& sc, const SolveUniverse& su, const RunConfig& cfg);

/// Fig-3-style beam sweeps (panel dx=dy=0.0024 m, 10453 elements, alpha=5 deg,
/// one-RIS chain with the threshold set to twice the first hop).
struct BeamRow {
    double sweep_var = 0.0;
    double footprint_area = 0.0;
    double illuminated_area = 0.0;
    double cone_volume = 0.0;
    double cylinder_volume = 0.0;
    int count = 0; // |N'|, asserted in tests; not a CSV column
};
std::vector<BeamRow> beam_distance_sweep(); // d = 0.5..10 step 0.5 at alpha = 5 deg
std::vector<BeamRow> beam_angle_sweep();    // alpha = 0.5..10 deg step 0.5 at d = 4 m

/// Fig-4-style interferer-angle sweep (P = 10 W, 1-m hops, victim alpha =
/// 5 deg, node-site interferer 2 m away; angle 1..45 deg step 1).
struct InterfRow {
    double angle_deg = 0.0;
    double snir_ris_db = 0.0;
    double snir_node_db = 0.0;
    double capacity_ris_bps = 0.0;
    double capacity_node_bps = 0.0;
    int overlap_count = 0; // |N_i| at this angle; not a CSV column
};
std::vector<InterfRow> interference_sweep();

// Command drivers: write outputs under cfg.out_dir, return file paths.
std::vector<std::string> cmd_gen_scenario(const RunConfig& cfg);
std::vector<std::string> cmd_beam_analysis(const RunConfig& cfg);
std::vector<std::string> cmd_interference_analysis(const RunConfig& cfg);
std::vector<std::string> cmd_solve(const RunConfig& cfg);

/// The scenario a config describes: loaded from scenario_file or generated.
Scenario scenario_for(const RunConfig& cfg);

} // namespace rismesh
