#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "rismesh/channel.hpp"
#include "rismesh/geometry.hpp"
#include "rismesh/types.hpp"

namespace rismesh {

struct GenConfig {
    std::uint64_t seed = 42;
    int n_bs = 7;
    int n_ue = 7;
    int n_ris = 28;
    int n_rn = 28;
    Vec3 box{32.0, 32.0, 32.0};
    PhyParams phy;
    RisPanel panel = RisPanel::from_area(0.0022, kSpeedOfLight / 2e12, kSpeedOfLight / 2e12);
    double max_hop_len = 0.0;     // 0 = default to the direct-link threshold distance
    double max_path_reach = 20.0; // longest span a single transmission may cover
};

struct Scenario {
    std::uint64_t seed = 0;
    Vec3 box;
    PhyParams phy;
    RisPanel panel;
    double max_hop_len = 0.0;
    double max_path_reach = 20.0;
    std::vector<Node> nodes; // BS block, then RIS, RN, UE
    std::vector<int> bs, ris, rn, ue; // node ids per kind, in ordinal order

    const Node& node(int id) const { return nodes.at(static_cast<size_t>(id)); }
    double dist(int a, int b) const { return distance(node(a).pos, node(b).pos); }
};

/// Seeded uniform placement inside the box. Identical seeds give bit-identical
/// scenarios (raw mt19937_64 draws, no library distributions).
Scenario generate_scenario(const GenConfig& cfg);

struct Demand {
    int bs = -1;
    int ue = -1;
    double y_gbit = 0.05;
};

/// Demand j asks BS_(j mod n_bs) -> UE_(j mod n_ue); counts replicate the pairs.
std::vector<Demand> make_demands(const Scenario& sc, int count, double y_gbit);

/// A loop-free BS -> RIS... -> UE node sequence with its ordering key.
struct CandidatePath {
    std::vector<int> nodes; // node ids: bs, zero or more RIS, ue
    int hop_count = 0;
    double length = 0.0;
};

/// K shortest loop-free paths from bs to ue through RIS intermediates only,
/// ordered by (hop count, total length, lexicographic id sequence). Fewer than
/// k are returned when the graph runs out; k' < k gives a prefix of k's result.
std::vector<CandidatePath> candidate_paths(const Scenario& sc, int bs, int ue, int k);

/// One be -> RIS... -> eu unit with its derived link quantities.
struct Transmission {
    int be = -1;
    std::vector<int> chain; // RIS node ids
    int eu = -1;
    double alpha_rad = 0.0;          // transmitter directivity
    std::vector<double> dists;       // hop distances, chain.size() + 1 entries
    int count = 0;                   // |N'| shared by every RIS of the chain (0 if direct)
    double r_ira = 0.0;              // illuminated-area radius (0 if direct)
    double received_w = 0.0;         // P_rx at eu, antenna gains excluded
    double snr = 0.0;                // with G_be = G_eu = G(alpha)
    double capacity_bps = 0.0;
    double total_length = 0.0;

    std::vector<int> identity() const; // (be, chain..., eu) for merging
};

/// Build the transmission for a node sequence and derive its link quantities.
Transmission make_transmission(const Scenario& sc, const std::vector<int>& nodes);

/// Feasibility per the scenario threshold: SNR strictly above T.
bool transmission_feasible(const Scenario& sc, const Transmission& t);

} // namespace rismesh
