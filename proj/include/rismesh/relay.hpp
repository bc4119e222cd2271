#pragma once
#include <limits>
#include <optional>
#include <vector>

#include "rismesh/topology.hpp"

namespace rismesh {

struct RelayOptions {
    // Longest span a single be->...->eu segment may cover. The solve pipeline
    // passes the scenario's max_path_reach; the bare relay-insertion contract
    // is SNR-only, so the default leaves length unconstrained.
    double max_segment_reach = std::numeric_limits<double>::infinity();
};

/// A candidate path split into relay-delimited transmissions.
struct PathRoute {
    std::vector<Transmission> segments; // in order, BS ... UE
    std::vector<int> relays;            // RN node ids, in path order
    int hop_count = 0;                  // total hops across segments
    double total_length = 0.0;
};

/// Unused RN closest to the path's UE among those within max_hop_len of the
/// hop's receiving endpoint; ties go to the lower node id. -1 when none.
int closest_relay_node(const Scenario& sc, const Vec3& hop_receiver, const Vec3& ue_pos,
                       const std::vector<int>& used);

/// Minimal-insertion relay search: starting from the BS, scan the hops of the
/// remaining segment from last to first, splice the closest eligible relay
/// whenever the span up to it clears the threshold, and stop once the rest of
/// the path clears it too. A pass with no viable relay discards the path.
/// A path that is already feasible end to end comes back unchanged.
std::optional<PathRoute> finding_relay_node(const Scenario& sc, const CandidatePath& path,
                                            const RelayOptions& opts = {});

/// Wrap an end-to-end feasible candidate as a single-segment route.
PathRoute route_from_path(const Scenario& sc, const CandidatePath& path);

} // namespace rismesh
