#pragma once
#include <utility>
#include <vector>

#include "rismesh/geometry.hpp"
#include "rismesh/relay.hpp"
#include "rismesh/topology.hpp"

namespace rismesh {

/// One beam segment of a transmission, with the amplitude factor the signal
/// has accumulated before entering it (hops crossed and RISs reflected).
struct BeamSegment {
    bool is_cone = false;
    Cone cone;
    Cylinder cyl;
    int emitter = -1; // node id the segment radiates from
    double up_amp = 1.0;
};

/// Interference-oriented annotation of a transmission.
struct TxGeom {
    double d_th = 0.0;              // total threshold distance of the chain
    std::vector<BeamSegment> beams; // one per hop (last hop extended to d_th)
    std::vector<double> down_amp;   // per own-RIS index: amplitude from that RIS to eu
};

/// The merged transmission set conflicts and scheduling operate on.
struct TxUniverse {
    std::vector<Transmission> txs;
    std::vector<TxGeom> geoms;
    // Unordered id pairs (a < b) appearing together in a candidate route:
    // exempt from beam interference and from RN-sharing edges.
    std::vector<std::pair<int, int>> co_path_pairs;

    bool co_path(int a, int b) const;
};

/// Annotate transmissions and record co-path exemptions from the routes
/// (each route given as its transmission indices, in order).
TxUniverse annotate_transmissions(const Scenario& sc, std::vector<Transmission> txs,
                                  const std::vector<std::vector<int>>& routes);

struct InterferenceHit {
    int victim = -1;     // tx index
    int interferer = -1; // tx index
    int site = -1;       // node id hit
    bool site_is_ris = false;
    int overlap_count = 0; // |N_i| for RIS sites
    double delta_w = 0.0;  // interference power before antenna gains
    double i_power = 0.0;  // I = delta * G_tx * G_rx
};

/// All interference hits on one victim: every site of its chain (RISs and the
/// receiver) tested against every beam segment of every other transmission.
std::vector<InterferenceHit> detect_hits(const Scenario& sc, const TxUniverse& u, int victim);

/// Hits for all victims. The parallel kernel splits over victims and is
/// bit-identical to the serial reference.
std::vector<std::vector<InterferenceHit>> detect_all_hits(const Scenario& sc, const TxUniverse& u);
std::vector<std::vector<InterferenceHit>> detect_all_hits_serial(const Scenario& sc, const TxUniverse& u);

/// Interferers of one victim split by the scheduling heuristic: ascending
/// total-I prefix while the victim's SNIR stays at or above the threshold.
struct Schedule {
    std::vector<int> compatible; // interferer tx indices, ascending id
    std::vector<int> conflicting;
};
Schedule schedule_prefix(const Scenario& sc, const TxUniverse& u, int victim,
                         const std::vector<InterferenceHit>& hits);

struct ConflictSets {
    std::vector<std::vector<int>> sets;    // sorted members, lexicographic list
    std::vector<std::pair<int, int>> edges; // symmetrized conflict edges (a < b)
};

/// Pairwise conflicts (scheduling heuristic + RN exclusivity), symmetrized,
/// covered by maximal cliques; transmissions in no clique get singletons.
/// strict_pairs additionally escalates victims whose compatible set jointly
/// violates the threshold.
ConflictSets build_conflict_sets(const Scenario& sc, const TxUniverse& u, bool strict_pairs = false,
                                 bool parallel = true);

} // namespace rismesh
