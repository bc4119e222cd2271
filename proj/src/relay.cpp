#include "rismesh/relay.hpp"

#include <algorithm>
#include <set>

namespace rismesh {

int closest_relay_node(const Scenario& sc, const Vec3& hop_receiver, const Vec3& ue_pos,
                       const std::vector<int>& used) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int id : sc.rn) { // ascending id, so ties keep the lower id
        if (std::find(used.begin(), used.end(), id) != used.end()) continue;
        if (distance(sc.node(id).pos, hop_receiver) > sc.max_hop_len) continue;
        double d = distance(sc.node(id).pos, ue_pos);
        if (d < best_d) {
            best = id;
            best_d = d;
        }
    }
    return best;
}

namespace {

PathRoute build_route(const Scenario& sc, const std::vector<int>& nodes) {
    PathRoute route;
    std::vector<int> seg{nodes.front()};
    for (size_t i = 1; i < nodes.size(); ++i) {
        seg.push_back(nodes[i]);
        bool is_relay = sc.node(nodes[i]).kind == NodeKind::RN;
        if (is_relay || i + 1 == nodes.size()) {
            route.segments.push_back(make_transmission(sc, seg));
            route.hop_count += static_cast<int>(seg.size()) - 1;
            route.total_length += route.segments.back().total_length;
            if (is_relay) route.relays.push_back(nodes[i]);
            seg.assign(1, nodes[i]);
        }
    }
    return route;
}

} // namespace

PathRoute route_from_path(const Scenario& sc, const CandidatePath& path) {
    return build_route(sc, path.nodes);
}

std::optional<PathRoute> finding_relay_node(const Scenario& sc, const CandidatePath& path,
                                            const RelayOptions& opts) {
    if (path.nodes.size() < 2) throw std::invalid_argument("finding_relay_node: degenerate path");
    const double t = sc.phy.threshold_linear();
    auto ok = [&](const Transmission& seg) {
        return seg.snr > t && seg.total_length <= opts.max_segment_reach;
    };

    // Already feasible end to end: nothing to insert.
    if (ok(make_transmission(sc, path.nodes))) return route_from_path(sc, path);

    std::vector<int> nodes = path.nodes;
    const Vec3 ue_pos = sc.node(nodes.back()).pos;
    size_t be_idx = 0; // index of the segment head (BS, then the latest relay)
    std::vector<int> used;

    while (true) {
        bool inserted = false;
        // Hops of the remaining segment, last to first; hp indexes the hop's
        // transmitting node.
        for (size_t hp = nodes.size() - 2; ; --hp) {
            int rn = closest_relay_node(sc, sc.node(nodes[hp + 1]).pos, ue_pos, used);
            if (rn >= 0) {
                // Splicing at this hop keeps the RISs before it on the be side.
                std::vector<int> head(nodes.begin() + static_cast<long>(be_idx),
                                      nodes.begin() + static_cast<long>(hp) + 1);
                head.push_back(rn);
                if (ok(make_transmission(sc, head))) {
                    nodes.insert(nodes.begin() + static_cast<long>(hp) + 1, rn);
                    used.push_back(rn);
                    be_idx = hp + 1;
                    inserted = true;
                    std::vector<int> tail(nodes.begin() + static_cast<long>(be_idx), nodes.end());
                    if (ok(make_transmission(sc, tail))) return build_route(sc, nodes);
                    break; // rescan from the new segment head
                }
            }
            if (hp == be_idx) break;
        }
        if (!inserted) return std::nullopt; // a full pass found no viable relay
    }
}

} // namespace rismesh
