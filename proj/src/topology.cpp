#include "rismesh/topology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace rismesh {

Scenario generate_scenario(const GenConfig& cfg) {
    Scenario sc;
    sc.seed = cfg.seed;
    sc.box = cfg.box;
    sc.phy = cfg.phy;
    sc.panel = cfg.panel;
    sc.max_path_reach = cfg.max_path_reach;

    // Raw engine draws only: uniform_real_distribution is
    // implementation-defined and would break bit-reproducibility.
    std::mt19937_64 rng(cfg.seed);
    auto u01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto place = [&](NodeKind kind, int count, std::vector<int>& ids) {
        for (int i = 0; i < count; ++i) {
            Node n;
            n.id = static_cast<int>(sc.nodes.size());
            n.kind = kind;
            n.ordinal = i;
            n.pos = {u01() * cfg.box.x, u01() * cfg.box.y, u01() * cfg.box.z};
            ids.push_back(n.id);
            sc.nodes.push_back(n);
        }
    };
    place(NodeKind::BS, cfg.n_bs, sc.bs);
    place(NodeKind::RIS, cfg.n_ris, sc.ris);
    place(NodeKind::RN, cfg.n_rn, sc.rn);
    place(NodeKind::UE, cfg.n_ue, sc.ue);

    if (cfg.max_hop_len > 0.0) {
        sc.max_hop_len = cfg.max_hop_len;
    } else {
        // Default: how far a direct link stays detectable. A bracket overflow
        // just means "everything in the box is reachable"; cap at the bracket.
        try {
            sc.max_hop_len = threshold_distance(cfg.phy, {});
        } catch (const TooLarge&) {
            sc.max_hop_len = 1e4;
        }
    }
    return sc;
}

std::vector<Demand> make_demands(const Scenario& sc, int count, double y_gbit) {
    if (count < 0) throw std::domain_error("make_demands: negative count");
    if (sc.bs.empty() || sc.ue.empty()) return {};
    std::vector<Demand> out;
    out.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
        Demand d;
        d.bs = sc.bs[static_cast<size_t>(j % static_cast<int>(sc.bs.size()))];
        d.ue = sc.ue[static_cast<size_t>(j % static_cast<int>(sc.ue.size()))];
        d.y_gbit = y_gbit;
        out.push_back(d);
    }
    return out;
}

namespace {

// Candidate ordering key: hop count, then total length, then the id sequence.
struct PathKey {
    int hops = 0;
    double len = 0.0;
    std::vector<int> seq;

    bool operator<(const PathKey& o) const {
        if (hops != o.hops) return hops < o.hops;
        if (len != o.len) return len < o.len;
        return seq < o.seq;
    }
    bool operator==(const PathKey& o) const { return hops == o.hops && len == o.len && seq == o.seq; }
};

struct PathGraph {
    const Scenario& sc;
    std::vector<int> verts; // bs, ue, all RIS

    bool has_edge(int u, int v) const { return u != v && sc.dist(u, v) <= sc.max_hop_len; }
};

// Shortest path under the composite key, avoiding banned nodes/edges.
std::optional<PathKey> shortest(const PathGraph& g, int src, int dst, const std::set<int>& banned_nodes,
                                const std::set<std::pair<int, int>>& banned_edges) {
    std::map<int, PathKey> best;
    std::set<std::pair<PathKey, int>> open;
    PathKey start{0, 0.0, {src}};
    best[src] = start;
    open.insert({start, src});
    while (!open.empty()) {
        auto [key, u] = *open.begin();
        open.erase(open.begin());
        if (u == dst) return key;
        if (best[u] < key) continue; // stale entry
        for (int v : g.verts) {
            if (v == src || banned_nodes.count(v)) continue;
            if (!g.has_edge(u, v)) continue;
            if (banned_edges.count({u, v})) continue;
            if (std::find(key.seq.begin(), key.seq.end(), v) != key.seq.end()) continue; // loop-free
            PathKey cand{key.hops + 1, key.len + g.sc.dist(u, v), key.seq};
            cand.seq.push_back(v);
            auto it = best.find(v);
            if (it == best.end() || cand < it->second) {
                if (it != best.end()) open.erase({it->second, v});
                best[v] = cand;
                open.insert({cand, v});
            }
        }
    }
    return std::nullopt;
}

PathKey key_of(const Scenario& sc, const std::vector<int>& seq) {
    PathKey k{static_cast<int>(seq.size()) - 1, 0.0, seq};
    for (size_t i = 0; i + 1 < seq.size(); ++i) k.len += sc.dist(seq[i], seq[i + 1]);
    return k;
}

} // namespace

std::vector<CandidatePath> candidate_paths(const Scenario& sc, int bs, int ue, int k) {
    if (k < 1) throw std::domain_error("candidate_paths: k must be >= 1");
    if (sc.node(bs).kind != NodeKind::BS || sc.node(ue).kind != NodeKind::UE)
        throw std::invalid_argument("candidate_paths: endpoints must be a BS and a UE");

    PathGraph g{sc, {}};
    g.verts.push_back(bs);
    g.verts.push_back(ue);
    g.verts.insert(g.verts.end(), sc.ris.begin(), sc.ris.end());
    std::sort(g.verts.begin(), g.verts.end());

    std::vector<PathKey> a;
    auto first = shortest(g, bs, ue, {}, {});
    if (first) a.push_back(*first);
    std::set<PathKey> b; // Yen candidate pool

    while (first && static_cast<int>(a.size()) < k) {
        const PathKey& prev = a.back();
        for (size_t i = 0; i + 1 < prev.seq.size(); ++i) {
            int spur = prev.seq[i];
            std::vector<int> root(prev.seq.begin(), prev.seq.begin() + static_cast<long>(i) + 1);
            std::set<std::pair<int, int>> banned_edges;
            for (const PathKey& p : a) {
                if (p.seq.size() > i && std::equal(root.begin(), root.end(), p.seq.begin()))
                    banned_edges.insert({p.seq[i], p.seq[i + 1]});
            }
            std::set<int> banned_nodes(root.begin(), root.end());
            banned_nodes.erase(spur);
            auto sp = shortest(g, spur, ue, banned_nodes, banned_edges);
            if (!sp) continue;
            std::vector<int> total = root;
            total.insert(total.end(), sp->seq.begin() + 1, sp->seq.end());
            PathKey cand = key_of(sc, total);
            if (std::find_if(a.begin(), a.end(), [&](const PathKey& p) { return p.seq == cand.seq; }) == a.end())
                b.insert(cand);
        }
        if (b.empty()) break;
        a.push_back(*b.begin());
        b.erase(b.begin());
    }

    std::vector<CandidatePath> out;
    out.reserve(a.size());
    for (const PathKey& p : a) out.push_back({p.seq, p.hops, p.len});
    return out;
}

std::vector<int> Transmission::identity() const {
    std::vector<int> id;
    id.reserve(chain.size() + 2);
    id.push_back(be);
    id.insert(id.end(), chain.begin(), chain.end());
    id.push_back(eu);
    return id;
}

Transmission make_transmission(const Scenario& sc, const std::vector<int>& nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("make_transmission: need at least two nodes");
    Transmission t;
    t.be = nodes.front();
    t.eu = nodes.back();
    t.chain.assign(nodes.begin() + 1, nodes.end() - 1);
    for (int r : t.chain)
        if (sc.node(r).kind != NodeKind::RIS)
            throw std::invalid_argument("make_transmission: intermediate nodes must be RIS");
    t.alpha_rad = sc.phy.alpha_rad;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        double d = sc.dist(nodes[i], nodes[i + 1]);
        t.dists.push_back(d);
        t.total_length += d;
    }
    std::vector<int> counts;
    if (!t.chain.empty()) {
        Illumination ill = illuminated(sc.panel, t.alpha_rad, t.dists[0]);
        t.count = ill.count;
        t.r_ira = ill.r_ira;
        counts.assign(t.chain.size(), t.count);
    }
    t.received_w = received_power(sc.phy.tx_power_w, t.dists, counts, sc.phy);
    double g = antenna_gain(t.alpha_rad);
    t.snr = snr(t.received_w, g, g, noise_power(sc.phy.temperature_k, sc.phy.bandwidth_hz));
    t.capacity_bps = capacity(t.snr, sc.phy.bandwidth_hz);
    return t;
}

bool transmission_feasible(const Scenario& sc, const Transmission& t) {
    return t.snr > sc.phy.threshold_linear();
}

} // namespace rismesh
