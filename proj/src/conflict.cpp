#include "rismesh/conflict.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rismesh/channel.hpp"

namespace rismesh {

bool TxUniverse::co_path(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(co_path_pairs.begin(), co_path_pairs.end(), std::make_pair(a, b));
}

namespace {

TxGeom annotate_one(const Scenario& sc, const Transmission& t) {
    TxGeom g;
    const size_t m = t.chain.size();

    ChainProfile profile;
    profile.prior_hops.assign(t.dists.begin(), t.dists.end() - 1);
    profile.counts.assign(m, t.count);
    double prior_sum = 0.0;
    for (double d : profile.prior_hops) prior_sum += d;
    PhyParams phy = sc.phy;
    phy.alpha_rad = t.alpha_rad; // gains follow the transmitter's own beam angle
    try {
        g.d_th = threshold_distance(phy, profile);
    } catch (const NeverDetectable&) {
        g.d_th = prior_sum; // chain dies before its last hop: no interference reach
    } catch (const TooLarge&) {
        g.d_th = prior_sum + 1e4; // cap the beam at the bisection bracket
    }

    auto H = [&](double d) { return transfer_function(d, sc.phy.frequency_hz, sc.phy.absorption_coeff); };

    double up = 1.0;
    for (size_t k = 0; k <= m; ++k) {
        const Vec3& from = sc.node(k == 0 ? t.be : t.chain[k - 1]).pos;
        const Vec3& to = sc.node(k == m ? t.eu : t.chain[k]).pos;
        BeamSegment seg;
        seg.emitter = (k == 0) ? t.be : t.chain[k - 1];
        seg.up_amp = up;
        Vec3 axis = (to - from).normalized();
        if (k == 0) {
            seg.is_cone = true;
            // A direct link radiates out to its threshold distance; a chain's
            // first cone ends on the RIS that redirects it.
            seg.cone = {from, axis, t.alpha_rad / 2.0, m == 0 ? g.d_th : t.dists[0]};
        } else {
            seg.is_cone = false;
            double len = (k < m) ? t.dists[k] : last_hop_length(g.d_th, profile.prior_hops);
            seg.cyl = {from, axis, t.r_ira, len};
        }
        g.beams.push_back(seg);
        if (k < m) up *= H(t.dists[k]) * static_cast<double>(t.count);
    }

    // Amplitude from each own RIS to the receiver (counts of later RISs included).
    g.down_amp.assign(m, 1.0);
    for (size_t q = 0; q < m; ++q) {
        double a = 1.0;
        for (size_t j = q + 1; j <= m; ++j) a *= H(t.dists[j]);
        for (size_t j = q + 1; j < m; ++j) a *= static_cast<double>(t.count);
        g.down_amp[q] = a;
    }
    return g;
}

} // namespace

TxUniverse annotate_transmissions(const Scenario& sc, std::vector<Transmission> txs,
                                  const std::vector<std::vector<int>>& routes) {
    TxUniverse u;
    u.txs = std::move(txs);
    u.geoms.reserve(u.txs.size());
    for (const Transmission& t : u.txs) u.geoms.push_back(annotate_one(sc, t));
    std::set<std::pair<int, int>> pairs;
    for (const auto& r : routes)
        for (size_t i = 0; i < r.size(); ++i)
            for (size_t j = i + 1; j < r.size(); ++j)
                pairs.insert({std::min(r[i], r[j]), std::max(r[i], r[j])});
    u.co_path_pairs.assign(pairs.begin(), pairs.end());
    return u;
}

namespace {

bool beam_contains(const BeamSegment& b, const Vec3& p) {
    return b.is_cone ? point_in_cone(b.cone, p) : point_in_cylinder(b.cyl, p);
}

double beam_axial(const BeamSegment& b, const Vec3& p) {
    const Vec3& origin = b.is_cone ? b.cone.apex : b.cyl.base;
    const Vec3& axis = b.is_cone ? b.cone.axis : b.cyl.axis;
    return (p - origin).dot(axis);
}

} // namespace

std::vector<InterferenceHit> detect_hits(const Scenario& sc, const TxUniverse& u, int victim) {
    const Transmission& v = u.txs[static_cast<size_t>(victim)];
    const double g_v = antenna_gain(v.alpha_rad);
    auto H = [&](double d) { return transfer_function(d, sc.phy.frequency_hz, sc.phy.absorption_coeff); };

    // Victim sites: the chain RISs, then the receiver.
    struct Site {
        int node;
        int ris_index; // -1 for the receiver
    };
    std::vector<Site> sites;
    for (size_t q = 0; q < v.chain.size(); ++q) sites.push_back({v.chain[q], static_cast<int>(q)});
    sites.push_back({v.eu, -1});

    std::vector<InterferenceHit> hits;
    for (size_t w = 0; w < u.txs.size(); ++w) {
        int wi = static_cast<int>(w);
        if (wi == victim || u.co_path(victim, wi)) continue;
        const Transmission& t = u.txs[w];
        for (const BeamSegment& beam : u.geoms[w].beams) {
            const Vec3& emitter_pos = sc.node(beam.emitter).pos;
            for (const Site& s : sites) {
                const Vec3& sp = sc.node(s.node).pos;
                if (!beam_contains(beam, sp)) continue;
                double x = distance(sp, emitter_pos);
                if (x < kBoundaryTol) continue; // co-located with the emitter
                InterferenceHit hit;
                hit.victim = victim;
                hit.interferer = wi;
                hit.site = s.node;
                if (s.ris_index < 0) {
                    // The receiver captures the whole interfering beam.
                    double amp = beam.up_amp * H(x);
                    hit.delta_w = sc.phy.tx_power_w * amp * amp;
                    hit.i_power = interference_power(hit.delta_w, antenna_gain(t.alpha_rad), g_v);
                } else {
                    // Shared elements relay the interferer's signal down the
                    // victim's own chain to its receiver.
                    hit.site_is_ris = true;
                    double t_c = beam_axial(beam, sp);
                    double off2 = std::max(0.0, (sp - emitter_pos).norm2() - t_c * t_c);
                    double r2 = beam.is_cone ? footprint_radius(2.0 * beam.cone.half_angle, std::max(t_c, 0.0))
                                             : beam.cyl.radius;
                    double area2 = std::min(footprint_area(r2), sc.panel.s_ris);
                    int n2 = std::min(static_cast<int>(std::floor(area2 / (sc.panel.dx * sc.panel.dy))),
                                      sc.panel.n);
                    double lens = circle_intersection_area(std::sqrt(off2), v.r_ira, r2);
                    hit.overlap_count = interfered_element_count(lens, sc.panel, v.count, n2);
                    double amp = beam.up_amp * H(x) * static_cast<double>(hit.overlap_count) *
                                 u.geoms[static_cast<size_t>(victim)].down_amp[static_cast<size_t>(s.ris_index)];
                    hit.delta_w = sc.phy.tx_power_w * amp * amp;
                    hit.i_power = interference_power(hit.delta_w, g_v, g_v);
                }
                hits.push_back(hit);
            }
        }
    }
    return hits;
}

std::vector<std::vector<InterferenceHit>> detect_all_hits_serial(const Scenario& sc, const TxUniverse& u) {
    std::vector<std::vector<InterferenceHit>> out(u.txs.size());
    for (size_t v = 0; v < u.txs.size(); ++v) out[v] = detect_hits(sc, u, static_cast<int>(v));
    return out;
}

std::vector<std::vector<InterferenceHit>> detect_all_hits(const Scenario& sc, const TxUniverse& u) {
    std::vector<std::vector<InterferenceHit>> out(u.txs.size());
    const int n = static_cast<int>(u.txs.size());
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(v)] = detect_hits(sc, u, v);
    return out;
}

namespace {

// Per-interferer interference totals, ascending (total, id).
std::vector<std::pair<double, int>> aggregate_interferers(const std::vector<InterferenceHit>& hits) {
    std::map<int, double> total;
    for (const InterferenceHit& h : hits) total[h.interferer] += h.i_power;
    std::vector<std::pair<double, int>> order;
    order.reserve(total.size());
    for (const auto& [id, sum] : total) order.push_back({sum, id});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return order;
}

} // namespace

Schedule schedule_prefix(const Scenario& sc, const TxUniverse& u, int victim,
                         const std::vector<InterferenceHit>& hits) {
    const Transmission& v = u.txs[static_cast<size_t>(victim)];
    const double g_v = antenna_gain(v.alpha_rad);
    const double noise = noise_power(sc.phy.temperature_k, sc.phy.bandwidth_hz);
    const double t = sc.phy.threshold_linear();

    Schedule out;
    double cum = 0.0;
    bool open = true;
    for (const auto& [power, id] : aggregate_interferers(hits)) {
        if (open && snir(v.received_w, g_v, g_v, noise, cum + power) >= t) {
            cum += power;
            out.compatible.push_back(id);
        } else {
            open = false; // ascending order: every later interferer also fails
            out.conflicting.push_back(id);
        }
    }
    std::sort(out.compatible.begin(), out.compatible.end());
    std::sort(out.conflicting.begin(), out.conflicting.end());
    return out;
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency matrix; vertices ascending.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        if (r.size() >= 2) out.push_back(r);
        return;
    }
    int pivot = -1;
    size_t best = 0;
    for (int cand : p) {
        size_t n = 0;
        for (int v : p)
            if (adj[static_cast<size_t>(cand)][static_cast<size_t>(v)]) ++n;
        if (pivot < 0 || n > best) {
            pivot = cand;
            best = n;
        }
    }
    for (int cand : x) {
        size_t n = 0;
        for (int v : p)
            if (adj[static_cast<size_t>(cand)][static_cast<size_t>(v)]) ++n;
        if (pivot < 0 || n > best) {
            pivot = cand;
            best = n;
        }
    }
    std::vector<int> ext;
    for (int v : p)
        if (pivot < 0 || !adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> np, nx;
        for (int w : p)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) np.push_back(w);
        for (int w : x)
            if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

ConflictSets build_conflict_sets(const Scenario& sc, const TxUniverse& u, bool strict_pairs, bool parallel) {
    const size_t n = u.txs.size();
    auto hits = parallel ? detect_all_hits(sc, u) : detect_all_hits_serial(sc, u);

    std::set<std::pair<int, int>> edges;
    auto add_edge = [&edges](int a, int b) {
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    };

    const double noise = noise_power(sc.phy.temperature_k, sc.phy.bandwidth_hz);
    const double t = sc.phy.threshold_linear();
    for (size_t v = 0; v < n; ++v) {
        Schedule sch = schedule_prefix(sc, u, static_cast<int>(v), hits[v]);
        for (int w : sch.conflicting) add_edge(static_cast<int>(v), w);
        if (strict_pairs && !sch.compatible.empty()) {
            // Escalate when even the compatible set, taken together, breaks T.
            std::map<int, double> total;
            for (const InterferenceHit& h : hits[v]) total[h.interferer] += h.i_power;
            double sum = 0.0;
            for (int w : sch.compatible) sum += total[w];
            const Transmission& vict = u.txs[v];
            double g_v = antenna_gain(vict.alpha_rad);
            if (snir(vict.received_w, g_v, g_v, noise, sum) < t)
                for (int w : sch.compatible) add_edge(static_cast<int>(v), w);
        }
    }

    // Relay exclusivity: sharing an RN conflicts unless it is the hand-off
    // between consecutive segments of one route (a co-path pair).
    auto rn_ends = [&](const Transmission& t_) {
        std::vector<int> r;
        if (sc.node(t_.be).kind == NodeKind::RN) r.push_back(t_.be);
        if (sc.node(t_.eu).kind == NodeKind::RN) r.push_back(t_.eu);
        return r;
    };
    for (size_t a = 0; a < n; ++a) {
        auto ra = rn_ends(u.txs[a]);
        if (ra.empty()) continue;
        for (size_t b = a + 1; b < n; ++b) {
            if (u.co_path(static_cast<int>(a), static_cast<int>(b))) continue;
            for (int r : rn_ends(u.txs[b]))
                if (std::find(ra.begin(), ra.end(), r) != ra.end()) add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    }

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : edges) {
        adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
        adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    }

    ConflictSets cs;
    cs.edges.assign(edges.begin(), edges.end());

    std::vector<int> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    std::vector<int> r;
    bron_kerbosch(adj, r, all, {}, cs.sets);
    for (auto& s : cs.sets) std::sort(s.begin(), s.end());
    std::sort(cs.sets.begin(), cs.sets.end());

    std::vector<char> covered(n, 0);
    for (const auto& s : cs.sets)
        for (int v : s) covered[static_cast<size_t>(v)] = 1;
    for (size_t v = 0; v < n; ++v)
        if (!covered[v]) cs.sets.push_back({static_cast<int>(v)});
    std::sort(cs.sets.begin(), cs.sets.end());
    return cs;
}

} // namespace rismesh
