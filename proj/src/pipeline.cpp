#include "rismesh/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rismesh {

namespace {

void require_keys(const nlohmann::json& j, const std::vector<std::string>& allowed, const char* where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw std::runtime_error(std::string("unknown config key in ") + where + ": " + key);
    }
}

} // namespace

RunConfig run_config_from_json(const nlohmann::json& j) {
    require_keys(j,
                 {"seed", "n_bs", "n_ue", "n_ris", "n_rn", "box", "phy", "panel", "max_hop_len",
                  "max_path_reach", "scenario_file", "candidate_k", "traffic_gbit", "demand_sweep",
                  "mode", "strict_pairs", "exhaustive_limit", "out_dir", "parallel"},
                 "config");
    RunConfig cfg;
    if (j.contains("seed")) cfg.gen.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n_bs")) cfg.gen.n_bs = j.at("n_bs").get<int>();
    if (j.contains("n_ue")) cfg.gen.n_ue = j.at("n_ue").get<int>();
    if (j.contains("n_ris")) cfg.gen.n_ris = j.at("n_ris").get<int>();
    if (j.contains("n_rn")) cfg.gen.n_rn = j.at("n_rn").get<int>();
    if (cfg.gen.n_bs < 0 || cfg.gen.n_ue < 0 || cfg.gen.n_ris < 0 || cfg.gen.n_rn < 0)
        throw std::runtime_error("node counts must not be negative");
    if (j.contains("box")) {
        const auto& b = j.at("box");
        if (!b.is_array() || b.size() != 3) throw std::runtime_error("box must be [x, y, z]");
        cfg.gen.box = {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>()};
        if (!(cfg.gen.box.x > 0.0 && cfg.gen.box.y > 0.0 && cfg.gen.box.z > 0.0))
            throw std::runtime_error("box extents must be positive");
    }
    if (j.contains("phy")) {
        const auto& p = j.at("phy");
        require_keys(p,
                     {"frequency_hz", "bandwidth_hz", "absorption_coeff", "tx_power_w", "temperature_k",
                      "alpha_deg", "alpha_rad", "snr_threshold_db"},
                     "phy");
        PhyParams& phy = cfg.gen.phy;
        if (p.contains("frequency_hz")) phy.frequency_hz = p.at("frequency_hz").get<double>();
        if (p.contains("bandwidth_hz")) phy.bandwidth_hz = p.at("bandwidth_hz").get<double>();
        if (p.contains("absorption_coeff")) phy.absorption_coeff = p.at("absorption_coeff").get<double>();
        if (p.contains("tx_power_w")) phy.tx_power_w = p.at("tx_power_w").get<double>();
        if (p.contains("temperature_k")) phy.temperature_k = p.at("temperature_k").get<double>();
        if (p.contains("alpha_deg") && p.contains("alpha_rad"))
            throw std::runtime_error("give alpha_deg or alpha_rad, not both");
        if (p.contains("alpha_deg")) phy.alpha_rad = deg_to_rad(p.at("alpha_deg").get<double>());
        if (p.contains("alpha_rad")) phy.alpha_rad = p.at("alpha_rad").get<double>();
        if (p.contains("snr_threshold_db")) phy.snr_threshold_db = p.at("snr_threshold_db").get<double>();
    }
    if (j.contains("panel")) {
        const auto& p = j.at("panel");
        require_keys(p, {"n", "dx", "dy", "s_ris"}, "panel");
        if (!p.contains("dx") || !p.contains("dy") || (p.contains("n") == p.contains("s_ris")))
            throw std::runtime_error("panel needs dx, dy, and exactly one of n or s_ris");
        double dx = p.at("dx").get<double>();
        double dy = p.at("dy").get<double>();
        cfg.gen.panel = p.contains("n") ? RisPanel::from_elements(p.at("n").get<int>(), dx, dy)
                                        : RisPanel::from_area(p.at("s_ris").get<double>(), dx, dy);
    }
    if (j.contains("max_hop_len")) cfg.gen.max_hop_len = j.at("max_hop_len").get<double>();
    if (j.contains("max_path_reach")) cfg.gen.max_path_reach = j.at("max_path_reach").get<double>();
    if (j.contains("scenario_file")) cfg.scenario_file = j.at("scenario_file").get<std::string>();
    if (j.contains("candidate_k")) cfg.candidate_k = j.at("candidate_k").get<int>();
    if (j.contains("traffic_gbit")) cfg.traffic_gbit = j.at("traffic_gbit").get<double>();
    if (j.contains("demand_sweep")) {
        cfg.demand_sweep.clear();
        for (const auto& v : j.at("demand_sweep")) cfg.demand_sweep.push_back(v.get<int>());
        if (cfg.demand_sweep.empty()) throw std::runtime_error("demand_sweep must not be empty");
        for (int c : cfg.demand_sweep)
            if (c < 0) throw std::runtime_error("demand_sweep entries must not be negative");
    }
    if (j.contains("mode")) {
        cfg.mode = j.at("mode").get<std::string>();
        if (cfg.mode != "exact" && cfg.mode != "heuristic")
            throw std::runtime_error("mode must be exact or heuristic");
    }
    if (j.contains("strict_pairs")) cfg.strict_pairs = j.at("strict_pairs").get<bool>();
    if (j.contains("exhaustive_limit")) cfg.exhaustive_limit = j.at("exhaustive_limit").get<double>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("parallel")) cfg.parallel = j.at("parallel").get<bool>();
    if (cfg.candidate_k < 1) throw std::runtime_error("candidate_k must be at least 1");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    return run_config_from_json(nlohmann::json::parse(read_text_file(path)));
}

Scenario scenario_for(const RunConfig& cfg) {
    if (!cfg.scenario_file.empty()) return scenario_from_json(nlohmann::json::parse(read_text_file(cfg.scenario_file)));
    return generate_scenario(cfg.gen);
}

std::vector<PathRoute> processed_routes(const Scenario& sc, int bs, int ue, int k) {
    RelayOptions opts;
    if (sc.max_path_reach > 0.0) opts.max_segment_reach = sc.max_path_reach;
    std::vector<PathRoute> out;
    for (const CandidatePath& cand : candidate_paths(sc, bs, ue, k))
        if (auto route = finding_relay_node(sc, cand, opts)) out.push_back(std::move(*route));
    return out;
}

SolveUniverse build_solve_universe(const Scenario& sc, int k, bool strict_pairs, bool parallel) {
    SolveUniverse su;
    RelayOptions opts;
    if (sc.max_path_reach > 0.0) opts.max_segment_reach = sc.max_path_reach;

    std::map<std::vector<int>, int> tx_index;
    std::vector<Transmission> txs;
    std::vector<std::vector<int>> route_lists;

    const int nb = static_cast<int>(sc.bs.size());
    const int nu = static_cast<int>(sc.ue.size());
    if (nb == 0 || nu == 0) throw std::runtime_error("scenario has no demand endpoints");
    const int period = std::lcm(nb, nu);

    for (int jd = 0; jd < period; ++jd) {
        int bs = sc.bs[static_cast<size_t>(jd % nb)];
        int ue = sc.ue[static_cast<size_t>(jd % nu)];
        std::vector<CandidatePath> cands = candidate_paths(sc, bs, ue, k);
        std::vector<PathRoute> routes;
        bool first_survived = false;
        for (size_t i = 0; i < cands.size(); ++i) {
            auto route = finding_relay_node(sc, cands[i], opts);
            if (!route) continue;
            if (i == 0) first_survived = true;
            routes.push_back(std::move(*route));
        }
        // A pair the single-path method cannot serve is dropped from both
        // methods so their sweeps compare the same demand set.
        if (!first_survived) {
            ++su.dropped_pairs;
            continue;
        }
        SolveUniverse::Pair pr;
        pr.bs = bs;
        pr.ue = ue;
        for (const PathRoute& route : routes) {
            std::vector<int> tlist;
            for (const Transmission& seg : route.segments) {
                std::vector<int> key = seg.identity();
                auto it = tx_index.find(key);
                int idx;
                if (it == tx_index.end()) {
                    idx = static_cast<int>(txs.size());
                    tx_index.emplace(std::move(key), idx);
                    txs.push_back(seg);
                } else {
                    idx = it->second;
                }
                tlist.push_back(idx);
            }
            pr.route_txs.push_back(tlist);
            route_lists.push_back(std::move(tlist));
        }
        su.pairs.push_back(std::move(pr));
    }

    su.universe = annotate_transmissions(sc, std::move(txs), route_lists);
    su.conflicts = build_conflict_sets(sc, su.universe, strict_pairs, parallel);
    su.hits = parallel ? detect_all_hits(sc, su.universe) : detect_all_hits_serial(sc, su.universe);
    return su;
}

OptInstance make_instance(const SolveUniverse& su, const std::vector<Demand>& demands, int paths_per_demand,
                          int* dropped_demands) {
    OptInstance inst;
    inst.capacity_bps.reserve(su.universe.txs.size());
    for (const Transmission& t : su.universe.txs) inst.capacity_bps.push_back(t.capacity_bps);
    inst.conflict_sets = su.conflicts.sets;

    std::map<std::pair<int, int>, const SolveUniverse::Pair*> by_pair;
    for (const auto& p : su.pairs) by_pair[{p.bs, p.ue}] = &p;

    int dropped = 0;
    for (const Demand& d : demands) {
        auto it = by_pair.find({d.bs, d.ue});
        if (it == by_pair.end()) {
            ++dropped;
            continue;
        }
        OptInstance::DemandCands dc;
        dc.y_gbit = d.y_gbit;
        const auto& routes = it->second->route_txs;
        size_t n = std::min<size_t>(static_cast<size_t>(paths_per_demand), routes.size());
        for (size_t r = 0; r < n; ++r) dc.paths.push_back({routes[r]});
        inst.demands.push_back(std::move(dc));
    }
    if (dropped_demands) *dropped_demands = dropped;
    return inst;
}

std::vector<SweepRow> run_solve_sweep(const Scenario& sc, const SolveUniverse& su, const RunConfig& cfg) {
    std::vector<int> counts = cfg.demand_sweep;
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    SolveOptions sopts;
    sopts.exhaustive_limit = cfg.exhaustive_limit;

    auto elapsed = [](auto t0) {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<SweepRow> rows;
    std::vector<int> prev_assignment; // from the next-larger count; demands are prefixes
    bool have_prev = false;
    for (int count : counts) {
        std::vector<Demand> demands = make_demands(sc, count, cfg.traffic_gbit);
        int dropped = 0;
        OptInstance li = make_instance(su, demands, cfg.candidate_k, &dropped);
        OptInstance sp = make_instance(su, demands, 1, nullptr);

        auto t0 = std::chrono::steady_clock::now();
        Solution sol_sp = (cfg.mode == "exact") ? solve_exact(sp, sopts) : solve_heuristic(sp);
        double wall_sp = elapsed(t0);

        t0 = std::chrono::steady_clock::now();
        Solution sol_li;
        if (cfg.mode == "exact") {
            sol_li = solve_exact(li, sopts);
        } else {
            // Extra starts keep the sweep well-ordered: the all-zeros start is
            // the single-path assignment, and the truncated previous solution
            // carries the larger count's quality down the sweep.
            std::vector<std::vector<int>> extras;
            extras.emplace_back(li.demands.size(), 0);
            if (have_prev && prev_assignment.size() >= li.demands.size())
                extras.emplace_back(prev_assignment.begin(),
                                    prev_assignment.begin() + static_cast<std::ptrdiff_t>(li.demands.size()));
            sol_li = solve_heuristic_multistart(li, extras);
        }
        double wall_li = elapsed(t0);
        prev_assignment = sol_li.assignment;
        have_prev = true;

        double gain = throughput_gain(sol_li.lambda, sol_sp.lambda);
        bool defined = !std::isnan(gain);
        SweepRow rli;
        rli.demand_count = count;
        rli.method = "ddp-li";
        rli.lambda = sol_li.lambda;
        rli.gain = gain;
        rli.gain_defined = defined;
        rli.dropped_demands = dropped;
        rli.assignment = sol_li.assignment;
        rli.y_gbit = aggregate_y_gbit(li, sol_li.assignment);
        rli.binding_set = sol_li.binding_set;
        rli.wall_s = wall_li;
        SweepRow rsp;
        rsp.demand_count = count;
        rsp.method = "ddp-sp";
        rsp.lambda = sol_sp.lambda;
        rsp.gain = gain;
        rsp.gain_defined = defined;
        rsp.dropped_demands = dropped;
        rsp.assignment = sol_sp.assignment;
        rsp.y_gbit = aggregate_y_gbit(sp, sol_sp.assignment);
        rsp.binding_set = sol_sp.binding_set;
        rsp.wall_s = wall_sp;
        rows.push_back(std::move(rli));
        rows.push_back(std::move(rsp));
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.demand_count != b.demand_count) return a.demand_count < b.demand_count;
        return a.method < b.method;
    });
    return rows;
}

namespace {

RisPanel analysis_panel() { return RisPanel::from_elements(10453, 0.0024, 0.0024); }

BeamRow beam_row(double sweep_var, const RisPanel& panel, double alpha, double d) {
    Illumination ill = illuminated(panel, alpha, d);
    BeamRow row;
    row.sweep_var = sweep_var;
    row.footprint_area = footprint_area(footprint_radius(alpha, d));
    row.illuminated_area = ill.area;
    row.cone_volume = beam_volume(1, 2, alpha, ill.r_ira, d);
    // Second hop of a two-hop chain whose threshold distance is twice the
    // first hop, so the interference cylinder is d long as well.
    row.cylinder_volume = beam_volume(2, 2, alpha, ill.r_ira, last_hop_length(2.0 * d, {d}));
    row.count = ill.count;
    return row;
}

} // namespace

std::vector<BeamRow> beam_distance_sweep() {
    RisPanel panel = analysis_panel();
    std::vector<BeamRow> rows;
    for (int i = 1; i <= 20; ++i) {
        double d = 0.5 * i;
        rows.push_back(beam_row(d, panel, deg_to_rad(5.0), d));
    }
    return rows;
}

std::vector<BeamRow> beam_angle_sweep() {
    RisPanel panel = analysis_panel();
    std::vector<BeamRow> rows;
    for (int i = 1; i <= 20; ++i) {
        double deg = 0.5 * i;
        rows.push_back(beam_row(deg, panel, deg_to_rad(deg), 4.0));
    }
    return rows;
}

std::vector<InterfRow> interference_sweep() {
    // Engineered layout: a two-hop victim with 1-m hops, one interferer aimed
    // straight at the victim's panel from 1 m, another crossing the victim's
    // receiver from 2 m. Runs through the real detection kernel.
    Scenario sc;
    sc.phy.tx_power_w = 10.0;
    sc.phy.alpha_rad = deg_to_rad(5.0);
    sc.panel = analysis_panel();
    sc.box = {4.0, 4.0, 4.0};
    auto add = [&sc](NodeKind kind, Vec3 pos) {
        Node n;
        n.id = static_cast<int>(sc.nodes.size());
        n.kind = kind;
        n.pos = pos;
        switch (kind) {
            case NodeKind::BS: n.ordinal = static_cast<int>(sc.bs.size()); sc.bs.push_back(n.id); break;
            case NodeKind::RIS: n.ordinal = static_cast<int>(sc.ris.size()); sc.ris.push_back(n.id); break;
            case NodeKind::RN: n.ordinal = static_cast<int>(sc.rn.size()); sc.rn.push_back(n.id); break;
            case NodeKind::UE: n.ordinal = static_cast<int>(sc.ue.size()); sc.ue.push_back(n.id); break;
        }
        sc.nodes.push_back(n);
        return n.id;
    };
    int vb = add(NodeKind::BS, {0.0, 0.0, 0.0});
    int vr = add(NodeKind::RIS, {1.0, 0.0, 0.0});
    int vu = add(NodeKind::UE, {2.0, 0.0, 0.0});
    int ib_node = add(NodeKind::BS, {2.0, 2.0, 0.0});
    int iu_node = add(NodeKind::UE, {2.0, -1.0, 0.0});
    int ib_ris = add(NodeKind::BS, {1.0, 0.0, 1.0});
    int iu_ris = add(NodeKind::UE, {1.0, 0.0, -1.0});

    const double g_v = antenna_gain(sc.phy.alpha_rad);
    const double noise = noise_power(sc.phy.temperature_k, sc.phy.bandwidth_hz);

    std::vector<InterfRow> rows;
    for (int deg = 1; deg <= 45; ++deg) {
        Transmission victim = make_transmission(sc, {vb, vr, vu});
        Transmission t_node = make_transmission(sc, {ib_node, iu_node});
        Transmission t_ris = make_transmission(sc, {ib_ris, iu_ris});
        t_node.alpha_rad = deg_to_rad(static_cast<double>(deg));
        t_ris.alpha_rad = deg_to_rad(static_cast<double>(deg));

        TxUniverse u = annotate_transmissions(sc, {victim, t_node, t_ris}, {{0}, {1}, {2}});
        std::vector<InterferenceHit> hits = detect_hits(sc, u, 0);

        double i_ris = 0.0, i_node = 0.0;
        int overlap = 0;
        for (const InterferenceHit& h : hits) {
            if (h.site_is_ris) {
                i_ris += h.i_power;
                overlap = std::max(overlap, h.overlap_count);
            } else {
                i_node += h.i_power;
            }
        }

        InterfRow row;
        row.angle_deg = static_cast<double>(deg);
        double s_ris = snir(victim.received_w, g_v, g_v, noise, i_ris);
        double s_node = snir(victim.received_w, g_v, g_v, noise, i_node);
        row.snir_ris_db = to_db(s_ris);
        row.snir_node_db = to_db(s_node);
        row.capacity_ris_bps = capacity(s_ris, sc.phy.bandwidth_hz);
        row.capacity_node_bps = capacity(s_node, sc.phy.bandwidth_hz);
        row.overlap_count = overlap;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
    if (dir.empty()) return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

std::string beam_csv(const std::vector<BeamRow>& rows) {
    std::ostringstream ss;
    ss << "sweep_var,footprint_area,illuminated_area,cone_volume,cylinder_volume\n";
    for (const BeamRow& r : rows)
        ss << csv_num(r.sweep_var) << ',' << csv_num(r.footprint_area) << ',' << csv_num(r.illuminated_area)
           << ',' << csv_num(r.cone_volume) << ',' << csv_num(r.cylinder_volume) << '\n';
    return ss.str();
}

nlohmann::ordered_json lambda_json(double lambda) {
    if (std::isinf(lambda)) return "unbounded";
    return lambda;
}

} // namespace

std::vector<std::string> cmd_gen_scenario(const RunConfig& cfg) {
    Scenario sc = scenario_for(cfg);
    std::string path = join_path(cfg.out_dir, "scenario.json");
    write_text_file(path, scenario_to_json(sc).dump(2) + "\n");
    return {path};
}

std::vector<std::string> cmd_beam_analysis(const RunConfig& cfg) {
    std::string d_path = join_path(cfg.out_dir, "beam_distance.csv");
    std::string a_path = join_path(cfg.out_dir, "beam_angle.csv");
    write_text_file(d_path, beam_csv(beam_distance_sweep()));
    write_text_file(a_path, beam_csv(beam_angle_sweep()));
    return {d_path, a_path};
}

std::vector<std::string> cmd_interference_analysis(const RunConfig& cfg) {
    std::ostringstream ss;
    ss << "interferer_angle,snir_ris_db,snir_node_db,capacity_ris,capacity_node\n";
    for (const InterfRow& r : interference_sweep())
        ss << csv_num(r.angle_deg) << ',' << csv_num(r.snir_ris_db) << ',' << csv_num(r.snir_node_db) << ','
           << csv_num(r.capacity_ris_bps) << ',' << csv_num(r.capacity_node_bps) << '\n';
    std::string path = join_path(cfg.out_dir, "interference.csv");
    write_text_file(path, ss.str());
    return {path};
}

std::vector<std::string> cmd_solve(const RunConfig& cfg) {
    Scenario sc = scenario_for(cfg);
    SolveUniverse su = build_solve_universe(sc, cfg.candidate_k, cfg.strict_pairs, cfg.parallel);
    std::vector<SweepRow> rows = run_solve_sweep(sc, su, cfg);

    std::ostringstream sweep;
    sweep << "demand_count,method,lambda,gain\n";
    for (const SweepRow& r : rows) {
        sweep << r.demand_count << ',' << r.method << ','
              << (std::isinf(r.lambda) ? std::string("unbounded") : csv_num(r.lambda)) << ','
              << (r.gain_defined ? csv_num(r.gain) : std::string()) << '\n';
    }
    std::string sweep_path = join_path(cfg.out_dir, "solve_sweep.csv");
    write_text_file(sweep_path, sweep.str());

    // Wall-clock diagnostics are opt-in so the default output set stays
    // byte-identical across re-runs.
    std::string timing_path;
    if (std::getenv("RISMESH_TIMING")) {
        std::ostringstream timing;
        timing << "demand_count,method,wall_s\n";
        for (const SweepRow& r : rows)
            timing << r.demand_count << ',' << r.method << ',' << csv_num(r.wall_s) << '\n';
        timing_path = join_path(cfg.out_dir, "solve_timing.csv");
        write_text_file(timing_path, timing.str());
    }

    nlohmann::ordered_json audit;
    audit["schema_version"] = kSchemaVersion;
    audit["strict_pairs"] = cfg.strict_pairs;
    audit["dropped_pairs"] = su.dropped_pairs;
    nlohmann::ordered_json txs = nlohmann::ordered_json::array();
    for (size_t i = 0; i < su.universe.txs.size(); ++i) {
        const Transmission& t = su.universe.txs[i];
        txs.push_back({
            {"id", i},
            {"nodes", t.identity()},
            {"snr_db", to_db(t.snr)},
            {"capacity_bps", t.capacity_bps},
            {"count", t.count},
            {"d_th", su.universe.geoms[i].d_th},
        });
    }
    audit["transmissions"] = txs;
    nlohmann::ordered_json cop = nlohmann::ordered_json::array();
    for (const auto& [a, b] : su.universe.co_path_pairs) cop.push_back({a, b});
    audit["co_path_pairs"] = cop;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : su.conflicts.edges) edges.push_back({a, b});
    audit["edges"] = edges;
    audit["sets"] = su.conflicts.sets;
    nlohmann::ordered_json schedules = nlohmann::ordered_json::array();
    for (size_t v = 0; v < su.universe.txs.size(); ++v) {
        Schedule s = schedule_prefix(sc, su.universe, static_cast<int>(v), su.hits[v]);
        schedules.push_back({
            {"victim", v},
            {"hit_count", su.hits[v].size()},
            {"compatible", s.compatible},
            {"conflicting", s.conflicting},
        });
    }
    audit["schedules"] = schedules;
    std::string audit_path = join_path(cfg.out_dir, "conflict_audit.json");
    write_text_file(audit_path, audit.dump(2) + "\n");

    nlohmann::ordered_json sol;
    sol["schema_version"] = kSchemaVersion;
    sol["seed"] = sc.seed;
    sol["mode"] = cfg.mode;
    sol["candidate_k"] = cfg.candidate_k;
    sol["strict_pairs"] = cfg.strict_pairs;
    sol["traffic_gbit"] = cfg.traffic_gbit;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json jr;
        jr["demand_count"] = r.demand_count;
        jr["method"] = r.method;
        jr["lambda"] = lambda_json(r.lambda);
        jr["gain"] = r.gain_defined ? nlohmann::ordered_json(r.gain) : nlohmann::ordered_json(nullptr);
        jr["dropped_demands"] = r.dropped_demands;
        jr["assignment"] = r.assignment;
        jr["y_gbit"] = r.y_gbit;
        jr["binding_set"] = r.binding_set;
        jrows.push_back(jr);
    }
    sol["rows"] = jrows;
    std::string sol_path = join_path(cfg.out_dir, "solution.json");
    write_text_file(sol_path, sol.dump(2) + "\n");

    std::vector<std::string> written{sweep_path, audit_path, sol_path};
    if (!timing_path.empty()) written.insert(written.begin() + 1, timing_path);
    return written;
}

} // namespace rismesh
