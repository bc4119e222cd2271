#include "rismesh/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rismesh {

namespace {

NodeKind kind_from_name(const std::string& s) {
    if (s == kind_name(NodeKind::BS)) return NodeKind::BS;
    if (s == kind_name(NodeKind::RIS)) return NodeKind::RIS;
    if (s == kind_name(NodeKind::RN)) return NodeKind::RN;
    if (s == kind_name(NodeKind::UE)) return NodeKind::UE;
    throw std::runtime_error("unknown node kind: " + s);
}

nlohmann::ordered_json vec_to_json(const Vec3& v) { return nlohmann::ordered_json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

} // namespace

nlohmann::ordered_json scenario_to_json(const Scenario& sc) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = sc.seed;
    j["box"] = vec_to_json(sc.box);
    j["phy"] = {
        {"frequency_hz", sc.phy.frequency_hz},
        {"bandwidth_hz", sc.phy.bandwidth_hz},
        {"absorption_coeff", sc.phy.absorption_coeff},
        {"tx_power_w", sc.phy.tx_power_w},
        {"temperature_k", sc.phy.temperature_k},
        {"alpha_rad", sc.phy.alpha_rad},
        {"snr_threshold_db", sc.phy.snr_threshold_db},
    };
    j["panel"] = {
        {"n", sc.panel.n}, {"dx", sc.panel.dx}, {"dy", sc.panel.dy},
        {"s_ris", sc.panel.s_ris}, {"r_ris", sc.panel.r_ris},
    };
    j["max_hop_len"] = sc.max_hop_len;
    j["max_path_reach"] = sc.max_path_reach;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const Node& n : sc.nodes) {
        nodes.push_back({
            {"id", n.id}, {"kind", kind_name(n.kind)}, {"ordinal", n.ordinal}, {"pos", vec_to_json(n.pos)},
        });
    }
    j["nodes"] = nodes;
    return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::runtime_error("unsupported scenario schema version");
    Scenario sc;
    sc.seed = j.at("seed").get<std::uint64_t>();
    sc.box = vec_from_json(j.at("box"));
    const auto& p = j.at("phy");
    sc.phy.frequency_hz = p.at("frequency_hz").get<double>();
    sc.phy.bandwidth_hz = p.at("bandwidth_hz").get<double>();
    sc.phy.absorption_coeff = p.at("absorption_coeff").get<double>();
    sc.phy.tx_power_w = p.at("tx_power_w").get<double>();
    sc.phy.temperature_k = p.at("temperature_k").get<double>();
    sc.phy.alpha_rad = p.at("alpha_rad").get<double>();
    sc.phy.snr_threshold_db = p.at("snr_threshold_db").get<double>();
    const auto& pn = j.at("panel");
    sc.panel.n = pn.at("n").get<int>();
    sc.panel.dx = pn.at("dx").get<double>();
    sc.panel.dy = pn.at("dy").get<double>();
    sc.panel.s_ris = pn.at("s_ris").get<double>();
    sc.panel.r_ris = pn.at("r_ris").get<double>();
    sc.max_hop_len = j.at("max_hop_len").get<double>();
    sc.max_path_reach = j.at("max_path_reach").get<double>();
    for (const auto& nj : j.at("nodes")) {
        Node n;
        n.id = nj.at("id").get<int>();
        n.kind = kind_from_name(nj.at("kind").get<std::string>());
        n.ordinal = nj.at("ordinal").get<int>();
        n.pos = vec_from_json(nj.at("pos"));
        if (n.id != static_cast<int>(sc.nodes.size())) throw std::runtime_error("node ids must be dense and ordered");
        sc.nodes.push_back(n);
        switch (n.kind) {
            case NodeKind::BS: sc.bs.push_back(n.id); break;
            case NodeKind::RIS: sc.ris.push_back(n.id); break;
            case NodeKind::RN: sc.rn.push_back(n.id); break;
            case NodeKind::UE: sc.ue.push_back(n.id); break;
        }
    }
    return sc;
}

std::string write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    std::error_code ec;
    if (!p.parent_path().empty()) std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory for: " + path);
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
    return path;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace rismesh
