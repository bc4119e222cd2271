#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rismesh/pipeline.hpp"

namespace {

int log_level() {
    const char* v = std::getenv("RISMESH_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug") return 2;
    if (s == "info" || s == "1") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[rismesh] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[rismesh] " << msg << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interference-aware throughput analysis for RIS-assisted THz relay meshes"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::string mode;
    int k = 0;
    std::string out_dir;
    bool strict_pairs = false;

    auto* o_config = app.add_option("--config", config_path, "JSON run configuration file");
    auto* o_seed = app.add_option("--seed", seed, "Scenario generation seed");
    auto* o_mode = app.add_option("--mode", mode, "Solver: exact or heuristic")
                       ->check(CLI::IsMember({"exact", "heuristic"}));
    auto* o_k = app.add_option("--k", k, "Candidate paths per demand pair")->check(CLI::PositiveNumber);
    auto* o_out = app.add_option("--out", out_dir, "Output directory");
    auto* o_strict = app.add_flag("--strict-pairs", strict_pairs, "Escalate jointly infeasible compatible sets");

    CLI::App* c_gen = app.add_subcommand("gen-scenario", "Generate a scenario and write scenario.json");
    CLI::App* c_beam = app.add_subcommand("beam-analysis", "Write beam geometry sweep CSVs");
    CLI::App* c_interf = app.add_subcommand("interference-analysis", "Write the interferer-angle sweep CSV");
    CLI::App* c_solve = app.add_subcommand("solve", "Run the demand sweep and write results");
    for (CLI::App* sub : {c_gen, c_beam, c_interf, c_solve}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        rismesh::RunConfig cfg;
        if (o_config->count() > 0) cfg = rismesh::load_run_config(config_path);
        if (o_seed->count() > 0) cfg.gen.seed = seed;
        if (o_mode->count() > 0) cfg.mode = mode;
        if (o_k->count() > 0) cfg.candidate_k = k;
        if (o_out->count() > 0) cfg.out_dir = out_dir;
        if (o_strict->count() > 0) cfg.strict_pairs = strict_pairs;

        std::vector<std::string> written;
        if (c_gen->parsed()) {
            log_info("generating scenario, seed " + std::to_string(cfg.gen.seed));
            written = rismesh::cmd_gen_scenario(cfg);
        } else if (c_beam->parsed()) {
            written = rismesh::cmd_beam_analysis(cfg);
        } else if (c_interf->parsed()) {
            written = rismesh::cmd_interference_analysis(cfg);
        } else if (c_solve->parsed()) {
            log_info("solve: mode " + cfg.mode + ", k " + std::to_string(cfg.candidate_k));
            written = rismesh::cmd_solve(cfg);
            log_debug("solve finished, " + std::to_string(written.size()) + " files written");
        }
        for (const std::string& path : written) std::cout << path << "\n";
        return 0;
    } catch (const rismesh::NeverDetectable& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const rismesh::TooLarge& e) {
        std::cerr << "model error: " << e.what()
                  << " (try --mode heuristic for large instances)\n";
        return 3;
    } catch (const rismesh::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
