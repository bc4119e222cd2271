// Times the interference-detection kernel: OpenMP split over victims against
// the serial reference, verifying the results are identical.
#include <chrono>
#include <cstdio>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "rismesh/pipeline.hpp"

namespace {

bool hits_equal(const std::vector<std::vector<rismesh::InterferenceHit>>& a,
                const std::vector<std::vector<rismesh::InterferenceHit>>& b) {
    if (a.size() != b.size()) return false;
    for (size_t v = 0; v < a.size(); ++v) {
        if (a[v].size() != b[v].size()) return false;
        for (size_t i = 0; i < a[v].size(); ++i) {
            const auto& x = a[v][i];
            const auto& y = b[v][i];
            if (x.victim != y.victim || x.interferer != y.interferer || x.site != y.site ||
                x.site_is_ris != y.site_is_ris || x.overlap_count != y.overlap_count ||
                x.delta_w != y.delta_w || x.i_power != y.i_power)
                return false;
        }
    }
    return true;
}

template <typename F>
double best_of_ms(int repeats, F&& f) {
    double best = 0.0;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (r == 0 || ms < best) best = ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interference-kernel benchmark: serial reference vs OpenMP"};
    std::uint64_t seed = 42;
    int repeats = 5;
    int k = 5;
    app.add_option("--seed", seed, "Scenario seed");
    app.add_option("--repeat", repeats, "Timing repetitions (best-of)")->check(CLI::PositiveNumber);
    app.add_option("--k", k, "Candidate paths per demand pair")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    rismesh::GenConfig gen;
    gen.seed = seed;
    rismesh::Scenario sc = rismesh::generate_scenario(gen);
    rismesh::SolveUniverse su = rismesh::build_solve_universe(sc, k, false, true);
    const rismesh::TxUniverse& u = su.universe;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("transmissions=%zu threads=%d repeats=%d\n", u.txs.size(), threads, repeats);

    std::vector<std::vector<rismesh::InterferenceHit>> serial, parallel;
    double serial_ms = best_of_ms(repeats, [&] { serial = rismesh::detect_all_hits_serial(sc, u); });
    double parallel_ms = best_of_ms(repeats, [&] { parallel = rismesh::detect_all_hits(sc, u); });

    bool same = hits_equal(serial, parallel);
    std::printf("serial_best_ms=%.3f\n", serial_ms);
    std::printf("parallel_best_ms=%.3f\n", parallel_ms);
    std::printf("speedup=%.2fx\n", parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
    std::printf("identical=%s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
