#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rismesh/channel.hpp"
#include "oracles.hpp"

using namespace rismesh;
using doctest::Approx;

namespace {
PhyParams table_phy() { return PhyParams{}; } // 1 THz, 3 GHz, k=0.0016, 1 W, 300 K, 15 deg, 10 dB
} // namespace

TEST_CASE("antenna gain closed form") {
    CHECK(antenna_gain(deg_to_rad(15.0)) == Approx(233.77762621840554).epsilon(1e-14));
    CHECK(antenna_gain(deg_to_rad(5.0)) == Approx(2101.329429074307).epsilon(1e-14));
    // Published rounding of the same value.
    CHECK(antenna_gain(deg_to_rad(5.0)) == Approx(2101.2).epsilon(1e-4));
    CHECK(antenna_gain(deg_to_rad(1.0)) == Approx(52525.23493481937).epsilon(1e-14));
    CHECK(antenna_gain(deg_to_rad(45.0)) == Approx(26.274142369088175).epsilon(1e-14));
    CHECK(antenna_gain(M_PI) == Approx(2.0).epsilon(1e-15)); // hemisphere
    CHECK_THROWS_AS(antenna_gain(0.0), std::domain_error);
    CHECK_THROWS_AS(antenna_gain(2.0 * M_PI), std::domain_error);
    CHECK_THROWS_AS(antenna_gain(-1.0), std::domain_error);
}

TEST_CASE("antenna gain decreases as the beam widens") {
    double prev = antenna_gain(deg_to_rad(0.5));
    for (double deg = 1.0; deg <= 90.0; deg += 0.5) {
        double g = antenna_gain(deg_to_rad(deg));
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("transfer function values and decay") {
    PhyParams phy = table_phy();
    CHECK(transfer_function(1.0, phy.frequency_hz, phy.absorption_coeff) ==
          Approx(2.3837648047664653e-05).epsilon(1e-14));
    CHECK(transfer_function(2.0, phy.frequency_hz, phy.absorption_coeff) ==
          Approx(1.1909292777620079e-05).epsilon(1e-14));
    // Published rounding of H(1).
    CHECK(transfer_function(1.0, phy.frequency_hz, phy.absorption_coeff) == Approx(2.383787e-05).epsilon(1e-4));
    CHECK_THROWS_AS(transfer_function(0.0, phy.frequency_hz, phy.absorption_coeff), std::domain_error);
    CHECK_THROWS_AS(transfer_function(-1.0, phy.frequency_hz, phy.absorption_coeff), std::domain_error);
    // Faster than inverse-distance: absorption makes H(2d) < H(d)/2.
    for (double d = 0.25; d < 300.0; d *= 2.3) {
        double h1 = transfer_function(d, phy.frequency_hz, phy.absorption_coeff);
        double h2 = transfer_function(2.0 * d, phy.frequency_hz, phy.absorption_coeff);
        CHECK(h2 < h1 / 2.0);
    }
}

TEST_CASE("received power: direct link squares the single-hop amplitude") {
    PhyParams phy = table_phy();
    double p = received_power(1.0, {1.0}, {}, phy);
    CHECK(p == Approx(5.682334644443304e-10).epsilon(1e-14));
    CHECK(p == Approx(5.68244e-10).epsilon(1e-4)); // published rounding
}

TEST_CASE("received power telescopes across RIS chains") {
    PhyParams phy = table_phy();
    for (size_t m = 1; m <= 5; ++m) {
        std::vector<double> hops(m + 1, 1.0);
        std::vector<int> counts(m, 1039);
        double got = received_power(2.0, hops, counts, phy);
        double amp = 1.0;
        for (size_t i = 0; i <= m; ++i) amp *= transfer_function(1.0, phy.frequency_hz, phy.absorption_coeff);
        for (size_t i = 0; i < m; ++i) amp *= 1039.0;
        CHECK(got == Approx(2.0 * amp * amp).epsilon(1e-12));
    }
}

TEST_CASE("received power validates its chain") {
    PhyParams phy = table_phy();
    CHECK_THROWS_AS(received_power(1.0, {}, {}, phy), std::invalid_argument);
    CHECK_THROWS_AS(received_power(1.0, {1.0, 1.0}, {}, phy), std::invalid_argument);
    CHECK_THROWS_AS(received_power(1.0, {1.0}, {5}, phy), std::invalid_argument);
    CHECK_THROWS_AS(received_power(-1.0, {1.0}, {}, phy), std::domain_error);
}

TEST_CASE("thermal noise power") {
    CHECK(noise_power(300.0, 3e9) == Approx(1.380649e-23 * 300.0 * 3e9).epsilon(1e-15));
    CHECK(noise_power(300.0, 3e9) == Approx(1.2426e-11).epsilon(1e-4));
    CHECK(noise_power(0.0, 3e9) == 0.0);
    CHECK_THROWS_AS(noise_power(-1.0, 3e9), std::domain_error);
}

TEST_CASE("snr of the one-meter direct link") {
    PhyParams phy = table_phy();
    double g = antenna_gain(phy.alpha_rad);
    double n = noise_power(phy.temperature_k, phy.bandwidth_hz);
    double s = snr(received_power(phy.tx_power_w, {1.0}, {}, phy), g, g, n);
    CHECK(s == Approx(2499233.9024243364).epsilon(1e-12));
    CHECK(to_db(s) == Approx(63.97806903496801).epsilon(1e-12));
}

TEST_CASE("dB conversions round-trip") {
    for (double v : {1e-12, 2.5, 317.0, 8.9e9}) {
        CHECK(from_db(to_db(v)) == Approx(v).epsilon(1e-12));
    }
    CHECK_THROWS_AS(to_db(0.0), std::domain_error);
    CHECK_THROWS_AS(to_db(-2.0), std::domain_error);
}

TEST_CASE("capacity worked value and shape") {
    CHECK(capacity(10.0, 3e9) == Approx(10378294855.911892).epsilon(1e-12));
    CHECK(capacity(0.0, 3e9) == 0.0);
    CHECK(capacity(1.0, 3e9) == Approx(3e9).epsilon(1e-12));
    // Increasing and concave in snr (equal steps, shrinking gains).
    double c1 = capacity(1.0, 3e9), c2 = capacity(2.0, 3e9), c3 = capacity(3.0, 3e9);
    CHECK(c2 > c1);
    CHECK(c3 > c2);
    CHECK(c3 - c2 < c2 - c1);
    CHECK_THROWS_AS(capacity(-0.1, 3e9), std::domain_error);
}

TEST_CASE("snir reduces to snr without interference and decays with it") {
    PhyParams phy = table_phy();
    double g = antenna_gain(phy.alpha_rad);
    double n = noise_power(phy.temperature_k, phy.bandwidth_hz);
    double p = received_power(phy.tx_power_w, {1.0}, {}, phy);
    CHECK(snir(p, g, g, n, 0.0) == Approx(snr(p, g, g, n)).epsilon(1e-15));
    double prev = snir(p, g, g, n, 0.0);
    for (double i = 1e-13; i < 1e-8; i *= 10.0) {
        double cur = snir(p, g, g, n, i);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(snir(p, g, g, n, -1e-15), std::domain_error);
}

TEST_CASE("interference power is delta times both gains") {
    CHECK(interference_power(2.0e-9, 100.0, 50.0) == Approx(1.0e-5).epsilon(1e-15));
    CHECK(interference_power(0.0, 100.0, 50.0) == 0.0);
    CHECK_THROWS_AS(interference_power(-1.0, 1.0, 1.0), std::domain_error);
}

namespace {

// Independent check of threshold_distance: exponential bracketing followed by
// a 1 mm linear scan for the SNR-threshold crossing of a direct link.
double grid_scan_direct_threshold(const PhyParams& phy) {
    double g = antenna_gain(phy.alpha_rad);
    double n = noise_power(phy.temperature_k, phy.bandwidth_hz);
    double t = phy.threshold_linear();
    auto snr_at = [&](double d) {
        double h = transfer_function(d, phy.frequency_hz, phy.absorption_coeff);
        return phy.tx_power_w * h * h * g * g / n;
    };
    double hi = 1e-3;
    while (snr_at(hi) >= t) hi *= 2.0;
    double lo = hi / 2.0;
    for (double d = lo; d <= hi; d += 1e-3)
        if (snr_at(d) < t) return d - 5e-4; // crossing inside the last step
    return hi;
}

} // namespace

TEST_CASE("threshold distance agrees with a millimeter grid scan") {
    PhyParams phy = table_phy();
    double d_th = threshold_distance(phy, {});
    CHECK(std::fabs(d_th - grid_scan_direct_threshold(phy)) < 2e-3);
    CHECK(std::fabs(d_th - 371.64493063460577) < 2e-6); // independent bisection
    // Doubling the transmit power extends the reach.
    PhyParams strong = phy;
    strong.tx_power_w *= 2.0;
    CHECK(threshold_distance(strong, {}) > d_th);
}

TEST_CASE("threshold distance through a RIS chain stays consistent") {
    PhyParams phy = table_phy();
    ChainProfile chain;
    chain.prior_hops = {1.0};
    chain.counts = {1039};
    double d_th = threshold_distance(phy, chain);
    CHECK(d_th > 1.0); // must extend beyond the prior hop
    // At the solution, the chain SNR equals the threshold to bisection accuracy.
    double g = antenna_gain(phy.alpha_rad);
    double n = noise_power(phy.temperature_k, phy.bandwidth_hz);
    double last = d_th - 1.0;
    double p = received_power(phy.tx_power_w, {1.0, last}, {1039}, phy);
    double s = snr(p, g, g, n);
    CHECK(to_db(s) == Approx(phy.snr_threshold_db).epsilon(1e-6));
    CHECK_THROWS_AS(threshold_distance(phy, ChainProfile{{1.0, 1.0}, {1039}}), std::invalid_argument);
}

TEST_CASE("threshold distance signals both bracket failures") {
    PhyParams weak = table_phy();
    weak.tx_power_w = 1e-30;
    CHECK_THROWS_AS(threshold_distance(weak, {}), NeverDetectable);
    PhyParams strong = table_phy();
    strong.tx_power_w = 1e12;
    strong.absorption_coeff = 0.0;
    CHECK_THROWS_AS(threshold_distance(strong, {}), TooLarge);
}
