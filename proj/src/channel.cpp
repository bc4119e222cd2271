#include "rismesh/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rismesh {

double antenna_gain(double alpha_rad) {
    if (!(alpha_rad > 0.0 && alpha_rad < 2.0 * M_PI)) throw std::domain_error("antenna_gain: alpha outside (0, 2*pi)");
    return 2.0 / (1.0 - std::cos(alpha_rad / 2.0));
}

double transfer_function(double d, double frequency_hz, double absorption_coeff) {
    if (d <= 0.0) throw std::domain_error("transfer_function: distance must be positive");
    if (frequency_hz <= 0.0) throw std::domain_error("transfer_function: frequency must be positive");
    return kSpeedOfLight / (4.0 * M_PI * frequency_hz * d) * std::exp(-absorption_coeff * d / 2.0);
}

double received_power(double tx_power_w, const std::vector<double>& hop_dists,
                      const std::vector<int>& counts, const PhyParams& phy) {
    if (hop_dists.empty()) throw std::invalid_argument("received_power: empty hop list");
    if (counts.size() + 1 != hop_dists.size())
        throw std::invalid_argument("received_power: need one count per RIS (hops - 1)");
    if (tx_power_w < 0.0) throw std::domain_error("received_power: negative power");
    double amp = 1.0;
    for (double d : hop_dists) amp *= transfer_function(d, phy.frequency_hz, phy.absorption_coeff);
    for (int n : counts) {
        if (n < 0) throw std::domain_error("received_power: negative element count");
        amp *= static_cast<double>(n);
    }
    return tx_power_w * amp * amp;
}

double noise_power(double temperature_k, double bandwidth_hz) {
    if (temperature_k < 0.0 || bandwidth_hz < 0.0) throw std::domain_error("noise_power: negative input");
    return kBoltzmann * temperature_k * bandwidth_hz;
}

double snr(double received_w, double g_be, double g_eu, double noise_w) {
    if (noise_w <= 0.0) throw std::domain_error("snr: noise must be positive");
    return received_w * g_be * g_eu / noise_w;
}

namespace {

// Chain SNR as a function of the last-hop length, prior hops fixed.
double chain_snr_at(const PhyParams& phy, const ChainProfile& profile, double last_hop) {
    std::vector<double> hops = profile.prior_hops;
    hops.push_back(last_hop);
    double p = received_power(phy.tx_power_w, hops, profile.counts, phy);
    double g = antenna_gain(phy.alpha_rad);
    return snr(p, g, g, noise_power(phy.temperature_k, phy.bandwidth_hz));
}

} // namespace

double threshold_distance(const PhyParams& phy, const ChainProfile& profile) {
    if (profile.counts.size() != profile.prior_hops.size())
        throw std::invalid_argument("threshold_distance: need one count per prior hop");
    const double t = phy.threshold_linear();
    double lo = 1e-3, hi = 1e4;
    if (chain_snr_at(phy, profile, lo) < t) throw NeverDetectable("SNR below threshold at minimum distance");
    if (chain_snr_at(phy, profile, hi) > t) throw TooLarge("threshold distance beyond bisection bracket");
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (chain_snr_at(phy, profile, mid) > t)
            lo = mid;
        else
            hi = mid;
    }
    double last = 0.5 * (lo + hi);
    double total = last;
    for (double d : profile.prior_hops) total += d;
    return total;
}

double interference_power(double delta_w, double g_tx, double g_rx) {
    if (delta_w < 0.0) throw std::domain_error("interference_power: negative power");
    return delta_w * g_tx * g_rx;
}

double snir(double received_w, double g_be, double g_eu, double noise_w, double interference_sum_w) {
    if (interference_sum_w < 0.0) throw std::domain_error("snir: negative interference");
    if (noise_w <= 0.0) throw std::domain_error("snir: noise must be positive");
    return received_w * g_be * g_eu / (noise_w + interference_sum_w);
}

double capacity(double snr_linear, double bandwidth_hz) {
    if (snr_linear < 0.0) throw std::domain_error("capacity: negative snr");
    if (bandwidth_hz < 0.0) throw std::domain_error("capacity: negative bandwidth");
    return bandwidth_hz * std::log2(1.0 + snr_linear);
}

} // namespace rismesh
