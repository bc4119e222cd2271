#pragma once
#include <vector>

#include "rismesh/types.hpp"

namespace rismesh {

/// Antenna gain of a conical beam: G = 2 / (1 - cos(alpha/2)).
double antenna_gain(double alpha_rad);

/// Amplitude transfer function of one hop:
/// H = c / (4*pi*f*d) * exp(-k(f)*d/2).
double transfer_function(double d, double frequency_hz, double absorption_coeff);

/// Received power of a transmission whose signal crosses `hop_dists` in order,
/// reflected by one RIS between consecutive hops with `counts[i]` illuminated
/// elements: P_rx = P_tx * (prod H(d_i))^2 * (prod counts[i])^2.
/// counts must have exactly hop_dists.size() - 1 entries.
double received_power(double tx_power_w, const std::vector<double>& hop_dists,
                      const std::vector<int>& counts, const PhyParams& phy);

/// Thermal noise power k_B * T * W.
double noise_power(double temperature_k, double bandwidth_hz);

/// SNR = P_rx * G_be * G_eu / noise.
double snr(double received_w, double g_be, double g_eu, double noise_w);

/// Fixed part of a transmission chain when solving for the last-hop reach:
/// the completed hops and the per-RIS element counts. Empty = direct link.
struct ChainProfile {
    std::vector<double> prior_hops; // one per RIS (hops 1..h-1)
    std::vector<int> counts;        // |N'| per RIS, same length
};

/// Total distance at which the chain's SNR decays to the threshold: prior hops
/// are fixed, the last-hop length is solved by bisection on [1e-3, 1e4] m to
/// 1e-6 m. Throws NeverDetectable / TooLarge when the bracket fails.
double threshold_distance(const PhyParams& phy, const ChainProfile& profile);

/// Interference power delivered to a victim receiver: I = delta * G_tx * G_rx.
double interference_power(double delta_w, double g_tx, double g_rx);

/// SNIR = P_rx * G_be * G_eu / (noise + sum of interference powers).
double snir(double received_w, double g_be, double g_eu, double noise_w, double interference_sum_w);

/// Shannon capacity C = W * log2(1 + snr).
double capacity(double snr_linear, double bandwidth_hz);

} // namespace rismesh
