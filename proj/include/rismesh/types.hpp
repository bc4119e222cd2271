#pragma once
#include <cmath>
#include <stdexcept>
#include <string>

#include "rismesh/vec3.hpp"

namespace rismesh {

// Physical constants.
inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kBoltzmann = 1.380649e-23;   // J/K

// Geometric boundary tolerance for point-in-volume predicates (meters).
inline constexpr double kBoundaryTol = 1e-9;

/// Signal never reaches the detection threshold even at the minimum bracket distance.
struct NeverDetectable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem size or search range exceeds a configured limit.
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NodeKind { BS, RIS, RN, UE };

inline const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::BS: return "BS";
        case NodeKind::RIS: return "RIS";
        case NodeKind::RN: return "RN";
        case NodeKind::UE: return "UE";
    }
    return "?";
}

struct Node {
    int id = -1; // global index, unique and stable across a scenario
    NodeKind kind = NodeKind::BS;
    int ordinal = 0; // index within its kind (BS0, BS1, ..., RIS0, ...)
    Vec3 pos;

    std::string label() const { return std::string(kind_name(kind)) + std::to_string(ordinal); }
};

/// A RIS panel modeled as a disc of area s_ris tiled by n elements of pitch dx x dy.
struct RisPanel {
    int n = 0;          // element count
    double dx = 0.0;    // element pitch along one axis (m)
    double dy = 0.0;    // element pitch along the other axis (m)
    double s_ris = 0.0; // panel area (m^2)
    double r_ris = 0.0; // disc radius: sqrt(s_ris / pi)

    /// Panel from an explicit element count; area follows the tiling.
    static RisPanel from_elements(int n, double dx, double dy) {
        if (n <= 0 || dx <= 0.0 || dy <= 0.0) throw std::domain_error("RisPanel: n, dx, dy must be positive");
        RisPanel p;
        p.n = n;
        p.dx = dx;
        p.dy = dy;
        p.s_ris = static_cast<double>(n) * dx * dy;
        p.r_ris = std::sqrt(p.s_ris / M_PI);
        return p;
    }

    /// Panel from a target area; element count fills the area.
    static RisPanel from_area(double s_ris, double dx, double dy) {
        if (s_ris <= 0.0 || dx <= 0.0 || dy <= 0.0) throw std::domain_error("RisPanel: area and pitch must be positive");
        RisPanel p;
        p.dx = dx;
        p.dy = dy;
        p.s_ris = s_ris;
        p.n = static_cast<int>(std::floor(s_ris / (dx * dy)));
        if (p.n <= 0) throw std::domain_error("RisPanel: area smaller than one element");
        p.r_ris = std::sqrt(s_ris / M_PI);
        return p;
    }
};

/// Link-level physical parameters shared by a scenario.
struct PhyParams {
    double frequency_hz = 1e12;
    double bandwidth_hz = 3e9;
    double absorption_coeff = 0.0016; // molecular absorption k(f), 1/m
    double tx_power_w = 1.0;
    double temperature_k = 300.0;
    double alpha_rad = 15.0 * M_PI / 180.0; // antenna directivity angle
    double snr_threshold_db = 10.0;

    double threshold_linear() const { return std::pow(10.0, snr_threshold_db / 10.0); }
};

inline double to_db(double linear) {
    if (linear <= 0.0) throw std::domain_error("to_db: value must be positive");
    return 10.0 * std::log10(linear);
}

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

} // namespace rismesh
