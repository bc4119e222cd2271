#include "rismesh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rismesh {

double footprint_radius(double alpha_rad, double d) {
    if (!(alpha_rad > 0.0 && alpha_rad < M_PI)) throw std::domain_error("footprint_radius: alpha outside (0, pi)");
    if (d < 0.0) throw std::domain_error("footprint_radius: negative distance");
    return std::tan(alpha_rad / 2.0) * d;
}

double footprint_area(double r) {
    if (r < 0.0) throw std::domain_error("footprint_area: negative radius");
    return M_PI * r * r;
}

Illumination illuminated(const RisPanel& panel, double alpha_rad, double d) {
    double r_fp = footprint_radius(alpha_rad, d);
    Illumination out;
    out.area = std::min(footprint_area(r_fp), panel.s_ris);
    out.count = std::min(static_cast<int>(std::floor(out.area / (panel.dx * panel.dy))), panel.n);
    out.r_ira = std::min(r_fp, panel.r_ris);
    return out;
}

double beam_volume(int i, int h, double alpha_rad, double r_ira, double d_i) {
    if (i < 1 || i > h) throw std::out_of_range("beam_volume: hop index outside 1..h");
    if (d_i < 0.0) throw std::domain_error("beam_volume: negative length");
    if (i == 1) {
        double r = footprint_radius(alpha_rad, d_i);
        return footprint_area(r) * d_i / 3.0; // cone
    }
    if (r_ira < 0.0) throw std::domain_error("beam_volume: negative radius");
    return M_PI * r_ira * r_ira * d_i; // cylinder
}

double last_hop_length(double d_th, const std::vector<double>& prior_hops) {
    double sum = 0.0;
    for (double d : prior_hops) {
        if (d < 0.0) throw std::domain_error("last_hop_length: negative hop");
        sum += d;
    }
    return std::max(0.0, d_th - sum);
}

bool point_in_cone(const Cone& c, const Vec3& p, double tol) {
    Vec3 v = p - c.apex;
    double t = v.dot(c.axis);
    if (t < -tol || t > c.length + tol) return false;
    double rad2 = std::max(0.0, v.norm2() - t * t);
    double limit = std::tan(c.half_angle) * std::max(t, 0.0) + tol;
    return std::sqrt(rad2) <= limit;
}

bool point_in_cylinder(const Cylinder& c, const Vec3& p, double tol) {
    Vec3 v = p - c.base;
    double t = v.dot(c.axis);
    if (t < -tol || t > c.length + tol) return false;
    double rad2 = std::max(0.0, v.norm2() - t * t);
    return std::sqrt(rad2) <= c.radius + tol;
}

double circle_intersection_area(double d, double r1, double r2) {
    if (r1 < 0.0 || r2 < 0.0 || d < 0.0) throw std::domain_error("circle_intersection_area: negative input");
    if (d >= r1 + r2) return 0.0;
    if (d <= std::fabs(r1 - r2)) {
        double r = std::min(r1, r2);
        return M_PI * r * r;
    }
    double a1 = r1 * r1 * std::acos(std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0));
    double a2 = r2 * r2 * std::acos(std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0));
    double s = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    return a1 + a2 - 0.5 * std::sqrt(std::max(0.0, s));
}

int interfered_element_count(double lens_area, const RisPanel& panel, int n_prime, int n_second) {
    if (lens_area < 0.0) throw std::domain_error("interfered_element_count: negative area");
    int by_area = static_cast<int>(std::floor(lens_area / (panel.dx * panel.dy)));
    return std::min({by_area, n_prime, n_second});
}

} // namespace rismesh
