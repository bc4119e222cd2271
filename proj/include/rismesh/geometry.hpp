#pragma once
#include <vector>

#include "rismesh/types.hpp"

namespace rismesh {

/// Radius of the circular footprint a conical beam of directivity angle alpha
/// paints at axial distance d:  r = tan(alpha/2) * d.
double footprint_radius(double alpha_rad, double d);

/// Area of a circular footprint of radius r.
double footprint_area(double r);

/// Illuminated part of a RIS panel hit by a conical beam at axial distance d.
struct Illumination {
    double area = 0.0;  // min(footprint area, panel area)
    int count = 0;      // element count |N'| = floor(area / (dx*dy)), capped at n
    double r_ira = 0.0; // illuminated-area radius: min(footprint radius, panel radius)
};
Illumination illuminated(const RisPanel& panel, double alpha_rad, double d);

/// Volume of hop i of an h-hop transmission beam: the first hop is a cone of
/// half-angle alpha/2 and length d_i, later hops are cylinders of radius r_ira.
double beam_volume(int i, int h, double alpha_rad, double r_ira, double d_i);

/// Interference length of the last hop: whatever remains of the threshold
/// distance after the prior hops, clamped at zero.
double last_hop_length(double d_th, const std::vector<double>& prior_hops);

struct Cone {
    Vec3 apex;
    Vec3 axis; // unit
    double half_angle = 0.0;
    double length = 0.0;
};

struct Cylinder {
    Vec3 base;
    Vec3 axis; // unit
    double radius = 0.0;
    double length = 0.0;
};

/// Containment predicates. Points within tol of the surface count as inside.
bool point_in_cone(const Cone& c, const Vec3& p, double tol = kBoundaryTol);
bool point_in_cylinder(const Cylinder& c, const Vec3& p, double tol = kBoundaryTol);

/// Lens area of two intersecting circles whose centers are d apart.
double circle_intersection_area(double d, double r1, double r2);

/// |N_i|: elements inside the lens, capped by both beams' own counts.
int interfered_element_count(double lens_area, const RisPanel& panel, int n_prime, int n_second);

} // namespace rismesh
