#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rismesh/geometry.hpp"
#include "oracles.hpp"

using namespace rismesh;
using doctest::Approx;

namespace {
const double kAlpha5 = deg_to_rad(5.0);
} // namespace

TEST_CASE("footprint radius evaluates tan(alpha/2)*d") {
    CHECK(footprint_radius(kAlpha5, 4.0) == Approx(0.17464377163404823).epsilon(1e-14));
    // Published rounding of the same quantity, at its looser precision.
    CHECK(footprint_radius(kAlpha5, 4.0) == Approx(0.1746436).epsilon(2e-6));
    CHECK(footprint_radius(kAlpha5, 1.0) == Approx(0.04366094290851206).epsilon(1e-14));
    CHECK(footprint_radius(kAlpha5, 0.0) == 0.0);
}

TEST_CASE("footprint radius rejects degenerate inputs") {
    CHECK_THROWS_AS(footprint_radius(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(footprint_radius(M_PI, 1.0), std::domain_error);
    CHECK_THROWS_AS(footprint_radius(-0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(footprint_radius(kAlpha5, -1.0), std::domain_error);
}

TEST_CASE("footprint radius is monotone in angle and distance") {
    double prev = 0.0;
    for (double d = 0.5; d <= 10.0; d += 0.5) {
        double r = footprint_radius(kAlpha5, d);
        CHECK(r > prev);
        prev = r;
    }
    prev = 0.0;
    for (double deg = 0.5; deg <= 10.0; deg += 0.5) {
        double r = footprint_radius(deg_to_rad(deg), 4.0);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("footprint area is pi r^2") {
    CHECK(footprint_area(0.1746436) == Approx(M_PI * 0.1746436 * 0.1746436).epsilon(1e-15));
    CHECK(footprint_area(0.1746436) == Approx(0.0958178).epsilon(5e-5));
    CHECK(footprint_area(0.0) == 0.0);
    CHECK_THROWS_AS(footprint_area(-1.0), std::domain_error);
}

TEST_CASE("illumination saturates at the panel") {
    RisPanel panel = RisPanel::from_elements(10453, 0.0024, 0.0024);
    CHECK(panel.s_ris == Approx(0.06020928).epsilon(1e-12));
    CHECK(panel.r_ris == Approx(0.13843846670636012).epsilon(1e-14));

    // Footprint larger than the panel: the panel bounds area, count, radius.
    Illumination sat = illuminated(panel, kAlpha5, 4.0);
    CHECK(sat.area == Approx(panel.s_ris).epsilon(1e-15));
    CHECK(sat.count == 10453);
    CHECK(sat.r_ira == Approx(panel.r_ris).epsilon(1e-15));

    // Footprint smaller than the panel: the beam bounds everything.
    Illumination part = illuminated(panel, kAlpha5, 1.0);
    CHECK(part.area == Approx(0.005988748758370869).epsilon(1e-14));
    CHECK(part.count == 1039);
    CHECK(part.r_ira == Approx(0.04366094290851206).epsilon(1e-14));

    // Vanishing footprint.
    Illumination zero = illuminated(panel, kAlpha5, 1e-12);
    CHECK(zero.count == 0);
    CHECK(zero.area == Approx(0.0).scale(1.0).epsilon(1e-20));
}

TEST_CASE("illuminated count never exceeds the element total") {
    RisPanel panel = RisPanel::from_elements(200, 0.01, 0.01);
    for (double d = 0.1; d < 20.0; d *= 1.7) {
        Illumination il = illuminated(panel, deg_to_rad(8.0), d);
        CHECK(il.count <= panel.n);
        CHECK(il.area <= panel.s_ris + 1e-15);
    }
}

TEST_CASE("beam volume: first hop cone, later hops cylinders") {
    double r4 = footprint_radius(kAlpha5, 4.0);
    CHECK(beam_volume(1, 3, kAlpha5, 0.1, 4.0) == Approx(M_PI * r4 * r4 * 4.0 / 3.0).epsilon(1e-14));
    CHECK(beam_volume(1, 3, kAlpha5, 0.1, 4.0) == Approx(0.127757).epsilon(5e-5));
    double r_ira = 0.04366094290851206;
    CHECK(beam_volume(2, 3, kAlpha5, r_ira, 4.0) == Approx(M_PI * r_ira * r_ira * 4.0).epsilon(1e-14));
    // A cone is one third of the cylinder with the same radius and length.
    double cone = beam_volume(1, 2, kAlpha5, 0.0, 7.0);
    double cyl = beam_volume(2, 2, kAlpha5, footprint_radius(kAlpha5, 7.0), 7.0);
    CHECK(cone == Approx(cyl / 3.0).epsilon(1e-12));
    CHECK(beam_volume(2, 2, kAlpha5, 0.1, 0.0) == 0.0);
}

TEST_CASE("beam volume rejects bad hop indices") {
    CHECK_THROWS_AS(beam_volume(0, 2, kAlpha5, 0.1, 1.0), std::out_of_range);
    CHECK_THROWS_AS(beam_volume(3, 2, kAlpha5, 0.1, 1.0), std::out_of_range);
    CHECK_THROWS_AS(beam_volume(1, 2, kAlpha5, 0.1, -1.0), std::domain_error);
}

TEST_CASE("last hop length clamps at zero") {
    CHECK(last_hop_length(8.0, {4.0}) == Approx(4.0).epsilon(1e-15));
    CHECK(last_hop_length(10.0, {2.0, 3.0}) == Approx(5.0).epsilon(1e-15));
    CHECK(last_hop_length(3.0, {2.0, 3.0}) == 0.0);
    CHECK(last_hop_length(5.0, {}) == Approx(5.0).epsilon(1e-15));
}

TEST_CASE("cone containment worked points") {
    Cone c{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, deg_to_rad(2.5), 4.0};
    CHECK(point_in_cone(c, {0.0, 0.0, 2.0}));
    CHECK_FALSE(point_in_cone(c, {0.1, 0.0, 2.0}));
    CHECK_FALSE(point_in_cone(c, {0.0, 0.0, 5.0}));
    CHECK_FALSE(point_in_cone(c, {0.0, 0.0, -0.5}));
    // On-surface point counts as inside (within tolerance).
    double r2 = std::tan(deg_to_rad(2.5)) * 2.0;
    CHECK(point_in_cone(c, {r2, 0.0, 2.0}));
}

TEST_CASE("cylinder containment worked points") {
    Cylinder c{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 0.05, 4.0};
    CHECK(point_in_cylinder(c, {0.04, 0.0, 1.0}));
    CHECK_FALSE(point_in_cylinder(c, {0.06, 0.0, 1.0}));
    CHECK_FALSE(point_in_cylinder(c, {0.04, 0.0, -0.1}));
    CHECK(point_in_cylinder(c, {0.05, 0.0, 4.0}));
    CHECK_FALSE(point_in_cylinder(c, {0.0, 0.0, 4.0 + 1e-6}));
}

TEST_CASE("containment agrees with the angular/radial oracle off the boundary") {
    std::mt19937_64 rng(2026);
    Vec3 apex{1.0, -2.0, 0.5};
    Vec3 axis = Vec3{0.3, 0.7, 0.2}.normalized();
    double half = deg_to_rad(7.0);
    double len = 5.0;
    Cone cone{apex, axis, half, len};
    Cylinder cyl{apex, axis, 0.4, len};
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        Vec3 p{oracle::uniform(rng, -1.0, 3.0), oracle::uniform(rng, -4.0, 4.0), oracle::uniform(rng, -2.0, 6.0)};
        auto co = oracle::cone_contains(apex, axis, half, len, p);
        if (co.slack > 1e-9) {
            CHECK(point_in_cone(cone, p) == co.inside);
            ++checked;
        }
        auto cy = oracle::cylinder_contains(apex, axis, 0.4, len, p);
        if (cy.slack > 1e-9) CHECK(point_in_cylinder(cyl, p) == cy.inside);
    }
    CHECK(checked > 19000); // the band must not swallow the sample
}

TEST_CASE("circle intersection area worked values") {
    CHECK(circle_intersection_area(1.0, 1.0, 1.0) == Approx(1.2283696986087573).epsilon(1e-12));
    CHECK(circle_intersection_area(1.0, 1.0, 1.0) == Approx(1.228370).epsilon(1e-6));
    // Concentric: the smaller disc.
    CHECK(circle_intersection_area(0.0, 2.0, 0.5) == Approx(M_PI * 0.25).epsilon(1e-12));
    CHECK(circle_intersection_area(0.0, 1.0, 1.0) == Approx(M_PI).epsilon(1e-12));
    // Disjoint.
    CHECK(circle_intersection_area(3.0, 1.0, 1.0) == 0.0);
    CHECK(circle_intersection_area(2.0, 1.0, 1.0) == Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("circle intersection area properties") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        double r1 = oracle::uniform(rng, 0.2, 2.0);
        double r2 = oracle::uniform(rng, 0.2, 2.0);
        double d = oracle::uniform(rng, 0.0, r1 + r2 + 0.5);
        double a = circle_intersection_area(d, r1, r2);
        CHECK(a == Approx(circle_intersection_area(d, r2, r1)).epsilon(1e-12)); // symmetric
        double cap = M_PI * std::min(r1, r2) * std::min(r1, r2);
        CHECK(a <= cap * (1.0 + 1e-12));
        CHECK(a >= 0.0);
        if (d >= r1 + r2) CHECK(a == 0.0);
    }
    CHECK_THROWS_AS(circle_intersection_area(-1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(circle_intersection_area(1.0, -1.0, 1.0), std::domain_error);
}

TEST_CASE("circle intersection area matches Monte Carlo") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        double r1 = oracle::uniform(rng, 0.5, 1.5);
        double r2 = oracle::uniform(rng, 0.5, 1.5);
        double d = oracle::uniform(rng, 0.2, 0.9) * (r1 + r2);
        double mc = oracle::mc_lens_area(r1, r2, d, 1000000, rng);
        double an = circle_intersection_area(d, r1, r2);
        CHECK(an == Approx(mc).epsilon(3e-3));
    }
}

TEST_CASE("interfered element count caps at both counts and the lens tiling") {
    RisPanel panel = RisPanel::from_elements(10453, 0.0024, 0.0024);
    // Large lens: capped by the smaller endpoint count.
    CHECK(interfered_element_count(1.0, panel, 1039, 10453) == 1039);
    CHECK(interfered_element_count(1.0, panel, 10453, 650) == 650);
    // Small lens: the tiling decides.
    double s = panel.dx * panel.dy;
    CHECK(interfered_element_count(10.5 * s, panel, 1039, 10453) == 10);
    CHECK(interfered_element_count(0.0, panel, 1039, 10453) == 0);
    CHECK_THROWS_AS(interfered_element_count(-1.0, panel, 10, 10), std::domain_error);
}
