#pragma once

#include <utility>
#include <vector>

#include "polycc/vec3.hpp"

namespace polycc {

// Bodies closer than this are treated as coincident; construction refuses to
// produce them and force evaluation reports the offending pair.
inline constexpr double collision_tolerance = 1e-9;

// Twist angle between the rings. The angles that admit central configurations
// are exact rationals of pi, so they are kept as an integer numerator of pi/N
// (numer 0 or 1) instead of a rounded double; arbitrary angles fall back to a
// raw radian value reduced into [0, 2pi).
struct twist {
    bool canonical = true;
    int numer = 0;      // angle = numer*pi/N when canonical
    double raw = 0.0;   // radians otherwise

    static twist zero() { return {true, 0, 0.0}; }
    static twist half_step() { return {true, 1, 0.0}; }
    // Reduces mod 2pi and snaps to an exact angle when within 1e-12 of it.
    static twist from_radians(double radians, int n);

    double radians(int n) const;
};

struct twisted_polygon_params {
    int n = 0;          // bodies per ring
    double a = 1.0;     // circumradius of the second ring (first ring is 1)
    double b = 1.0;     // mass ratio of second-ring bodies to first-ring bodies
    double h = 0.0;     // vertical separation between ring planes
    twist theta;        // twist angle of the second ring
    double m = 1.0;     // mass of each first-ring body

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

struct body {
    double mass = 0.0;
    vec3 position;
};

struct body_system {
    std::vector<body> bodies;
};

// Ring 1: mass m at (cos(2k pi/N), sin(2k pi/N), 0) for k = 1..N.
// Ring 2: mass b*m at (a cos(2k pi/N + theta), a sin(2k pi/N + theta), h).
body_system build_configuration(const twisted_polygon_params& params);

double total_mass(const body_system& sys);
vec3 center_of_mass(const body_system& sys);

// Smallest pairwise distance; the index pair is reported through `pair` when given.
double min_pair_distance(const body_system& sys, std::pair<int, int>* pair = nullptr);

}  // namespace polycc
