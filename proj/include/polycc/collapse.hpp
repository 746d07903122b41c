#pragma once

#include <vector>

#include "polycc/body_system.hpp"

namespace polycc {

struct trajectory_report {
    std::vector<double> times;           // accepted step times, starting at 0
    std::vector<double> shape_drift;     // per time: max over pairs |r_kj(t)/r_kj(0) - s(t)|
    std::vector<double> energy_drift;    // per time: |E(t) - E(0)| / |E(0)|
    double max_shape_drift = 0.0;
    double max_energy_drift = 0.0;
    double max_linear_momentum = 0.0;    // norm; starts and should stay at zero
    double max_angular_momentum = 0.0;   // norm
    bool halted_early = false;           // close approach cut the window short
};

// Releases the system from rest and integrates Newton's equations with a
// fourth-order symmetric composition scheme. A step whose energy drift
// exceeds 1e-6 is rejected and retried with half the step (floor 1e-9,
// exhaustion throws); integration stops early once the closest pair falls
// under ten times the collision tolerance.
trajectory_report integrate_release(const body_system& sys, double t_end, double dt);

// Window that stays comfortably clear of total collapse: a quarter of the
// free-fall time pi/(2 sqrt(2 lambda)), capped at 0.2.
double collapse_window(const body_system& sys);

}  // namespace polycc
