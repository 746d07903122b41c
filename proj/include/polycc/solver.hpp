#pragma once

#include <string>
#include <vector>

#include "polycc/body_system.hpp"

namespace polycc {

// f(h) = x - z(h) - y(h) for the equal-size equal-mass case a = b = 1; its
// unique positive zero is the ring separation of the central configuration.
double equal_case_f(int n, const twist& theta, double h);

struct solve_result {
    bool found = false;
    double h_root = 0.0;
    double lambda = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double residual_at_root = 0.0;
    std::string note;
};

// Bracketed bisection on f. Bracket growth starts from (1e-3, 1) and doubles
// the upper end; if no sign change appears up to h = 1e3 a no-root report is
// returned instead of an error.
solve_result solve_h(int n, const twist& theta);

struct grid_spec {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
};

struct scan_cell {
    double a = 0.0;
    double b = 0.0;
    double min_residual = 0.0;
    double argmin_h = 0.0;
};

// For every (a, b) cell: the minimum over h (coarse geometric grid plus local
// minimization around the coarse argmin) of sqrt(r1^2 + r2^2) of the reduced
// conditions. Grid points with |a-1| < delta_excl or |b-1| < delta_excl are
// dropped: the residual vanishes at the known equal-case solution, so a gap
// claim needs an excluded neighborhood. a and b grids are linear, the h grid
// is geometric on (lo, hi]. threads = 0 means one per processor.
std::vector<scan_cell> certify_no_solution(int n, const twist& theta, grid_spec a_grid,
                                           grid_spec b_grid, grid_spec h_grid,
                                           double delta_excl = 0.05, int threads = 0);

struct suite_check {
    std::string name;
    long samples = 0;
    long violations = 0;
    double worst = 0.0;   // closest approach to the asserted bound
};

struct suite_report {
    std::vector<suite_check> checks;
    bool pass = false;
};

// Randomized verification of the proof-step claims: y > 0, z > y, x > 0 with
// agreement of the two x formulas, and the equal-size sub-case scan at b = 1.
suite_report step_property_suite(int n_max, long samples, unsigned long long seed);

}  // namespace polycc
