#pragma once

#include <vector>

#include "polycc/body_system.hpp"
#include "polycc/vec3.hpp"

namespace polycc {

inline constexpr double default_central_tolerance = 1e-9;

struct cc_report {
    double lambda = 0.0;
    std::vector<vec3> residuals;   // one per body
    double max_residual = 0.0;     // max absolute component over all residuals
    bool is_central = false;
    double tolerance = default_central_tolerance;
};

// U = sum over pairs of m_j m_k / r_jk (positive). Throws std::domain_error
// naming the pair if any distance is at or below the collision tolerance.
double potential(const body_system& sys);

// I = sum of m_k |q_k - c0|^2 about the center of mass.
double moment_of_inertia(const body_system& sys);

// lambda = U/I.
double lambda_of(const body_system& sys);

// Residual of the central-configuration condition for each body k:
//   sum_{j != k} m_j m_k (q_j - q_k)/r_jk^3 + lambda m_k (q_k - c0)
cc_report cc_residual(const body_system& sys, double tolerance = default_central_tolerance);

// Gravitational acceleration on each body (used by the integrator).
std::vector<vec3> accelerations(const body_system& sys, const std::vector<vec3>& positions);

}  // namespace polycc
