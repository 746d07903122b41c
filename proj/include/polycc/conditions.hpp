#pragma once

#include <array>

#include "polycc/body_system.hpp"

namespace polycc {

struct complex_pair {
    double re = 0.0;
    double im = 0.0;
};

// Residuals of the two reduced equations equivalent to the full
// central-configuration condition (valid for h > 0, theta in {0, pi/N}):
//   r1 = b a y - (x - z)
//   r2 = (b/a^2) x - b a z - y
struct lemma32_result {
    double r1 = 0.0;
    double r2 = 0.0;
};
lemma32_result lemma32_residual(const twisted_polygon_params& params);

// The three per-ring balance equations, each of which must equal lambda N/M.
// They are evaluated verbatim as complex sums; the common constant is anchored
// to the second equation, which is real and positive by inspection. values[i]
// holds the i-th evaluation, residuals[i] the difference from the anchor.
struct lemma34_result {
    std::array<complex_pair, 3> values;
    std::array<complex_pair, 3> residuals;
};
lemma34_result lemma34_residual(const twisted_polygon_params& params);

// Combined report: both reduced residuals, the three anchored complex
// residuals, and the max absolute value over every entry component.
struct condition_residual {
    double r32_1 = 0.0;
    double r32_2 = 0.0;
    std::array<complex_pair, 3> r34;
    double norm = 0.0;
};
condition_residual evaluate_conditions(const twisted_polygon_params& params);

// |y - (x - a b z)|, the identity obtained by eliminating the common constant
// between the first two balance equations.
double balance_identity_residual(const twisted_polygon_params& params);

// True iff the reduced-equation verdict at `tol` matches the full per-body
// residual verdict at tol' = tol * m^2 * max(1, b).
bool cross_validate(const twisted_polygon_params& params, double tol);

}  // namespace polycc
