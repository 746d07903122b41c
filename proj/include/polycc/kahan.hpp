#pragma once

#include <cmath>

namespace polycc {

// Neumaier-compensated accumulator. Terms are fed in a fixed index order so
// results are bit-reproducible on one platform.
struct kahan_sum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace polycc
