#pragma once

#include "qrc/curve.hpp"
#include "qrc/rational.hpp"

#include <vector>

namespace qrc {

struct GridSpec {
    double lo = 0.0;
    double hi = 50.0;
    double step = 0.1;
};

// min over the grid [lo,hi]^n (step spacing) of the torus distance between
// f(x) and the canonical representative of v.
double density_probe(const TorusLinearCurve& f, const Eigen::VectorXd& v, const GridSpec& grid);

struct ObstructionResult {
    // the finite subgroup { k_1 y_1/q_1 + ... + k_n y_n/q_n mod 1 } of Q/Z,
    // sorted, computed exactly
    std::vector<Rational> obstruction_set;
    // (min circle distance from v_{n+1} mod 1 to the set) / 4
    double radius = 0.0;
};

// The separation certificate for a rational-slope torus curve and a target
// point whose first n coordinates are rational and last coordinate is
// irrational (asserted by the caller via the irrational tag on input parsing).
// Exact rational arithmetic throughout; floating point only in the final
// circle distance to the irrational coordinate.
ObstructionResult rational_obstruction(const std::vector<Rational>& y,
                                       const std::vector<Rational>& v_head, double v_last);

// circle distance between x mod 1 and y mod 1
double circle_distance(double x, double y);

}  // namespace qrc
