#include "qrc/density.hpp"

#include <algorithm>
#include <cmath>

namespace qrc {

double circle_distance(double x, double y) {
    double d = std::fmod(std::abs(x - y), 1.0);
    return std::min(d, 1.0 - d);
}

double density_probe(const TorusLinearCurve& f, const Eigen::VectorXd& v, const GridSpec& grid) {
    if (grid.step <= 0 || grid.hi < grid.lo)
        throw std::invalid_argument("density_probe: malformed grid");
    const int n = f.curve.domain_dim;
    const Eigen::VectorXd target = canonical_rep(v);
    const long per_axis = static_cast<long>(std::floor((grid.hi - grid.lo) / grid.step)) + 1;

    // the probe separates: f(x) = (x, x.y), so minimizing over the grid only
    // needs the torus distance evaluated pointwise
    std::vector<long> odo(n, 0);
    Eigen::VectorXd x(n);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        for (int i = 0; i < n; ++i) x[i] = grid.lo + grid.step * odo[i];
        best = std::min(best, torus_distance(f.curve.map(x), target));
        int i = 0;
        while (i < n && odo[i] == per_axis - 1) odo[i++] = 0;
        if (i == n) break;
        ++odo[i];
    }
    return best;
}

ObstructionResult rational_obstruction(const std::vector<Rational>& y,
                                       const std::vector<Rational>& v_head, double v_last) {
    if (y.size() != v_head.size())
        throw std::invalid_argument("rational_obstruction: slope and target length mismatch");
    // generators y_j / q_j of the subgroup of Q/Z; the group they generate is
    // cyclic of order lcm of the reduced denominators
    std::int64_t order = 1;
    for (size_t j = 0; j < y.size(); ++j) {
        const Rational g = (y[j] / Rational(v_head[j].den)).mod1();
        order = std::lcm(order, g.den);
        if (order > 1'000'000'000)
            throw std::overflow_error("rational_obstruction: obstruction set too large");
    }
    ObstructionResult out;
    out.obstruction_set.reserve(order);
    for (std::int64_t t = 0; t < order; ++t) out.obstruction_set.emplace_back(t, order);

    const double target = v_last - std::floor(v_last);
    double min_dist = std::numeric_limits<double>::infinity();
    for (const Rational& e : out.obstruction_set)
        min_dist = std::min(min_dist, circle_distance(target, e.to_double()));
    out.radius = min_dist / 4.0;
    return out;
}

}  // namespace qrc
