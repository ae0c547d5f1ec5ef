#include "qrc/manifold.hpp"

#include <cmath>

namespace qrc {

Eigen::VectorXd canonical_rep(const Eigen::VectorXd& a) {
    Eigen::VectorXd out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = a[i] - std::floor(a[i]);
    return out;
}

double torus_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("torus_distance: dimension mismatch");
    const Eigen::VectorXd d = canonical_rep(a - b);
    const int m = static_cast<int>(d.size());
    // enumerate shifts in {-1,0,1}^m around the canonical representative
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> shift(m, -1);
    while (true) {
        double sq = 0.0;
        for (int i = 0; i < m; ++i) {
            const double c = d[i] + shift[i];
            sq += c * c;
        }
        best = std::min(best, sq);
        int i = 0;
        while (i < m && shift[i] == 1) shift[i++] = -1;
        if (i == m) break;
        ++shift[i];
    }
    return std::sqrt(best);
}

double target_distance(const TargetManifold& target, const Eigen::VectorXd& a,
                       const Eigen::VectorXd& b) {
    return target.is_torus() ? torus_distance(a, b) : (a - b).norm();
}

}  // namespace qrc
