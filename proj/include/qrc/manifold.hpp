#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace qrc {

// Supported targets: Euclidean R^m and the flat torus R^m / Z^m with the unit
// lattice. Points are always handled in covering coordinates.
struct TargetManifold {
    enum class Kind { Euclidean, FlatTorus };
    Kind kind = Kind::Euclidean;
    int dim = 2;

    static TargetManifold euclidean(int m) { return {Kind::Euclidean, m}; }
    static TargetManifold flat_torus(int m) { return {Kind::FlatTorus, m}; }
    bool is_torus() const { return kind == Kind::FlatTorus; }
};

// Componentwise reduction to [0,1).
Eigen::VectorXd canonical_rep(const Eigen::VectorXd& a);

// Geodesic distance on the flat torus: min over lattice vectors k of |a-b-k|.
// The search covers the 3^m lattice translates nearest to the canonical
// representative of a-b, which suffices for the unit lattice.
double torus_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Distance on the given target (plain Euclidean norm or torus quotient).
double target_distance(const TargetManifold& target, const Eigen::VectorXd& a,
                       const Eigen::VectorXd& b);

}  // namespace qrc
