#pragma once

#include "qrc/curve.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace qrc {

struct QuadratureSpec {
    enum class Method { TensorPolar, MonteCarlo };
    Method method = Method::TensorPolar;
    long budget = 16384;  // tensor: total node count, split ~1:4 radial:angular
    std::uint64_t seed = 0;
    double tol = 1e-6;

    static QuadratureSpec defaults_for(int n) {
        QuadratureSpec s;
        s.method = n <= 3 ? Method::TensorPolar : Method::MonteCarlo;
        if (s.method == Method::MonteCarlo) s.budget = 1'000'000;
        return s;
    }
};

struct IntegralEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    long budget_used = 0;
};

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

// integral of g over the ball B^n(center, r). Tensor-polar (Gauss-Legendre in
// radius x product angles, n <= 4) or rejection-free polar Monte Carlo. With
// `average` the result is divided by |B^n(r)|.
IntegralEstimate ball_integral(const ScalarField& g, const Eigen::VectorXd& center, double r,
                               const QuadratureSpec& spec, bool average = false);

// integral of the pulled-back (n-1)-form f^* tau over the centered sphere
// S^{n-1}(r), oriented outward-normal-first so Stokes holds with a plus sign.
// Supported for domain dimension 2 and 3.
IntegralEstimate sphere_integral(const CurveMap& f, const FormField& tau, double r,
                                 const QuadratureSpec& spec);

// sum of log(b/a) over normalized disjoint intervals [a,b] within [1, inf).
double log_measure(std::vector<std::pair<double, double>> intervals);

double unit_ball_volume(int n);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// order-independent pairwise summation
double pairwise_sum(const std::vector<double>& values);

}  // namespace qrc
