#pragma once

#include "qrc/covector.hpp"

#include <cstdint>

namespace qrc {

struct OptimizerConfig {
    int restarts = 64;
    double tol = 1e-8;
    int max_iters = 500;
    std::uint64_t seed = 0;
};

struct ComassResult {
    double value = 0.0;
    // best orthonormal k-frame found, columns are the frame vectors
    Eigen::MatrixXd frame;
};

// Comass norm: max over orthonormal k-frames of |a(v_1,...,v_k)|, by gradient
// ascent with QR re-orthonormalization and random restarts. The returned value
// is a certified lower bound for the true comass.
ComassResult comass(const Covector& a, const OptimizerConfig& cfg = {});

// Validation oracle: max of |a(frame)| over uniformly random orthonormal
// k-frames. Always a lower bound for comass.
double comass_oracle(const Covector& a, long samples, std::uint64_t seed = 0);

// Random orthonormal m x k frame (Gaussian matrix, thin QR).
Eigen::MatrixXd random_frame(int m, int k, std::uint64_t seed);

}  // namespace qrc
