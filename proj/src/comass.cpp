#include "qrc/comass.hpp"

#include <cmath>
#include <random>

namespace qrc {

Eigen::MatrixXd random_frame(int m, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(m, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, k);
    return q;
}

namespace {

Eigen::MatrixXd retract(const Eigen::MatrixXd& v) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    return qr.householderQ() * Eigen::MatrixXd::Identity(v.rows(), v.cols());
}

// Euclidean gradient of the multilinear form at frame V: column j of the
// gradient has entries a(v_1,..,e_i at slot j,..,v_k).
Eigen::MatrixXd form_gradient(const Covector& a, const Eigen::MatrixXd& v) {
    const int m = static_cast<int>(v.rows());
    const int k = static_cast<int>(v.cols());
    Eigen::MatrixXd grad(m, k);
    Eigen::MatrixXd probe = v;
    for (int j = 0; j < k; ++j) {
        const Eigen::VectorXd saved = probe.col(j);
        for (int i = 0; i < m; ++i) {
            probe.col(j) = Eigen::VectorXd::Unit(m, i);
            grad(i, j) = a.eval_on_columns(probe);
        }
        probe.col(j) = saved;
    }
    return grad;
}

}  // namespace

ComassResult comass(const Covector& a, const OptimizerConfig& cfg) {
    const int m = a.ambient_dim();
    const int k = a.degree();
    if (k < 1) throw std::invalid_argument("comass: degree must be >= 1");
    ComassResult best;
    best.frame = Eigen::MatrixXd::Identity(m, k);
    if (a.is_zero()) return best;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Eigen::MatrixXd v = restart == 0 ? Eigen::MatrixXd::Identity(m, k)
                                         : random_frame(m, k, cfg.seed * 1000003ULL + restart);
        double value = a.eval_on_columns(v);
        double sign = value >= 0 ? 1.0 : -1.0;
        double step = 0.1;
        for (int iter = 0; iter < cfg.max_iters && step > cfg.tol; ++iter) {
            const Eigen::MatrixXd grad = sign * form_gradient(a, v);
            // project out the component tangent to nothing useful: plain
            // ascent step followed by QR retraction back to the frame manifold
            Eigen::MatrixXd trial = retract(v + step * grad);
            double trial_value = a.eval_on_columns(trial);
            if (sign * trial_value > sign * value + cfg.tol * 1e-3) {
                v = trial;
                value = trial_value;
                if (sign * value < 0) sign = -sign;
            } else {
                step *= 0.5;
            }
        }
        if (std::abs(value) > best.value) {
            best.value = std::abs(value);
            best.frame = v;
        }
    }
    return best;
}

double comass_oracle(const Covector& a, long samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("comass_oracle: samples must be >= 1");
    if (a.is_zero()) return 0.0;
    const int m = a.ambient_dim();
    const int k = a.degree();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(m, k);
    double best = 0.0;
    for (long s = 0; s < samples; ++s) {
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < m; ++i) g(i, j) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, k);
        best = std::max(best, std::abs(a.eval_on_columns(q)));
    }
    return best;
}

}  // namespace qrc
