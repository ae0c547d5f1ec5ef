#pragma once

#include "qrc/comass.hpp"
#include "qrc/form_field.hpp"
#include "qrc/manifold.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qrc {

// Smooth map R^n -> target (covering coordinates). The analytic jacobian is
// optional; central finite differences fill in otherwise.
struct CurveMap {
    int domain_dim = 2;
    TargetManifold target;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;  // may be empty
    double fd_step = 1e-5;

    static CurveMap identity(int n);
    static CurveMap linear(const Eigen::MatrixXd& a, TargetManifold target);
    // demo map (x1^2, x2) on R^2
    static CurveMap poly_demo();
};

// The torus linear family x -> (x, x . y) followed by the lattice quotient.
struct TorusLinearCurve {
    Eigen::VectorXd slope;
    CurveMap curve;

    static TorusLinearCurve make(const Eigen::VectorXd& y);
    // the distortion bound (1 + |y|)^n
    double distortion_bound() const;
};

// Column j = df/dx_j; analytic when available, central differences otherwise.
Eigen::MatrixXd differential(const CurveMap& f, const Eigen::VectorXd& x);

// Largest singular value.
double operator_norm(const Eigen::MatrixXd& d);

// The pullback density: omega_{f(x)}(d_1 f, ..., d_n f).
double star_pullback(const CurveMap& f, const FormField& omega, const Eigen::VectorXd& x);

// tau_{f(x)}(Df v_1, ..., Df v_k).
double pullback_eval(const CurveMap& f, const FormField& tau, const Eigen::VectorXd& x,
                     const std::vector<Eigen::VectorXd>& vectors);

struct DistortionValue {
    enum class Flag { Ok, Degenerate, SignViolation };
    Flag flag = Flag::Ok;
    double value = 0.0;  // meaningful only when flag == Ok
};

struct DistortionConfig {
    OptimizerConfig comass_cfg;
    double degenerate_eta = 1e-12;
};

// comass(omega at f(x)) * |Df(x)|^n / density. Densities at or below
// eta * numerator scale are flagged degenerate; negative densities are flagged
// sign violations.
DistortionValue distortion_quotient(const CurveMap& f, const FormField& omega,
                                    const Eigen::VectorXd& x, const DistortionConfig& cfg = {});

struct SampleSpec {
    long count = 1000;
    std::uint64_t seed = 0;
    double box = 1.0;  // samples uniform on [-box, box]^n
};

struct DistortionReport {
    std::string sample_description;
    double k_hat = 0.0;
    Eigen::VectorXd argmax;
    std::optional<double> comparison_bound;  // (1+|y|)^n for the torus family
    bool bound_satisfied = true;
    long degenerate_count = 0;
    bool sign_violation = false;
    Eigen::VectorXd violation_point;
};

DistortionReport distortion_sup(const CurveMap& f, const FormField& omega,
                                const SampleSpec& samples, const DistortionConfig& cfg = {},
                                std::optional<double> comparison_bound = std::nullopt);

}  // namespace qrc
