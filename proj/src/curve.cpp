#include "qrc/curve.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qrc {

CurveMap CurveMap::identity(int n) {
    CurveMap f;
    f.domain_dim = n;
    f.target = TargetManifold::euclidean(n);
    f.map = [](const Eigen::VectorXd& x) { return x; };
    f.jacobian = [n](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(n, n); };
    return f;
}

CurveMap CurveMap::linear(const Eigen::MatrixXd& a, TargetManifold target) {
    if (a.rows() != target.dim)
        throw std::invalid_argument("CurveMap::linear: matrix rows must match target dimension");
    CurveMap f;
    f.domain_dim = static_cast<int>(a.cols());
    f.target = target;
    f.map = [a](const Eigen::VectorXd& x) -> Eigen::VectorXd { return a * x; };
    f.jacobian = [a](const Eigen::VectorXd&) { return a; };
    return f;
}

CurveMap CurveMap::poly_demo() {
    CurveMap f;
    f.domain_dim = 2;
    f.target = TargetManifold::euclidean(2);
    f.map = [](const Eigen::VectorXd& x) {
        Eigen::VectorXd y(2);
        y << x[0] * x[0], x[1];
        return y;
    };
    f.jacobian = [](const Eigen::VectorXd& x) {
        Eigen::MatrixXd j(2, 2);
        j << 2.0 * x[0], 0.0, 0.0, 1.0;
        return j;
    };
    return f;
}

TorusLinearCurve TorusLinearCurve::make(const Eigen::VectorXd& y) {
    const int n = static_cast<int>(y.size());
    if (n < 2) throw std::invalid_argument("TorusLinearCurve: domain dimension must be >= 2");
    TorusLinearCurve t;
    t.slope = y;
    t.curve.domain_dim = n;
    t.curve.target = TargetManifold::flat_torus(n + 1);
    t.curve.map = [y, n](const Eigen::VectorXd& x) {
        Eigen::VectorXd out(n + 1);
        out.head(n) = x;
        out[n] = x.dot(y);
        return out;
    };
    Eigen::MatrixXd d(n + 1, n);
    d.topRows(n) = Eigen::MatrixXd::Identity(n, n);
    d.row(n) = y.transpose();
    t.curve.jacobian = [d](const Eigen::VectorXd&) { return d; };
    return t;
}

double TorusLinearCurve::distortion_bound() const {
    return std::pow(1.0 + slope.norm(), slope.size());
}

Eigen::MatrixXd differential(const CurveMap& f, const Eigen::VectorXd& x) {
    if (x.size() != f.domain_dim)
        throw std::invalid_argument("differential: point dimension mismatch");
    if (f.jacobian) return f.jacobian(x);
    const double h = f.fd_step;
    Eigen::MatrixXd d(f.target.dim, f.domain_dim);
    for (int j = 0; j < f.domain_dim; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        d.col(j) = (f.map(xp) - f.map(xm)) / (2.0 * h);
    }
    return d;
}

double operator_norm(const Eigen::MatrixXd& d) {
    if (!d.allFinite()) throw std::invalid_argument("operator_norm: non-finite entries");
    if (d.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
    return svd.singularValues()[0];
}

double star_pullback(const CurveMap& f, const FormField& omega, const Eigen::VectorXd& x) {
    if (omega.degree != f.domain_dim)
        throw std::invalid_argument("star_pullback: form degree must equal domain dimension");
    const Covector fiber = omega.eval(f.map(x));
    return fiber.eval_on_columns(differential(f, x));
}

double pullback_eval(const CurveMap& f, const FormField& tau, const Eigen::VectorXd& x,
                     const std::vector<Eigen::VectorXd>& vectors) {
    if (static_cast<int>(vectors.size()) != tau.degree)
        throw std::invalid_argument("pullback_eval: vector count must equal form degree");
    const Eigen::MatrixXd d = differential(f, x);
    Eigen::MatrixXd cols(f.target.dim, tau.degree);
    for (int j = 0; j < tau.degree; ++j) cols.col(j) = d * vectors[j];
    return tau.eval(f.map(x)).eval_on_columns(cols);
}

DistortionValue distortion_quotient(const CurveMap& f, const FormField& omega,
                                    const Eigen::VectorXd& x, const DistortionConfig& cfg) {
    const double density = star_pullback(f, omega, x);
    const Eigen::MatrixXd d = differential(f, x);
    const double numerator =
        comass(omega.eval(f.map(x)), cfg.comass_cfg).value *
        std::pow(operator_norm(d), f.domain_dim);
    DistortionValue out;
    if (density < -cfg.degenerate_eta * std::max(numerator, 1.0)) {
        out.flag = DistortionValue::Flag::SignViolation;
        return out;
    }
    if (density <= cfg.degenerate_eta * std::max(numerator, 1.0)) {
        out.flag = DistortionValue::Flag::Degenerate;
        return out;
    }
    out.value = numerator / density;
    return out;
}

DistortionReport distortion_sup(const CurveMap& f, const FormField& omega,
                                const SampleSpec& samples, const DistortionConfig& cfg,
                                std::optional<double> comparison_bound) {
    DistortionReport report;
    std::ostringstream desc;
    desc << samples.count << " uniform samples on [-" << samples.box << "," << samples.box
         << "]^" << f.domain_dim << ", seed " << samples.seed;
    report.sample_description = desc.str();
    report.argmax = Eigen::VectorXd::Zero(f.domain_dim);
    report.comparison_bound = comparison_bound;

    std::mt19937_64 rng(samples.seed);
    std::uniform_real_distribution<double> unit(-samples.box, samples.box);
    for (long s = 0; s < samples.count; ++s) {
        Eigen::VectorXd x(f.domain_dim);
        for (int i = 0; i < f.domain_dim; ++i) x[i] = unit(rng);
        const DistortionValue q = distortion_quotient(f, omega, x, cfg);
        if (q.flag == DistortionValue::Flag::SignViolation) {
            report.sign_violation = true;
            report.violation_point = x;
            return report;
        }
        if (q.flag == DistortionValue::Flag::Degenerate) {
            ++report.degenerate_count;
            continue;
        }
        if (q.value > report.k_hat) {
            report.k_hat = q.value;
            report.argmax = x;
        }
    }
    if (comparison_bound) report.bound_satisfied = report.k_hat <= *comparison_bound * (1.0 + 1e-9);
    return report;
}

}  // namespace qrc
