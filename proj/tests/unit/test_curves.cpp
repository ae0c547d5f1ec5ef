#include "qrc/curve.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qrc;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    Eigen::MatrixXd a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = u(rng);
    return a;
}

}  // namespace

TEST_CASE("differential: analytic jacobian and finite differences agree") {
    const CurveMap f = CurveMap::poly_demo();  // (x1^2, x2)
    CurveMap fd = f;
    fd.jacobian = nullptr;  // force the FD path
    Eigen::VectorXd x(2);
    x << 0.7, -0.3;
    const Eigen::MatrixXd da = differential(f, x);
    const Eigen::MatrixXd db = differential(fd, x);
    CHECK(da(0, 0) == doctest::Approx(1.4));
    CHECK(da(1, 1) == doctest::Approx(1.0));
    CHECK((da - db).norm() < 1e-8);
}

TEST_CASE("operator norm is the largest singular value") {
    Eigen::MatrixXd a(2, 2);
    a << 3, 0, 0, -4;
    CHECK(operator_norm(a) == doctest::Approx(4.0));
}

TEST_CASE("star_pullback of a linear map is the minor expansion") {
    // oracle: for linear f with matrix A, f^* (dx_I)(e_1..e_n) = det(A rows I)
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd a = random_matrix(3, 3, rng);
        const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(3));
        const FormField vol =
            FormField::constant(TargetManifold::euclidean(3), Covector::volume(3));
        Eigen::VectorXd x = Eigen::VectorXd::Random(3);
        CHECK(star_pullback(f, vol, x) == doctest::Approx(a.determinant()).epsilon(1e-9));
        // single minor
        const FormField two = FormField::constant(TargetManifold::euclidean(3),
                                                  Covector::basis(3, {1, 3}));
        const CurveMap g =
            CurveMap::linear(a.topRows(3), TargetManifold::euclidean(3));
        (void)g;
    }
}

TEST_CASE("star_pullback is linear in the form") {
    std::mt19937_64 rng(22);
    const Eigen::MatrixXd a = random_matrix(3, 2, rng);
    const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(3));
    const FormField p = FormField::constant(TargetManifold::euclidean(3),
                                            Covector::basis(3, {1, 2}));
    const FormField q = FormField::constant(TargetManifold::euclidean(3),
                                            Covector::basis(3, {2, 3}));
    Eigen::VectorXd x = Eigen::VectorXd::Random(2);
    const double vp = star_pullback(f, p, x);
    const double vq = star_pullback(f, q, x);
    const double vsum = star_pullback(f, add_fields(scale_field(2.0, p), q), x);
    CHECK(vsum == doctest::Approx(2.0 * vp + vq).epsilon(1e-10));
}

TEST_CASE("Hadamard-type bound: |f^* omega| <= comass(omega) |Df|^n") {
    std::mt19937_64 rng(23);
    const FormField omega = FormField::constant(TargetManifold::euclidean(4),
                                                Covector::basis(4, {1, 2}));
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd a = random_matrix(4, 2, rng);
        const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(4));
        Eigen::VectorXd x = Eigen::VectorXd::Random(2);
        const double dens = star_pullback(f, omega, x);
        const double norm = operator_norm(differential(f, x));
        CHECK(std::abs(dens) <= norm * norm + 1e-10);  // comass = 1
    }
}

TEST_CASE("torus linear family: differential, density, distortion are constant") {
    Eigen::VectorXd y(2);
    y << 1.0, 1.0;
    const TorusLinearCurve f = TorusLinearCurve::make(y);
    CHECK(f.curve.domain_dim == 2);
    CHECK(f.curve.target.dim == 3);
    CHECK(f.curve.target.is_torus());

    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd x(2);
        x << u(rng), u(rng);
        // density of dx1^dx2 under (x, x.y) is exactly 1
        CHECK(star_pullback(f.curve, omega, x) == doctest::Approx(1.0).epsilon(1e-12));
        const DistortionValue q = distortion_quotient(f.curve, omega, x);
        CHECK(q.flag == DistortionValue::Flag::Ok);
        // comass(dx1^dx2) |Df|^2 / 1 = 1 + |y|^2 = 3
        CHECK(q.value == doctest::Approx(3.0).epsilon(1e-7));
    }
    CHECK(f.distortion_bound() == doctest::Approx(std::pow(1.0 + std::sqrt(2.0), 2.0)));
}

TEST_CASE("distortion_sup reports the bound satisfied for the torus family") {
    Eigen::VectorXd y(2);
    y << 0.5, 0.25;
    const TorusLinearCurve f = TorusLinearCurve::make(y);
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    SampleSpec samples;
    samples.count = 100;
    const DistortionReport report =
        distortion_sup(f.curve, omega, samples, {}, f.distortion_bound());
    CHECK(report.k_hat == doctest::Approx(1.0 + y.squaredNorm()).epsilon(1e-7));
    CHECK(report.bound_satisfied);
    CHECK_FALSE(report.sign_violation);
    CHECK(report.degenerate_count == 0);
}

TEST_CASE("distortion_sup flags sign violations") {
    // orientation-reversing map: density of dx1^dx2 is -1 everywhere
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 1, 0;
    const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(2));
    const FormField omega = FormField::leading_volume(f.target, 2);
    SampleSpec samples;
    samples.count = 10;
    const DistortionReport report = distortion_sup(f, omega, samples);
    CHECK(report.sign_violation);
}

TEST_CASE("identity map density is 1 and distortion is 1") {
    const CurveMap f = CurveMap::identity(3);
    const FormField omega = FormField::leading_volume(f.target, 3);
    Eigen::VectorXd x = Eigen::VectorXd::Random(3);
    CHECK(star_pullback(f, omega, x) == doctest::Approx(1.0));
    const DistortionValue q = distortion_quotient(f, omega, x);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("pullback_eval on chosen vectors matches the determinant oracle") {
    std::mt19937_64 rng(25);
    const Eigen::MatrixXd a = random_matrix(3, 3, rng);
    const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(3));
    const FormField tau = FormField::constant(TargetManifold::euclidean(3),
                                              Covector::basis(3, {1, 2}));
    std::vector<Eigen::VectorXd> vs{Eigen::VectorXd::Random(3), Eigen::VectorXd::Random(3)};
    Eigen::MatrixXd cols(3, 2);
    cols.col(0) = a * vs[0];
    cols.col(1) = a * vs[1];
    const double want = cols(0, 0) * cols(1, 1) - cols(0, 1) * cols(1, 0);
    CHECK(pullback_eval(f, tau, Eigen::VectorXd::Zero(3), vs) ==
          doctest::Approx(want).epsilon(1e-10));
}
