#include "qrc/analysis.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrc;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

QuadratureSpec tensor_spec(long budget = 16384) {
    QuadratureSpec s;
    s.method = QuadratureSpec::Method::TensorPolar;
    s.budget = budget;
    return s;
}

TorusLinearCurve diagonal_curve() {
    Eigen::VectorXd y(2);
    y << 1.0, 1.0;
    return TorusLinearCurve::make(y);
}

}  // namespace

TEST_CASE("epsilon_and_constant reproduces the explicit formulas") {
    // n = 2, p = 2, C_p = 1: eps = 1, C = |B^2|^{1/2} 2^{1} = 2 sqrt(pi)
    auto [eps, c] = epsilon_and_constant(2, 2.0, 1.0);
    CHECK(eps == doctest::Approx(1.0));
    CHECK(c == doctest::Approx(2.0 * std::sqrt(kPi)));
    // n = 3, p = 3/2, C_p = 2: eps = 1, C = (4 pi/3)^{1/3} 2^2 / 2
    auto [eps2, c2] = epsilon_and_constant(3, 1.5, 2.0);
    CHECK(eps2 == doctest::Approx(1.0));
    CHECK(c2 == doctest::Approx(0.5 * std::cbrt(4.0 * kPi / 3.0) * 4.0));
    CHECK_THROWS(epsilon_and_constant(2, 1.0, 1.0));
    CHECK_THROWS(epsilon_and_constant(2, 2.0, 0.0));
}

TEST_CASE("growth of the identity map is pi r^2") {
    const CurveMap f = CurveMap::identity(2);
    const FormField omega = FormField::leading_volume(f.target, 2);
    const GrowthReport report = growth_function(f, omega, {1.0, 2.0, 4.0}, 1.0, tensor_spec());
    REQUIRE(report.values.size() == 3);
    CHECK(report.values[0].value == doctest::Approx(kPi).epsilon(1e-9));
    CHECK(report.values[1].value == doctest::Approx(4.0 * kPi).epsilon(1e-9));
    CHECK(report.normalized[1] == doctest::Approx(2.0 * kPi).epsilon(1e-9));
    CHECK(report.slope == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("fast growth holds for the diagonal torus curve") {
    const TorusLinearCurve f = diagonal_curve();
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    const GrowthReport report =
        growth_function(f.curve, omega, {1.0, 2.0, 4.0, 8.0}, 1.0, tensor_spec());
    // density is exactly 1, so A(r) = pi r^2 and the normalized values grow
    CHECK(report.tail_min == doctest::Approx(4.0 * kPi).epsilon(1e-8));
    const FastGrowthResult fg =
        fast_growth_check(report, f.curve, omega, 2.0, 2.0, 1.0, tensor_spec());
    CHECK(fg.pass);
    CHECK(fg.epsilon == doctest::Approx(1.0));
    // p_norm = (int_{B(1/2)} 1)^{1/2} = sqrt(pi)/2
    CHECK(fg.p_norm == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-8));
    // at r = 1: margin = pi - C * p_norm with C = |B|^{1/2} 2 / 2 = sqrt(pi)
    CHECK(fg.worst_radius == doctest::Approx(1.0));
    CHECK(fg.worst_margin == doctest::Approx(kPi - kPi / 2.0).epsilon(1e-7));
}

TEST_CASE("fast growth fails when the constant is inflated") {
    const TorusLinearCurve f = diagonal_curve();
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    const GrowthReport report = growth_function(f.curve, omega, {1.0, 2.0}, 1.0, tensor_spec());
    // tiny C_p blows the constant C = C_p^{-1} ... up past the data
    const FastGrowthResult fg =
        fast_growth_check(report, f.curve, omega, 1e-3, 2.0, 1.0, tensor_spec());
    CHECK_FALSE(fg.pass);
}

TEST_CASE("random_ball_family is reproducible and respects the bounds") {
    const std::vector<Ball> a = random_ball_family(2, 25, 3.0, 0.5, 2.0, 9);
    const std::vector<Ball> b = random_ball_family(2, 25, 3.0, 0.5, 2.0, 9);
    REQUIRE(a.size() == 25);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].radius == b[i].radius);
        CHECK((a[i].center - b[i].center).norm() == 0.0);
        CHECK(a[i].radius >= 0.5);
        CHECK(a[i].radius <= 2.0);
        CHECK(a[i].center.cwiseAbs().maxCoeff() <= 3.0);
    }
}

TEST_CASE("reverse Holder constant is 1 for a constant density") {
    const TorusLinearCurve f = diagonal_curve();
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    const std::vector<Ball> balls = random_ball_family(2, 8, 2.0, 0.5, 1.5, 3);
    const HolderReport report = reverse_holder_estimate(f.curve, omega, balls, 2.0, tensor_spec());
    CHECK(report.excluded.empty());
    CHECK(report.c_hat == doctest::Approx(1.0).epsilon(1e-8));
    for (size_t i = 0; i < balls.size(); ++i) {
        CHECK(report.lhs[i] == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(report.rhs[i] == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("half-ball fractional-mean constant is 1 for a constant density") {
    const TorusLinearCurve f = diagonal_curve();
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    const std::vector<Ball> balls = random_ball_family(2, 8, 2.0, 0.5, 1.5, 4);
    const Prop4Report report = prop4_check(f.curve, omega, balls, tensor_spec());
    CHECK(report.excluded.empty());
    CHECK(report.c_hat == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("higher integrability: the dilation x -> 2x sits at equality for K = 1") {
    Eigen::MatrixXd a = 2.0 * Eigen::MatrixXd::Identity(2, 2);
    const CurveMap f = CurveMap::linear(a, TargetManifold::euclidean(2));
    const FormField omega = FormField::leading_volume(f.target, 2);
    Ball u;
    u.center = Eigen::VectorXd::Zero(2);
    u.radius = 1.0;
    const HigherIntReport report =
        higher_integrability_check(f, omega, u, 2.0, 1.0, tensor_spec());
    // |Df|^4 = 16 = density^2, inf comass = 1
    CHECK(report.q == doctest::Approx(4.0));
    CHECK(report.lhs.value == doctest::Approx(16.0 * kPi).epsilon(1e-9));
    CHECK(report.rhs == doctest::Approx(16.0 * kPi).epsilon(1e-7));
    CHECK(report.pass);
    // a genuinely quasiregular-but-not-conformal example needs K > 1
    Eigen::MatrixXd b(2, 2);
    b << 2, 0, 0, 1;
    const CurveMap g = CurveMap::linear(b, TargetManifold::euclidean(2));
    const HigherIntReport tight = higher_integrability_check(g, omega, u, 2.0, 1.0, tensor_spec());
    // |Dg|^4 = 16 but density^2 = 4: fails at K = 1 ...
    CHECK_FALSE(tight.pass);
    const HigherIntReport ok = higher_integrability_check(g, omega, u, 2.0, 2.0, tensor_spec());
    CHECK(ok.pass);  // ... and holds at K = 2
}

TEST_CASE("equidistribution on the diagonal torus curve") {
    const TorusLinearCurve f = diagonal_curve();
    const FormField omega0 = FormField::leading_volume(f.curve.target, 2);
    FormTerm t;
    t.coeff = Coeff{Coeff::Kind::Sin, 1.0 / kTwoPi, 3};
    t.idx = {1};
    FormField tau = FormField::from_terms(f.curve.target, 1, {t});
    tau.sup_bound = 1.0 / kTwoPi;
    const EquiReport report = equidistribution_report(f.curve, omega0, tau, {2.0, 4.0, 8.0},
                                                      0.75, tensor_spec(65536));
    CHECK(report.decay_holds);
    CHECK(report.stokes_agrees);
    for (size_t i = 0; i < report.radii.size(); ++i) {
        CHECK(report.a0[i] ==
              doctest::Approx(kPi * report.radii[i] * report.radii[i]).epsilon(1e-8));
        CHECK_FALSE(report.flagged[i]);
        CHECK(std::abs(report.ratio[i] - 1.0) <=
              report.decay_bound[i] + report.combined_error[i] / report.a0[i] + 1e-9);
    }
    CHECK(report.log_measure_e == 0.0);
    CHECK_THROWS(equidistribution_report(f.curve, omega0, tau, {2.0}, 0.3, tensor_spec()));
}

TEST_CASE("signed_check accepts the split representation of the diagonal curve") {
    const TorusLinearCurve f = diagonal_curve();
    RepresentationTerm term;
    FormTerm one;
    one.coeff = Coeff{Coeff::Kind::Const, 1.0, 1};
    term.phi = FormField::from_terms(f.curve.target, 0, {one});
    term.phi.sup_bound = 1.0;
    term.alpha = FormField::constant(f.curve.target, Covector::basis(3, {1}));
    term.beta = FormField::constant(f.curve.target, Covector::basis(3, {2}));
    SignedRepresentation rep;
    rep.terms.push_back(term);

    SampleSpec samples;
    samples.count = 200;
    const SignVerdict verdict = signed_check(rep, f.curve, samples);
    REQUIRE(verdict.term_verdicts.size() == 1);
    CHECK(verdict.term_verdicts[0] == TermSign::Nonnegative);
    CHECK(verdict.is_signed);

    // the representation reconstructs omega = dx1^dx2 exactly
    const FormField omega = FormField::leading_volume(f.curve.target, 2);
    CHECK(representation_error(rep, omega, 100, 1) < 1e-12);
}

TEST_CASE("signed_check flags a mixed term with a witness") {
    // alpha = sin(2 pi x1) dx1 changes sign along the diagonal curve
    const TorusLinearCurve f = diagonal_curve();
    RepresentationTerm term;
    FormTerm one;
    one.coeff = Coeff{Coeff::Kind::Const, 1.0, 1};
    term.phi = FormField::from_terms(f.curve.target, 0, {one});
    term.phi.sup_bound = 1.0;
    FormTerm s;
    s.coeff = Coeff{Coeff::Kind::Sin, 1.0, 1};
    s.idx = {1};
    term.alpha = FormField::from_terms(f.curve.target, 1, {s});
    term.beta = FormField::constant(f.curve.target, Covector::basis(3, {2}));
    SignedRepresentation rep;
    rep.terms.push_back(term);

    SampleSpec samples;
    samples.count = 400;
    const SignVerdict verdict = signed_check(rep, f.curve, samples);
    REQUIRE(verdict.term_verdicts.size() == 1);
    CHECK(verdict.term_verdicts[0] == TermSign::Mixed);
    CHECK_FALSE(verdict.is_signed);
    CHECK(verdict.mixed_witnesses.size() == 2);  // one positive, one negative point
}

TEST_CASE("torus signed representation reconstructs the volume form") {
    for (int m = 2; m <= 4; ++m) {
        const TargetManifold target = TargetManifold::flat_torus(m);
        for (int l = 1; l < m; ++l) {
            const SignedRepresentation rep = torus_signed_representation(l, target);
            REQUIRE(rep.terms.size() == 1);
            const Covector val = rep.reconstruct(Eigen::VectorXd::Zero(m));
            const Covector vol = Covector::volume(m);
            CHECK((val - vol).max_abs_coeff() < 1e-12);
        }
    }
    // and it is signed along the identity curve
    const TargetManifold t2 = TargetManifold::flat_torus(2);
    const SignedRepresentation rep = torus_signed_representation(1, t2);
    SampleSpec samples;
    samples.count = 100;
    const SignVerdict verdict = signed_check(rep, CurveMap::identity(2), samples);
    CHECK(verdict.is_signed);
    CHECK(verdict.term_verdicts[0] == TermSign::Nonnegative);
}
