#include "qrc/config.hpp"
#include "qrc/report_json.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrc;

TEST_CASE("parse_number keeps rationals and integers exact") {
    const Number half = parse_number("1/2");
    CHECK(half.is_rational());
    CHECK(half.exact == Rational(1, 2));
    const Number five = parse_number("5");
    CHECK(five.is_rational());
    CHECK(five.exact == Rational(5));
    const Number dec = parse_number("0.25");
    CHECK_FALSE(dec.is_rational());
    CHECK(dec.to_double() == doctest::Approx(0.25));
    const Number root = parse_number("sqrt:2");
    CHECK_FALSE(root.is_rational());
    CHECK(root.to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS(parse_number("1.5abc"));
    CHECK_THROWS(parse_number(""));
}

TEST_CASE("config parsing: comments, whitespace, typed getters") {
    const Config cfg = Config::parse_string(
        "# a comment\n"
        "target.dim = 3   # trailing comment\n"
        "curve.y = 1/2, 1/3\n"
        "\n"
        "flag = true\n"
        "tol = 1e-3\n");
    CHECK(cfg.get_long("target.dim", 0) == 3);
    CHECK(cfg.get_bool("flag", false));
    CHECK(cfg.get_double("tol", 0.0) == doctest::Approx(1e-3));
    const std::vector<Number> y = cfg.get_numbers("curve.y");
    REQUIRE(y.size() == 2);
    CHECK(y[0].exact == Rational(1, 2));
    CHECK(y[1].exact == Rational(1, 3));
    CHECK(cfg.get_or("missing", "fallback") == "fallback");
    CHECK_THROWS(cfg.get("missing"));
    CHECK_THROWS(Config::parse_string("no equals sign here"));
}

TEST_CASE("build_curve assembles the torus family from exact slopes") {
    const Config cfg = Config::parse_string(
        "target.dim = 3\n"
        "curve.kind = torus_linear\n"
        "curve.y = 1, 1\n");
    const CurveSpec spec = build_curve(cfg);
    REQUIRE(spec.torus.has_value());
    CHECK(spec.map.domain_dim == 2);
    CHECK(spec.map.target.dim == 3);
    Eigen::VectorXd x(2);
    x << 0.25, 0.5;
    const Eigen::VectorXd fx = spec.map.map(x);
    CHECK(fx[2] == doctest::Approx(0.75));
}

TEST_CASE("build_form parses term lists with catalog coefficients") {
    const Config cfg = Config::parse_string(
        "form.omega.degree = 2\n"
        "form.omega.terms = 1.0 dx1^dx2 + 0.5 sin:3 dx1^dx3\n"
        "form.omega.closed = true\n"
        "form.omega.sup_bound = 1.5\n");
    const FormField f = build_form(cfg, "omega", TargetManifold::flat_torus(3));
    CHECK(f.degree == 2);
    CHECK(f.is_closed);
    CHECK(f.sup_bound == doctest::Approx(1.5));
    Eigen::VectorXd x(3);
    x << 0.0, 0.0, 0.25;
    const Covector v = eval_form(f, x);
    CHECK(v.coeff({1, 2}) == doctest::Approx(1.0));
    CHECK(v.coeff({1, 3}) == doctest::Approx(0.5));  // sin(2 pi / 4) = 1
}

TEST_CASE("validate_config lists every violation") {
    const Config cfg = Config::parse_string(
        "target.dim = 3\n"
        "curve.kind = torus_linear\n"
        "curve.y = 1, 1\n"
        "form.omega.degree = 3\n"
        "form.omega.terms = 1.0 dx1^dx2^dx3\n"
        "radii = 4, 2\n");
    const std::vector<std::string> issues = validate_config(cfg, "growth");
    CHECK(issues.size() == 2);  // degree mismatch and non-increasing radii
    const Config ok = Config::parse_string(
        "target.dim = 3\n"
        "curve.kind = torus_linear\n"
        "curve.y = 1, 1\n"
        "form.omega.degree = 2\n"
        "form.omega.terms = 1.0 dx1^dx2\n"
        "radii = 1, 2, 4\n");
    CHECK(validate_config(ok, "growth").empty());
}

TEST_CASE("validate_config rejects n > m and malformed density targets") {
    // a 2x3 matrix maps R^3 into R^2: not a curve domain
    const Config tall = Config::parse_string(
        "curve.kind = builtin:linear\n"
        "curve.matrix = 1 0 0; 0 1 0\n");
    bool found = false;
    for (const std::string& issue : validate_config(tall, "distortion"))
        found |= issue.find("n > m") != std::string::npos;
    CHECK(found);

    // rational slope needs an irrational final coordinate
    const Config dens = Config::parse_string(
        "target.dim = 3\n"
        "curve.kind = torus_linear\n"
        "curve.y = 1/2, 1/3\n"
        "density.v = 0, 0, 1/2\n");
    CHECK_FALSE(validate_config(dens, "density").empty());
}

TEST_CASE("JSON round trip: growth and fast-growth reports") {
    GrowthReport r;
    r.radii = {1.0, 2.0};
    r.values = {{3.14, 1e-9, 100}, {12.56, 2e-9, 100}};
    r.epsilon = 1.0;
    r.normalized = {3.14, 6.28};
    r.tail_min = 6.28;
    r.slope = 2.0;
    const GrowthReport back = growth_report_from_json(to_json(r));
    CHECK(to_json(back) == to_json(r));

    FastGrowthResult fg{true, 1.0, 2.5, 0.9, 0.1, 4.0};
    CHECK(to_json(fast_growth_from_json(to_json(fg))) == to_json(fg));
}

TEST_CASE("JSON round trip: Holder, prop4, higher integrability") {
    Ball b;
    b.center = Eigen::Vector2d(0.5, -0.5);
    b.radius = 1.5;
    HolderReport h;
    h.p = 2.0;
    h.balls = {b};
    h.lhs = {1.0};
    h.rhs = {1.1};
    h.excluded = {};
    h.c_hat = 0.909;
    h.worst_ball = 0;
    CHECK(to_json(holder_report_from_json(to_json(h))) == to_json(h));

    Prop4Report p4;
    p4.balls = {b};
    p4.lhs = {1.0};
    p4.rhs = {0.9};
    p4.c_hat = 1.11;
    p4.worst_ball = 0;
    CHECK(to_json(prop4_report_from_json(to_json(p4))) == to_json(p4));

    HigherIntReport hi;
    hi.p = 2.0;
    hi.q = 4.0;
    hi.k = 3.0;
    hi.lhs = {28.2, 1e-8, 4096};
    hi.rhs_integral = {3.14, 1e-9, 4096};
    hi.rhs = 28.2;
    hi.inf_comass_value = 1.0;
    hi.pass = true;
    CHECK(to_json(higher_int_from_json(to_json(hi))) == to_json(hi));
}

TEST_CASE("JSON round trip: equidistribution, distortion, sign verdict") {
    EquiReport e;
    e.delta = 0.75;
    e.radii = {2.0, 4.0};
    e.a0 = {12.5, 50.2};
    e.a = {12.3, 50.1};
    e.ratio = {0.98, 0.998};
    e.sphere_direct = {0.25, 0.08};
    e.sphere_stokes = {0.25, 0.08};
    e.stokes_gap = {1e-10, 1e-10};
    e.combined_error = {1e-6, 1e-6};
    e.decay_bound = {0.53, 0.37};
    e.flagged = {false, false};
    e.excluded = {false, false};
    e.exception_intervals = {{1.5, 2.5}};
    e.log_measure_e = 0.51;
    e.decay_holds = true;
    e.stokes_agrees = true;
    CHECK(to_json(equi_report_from_json(to_json(e))) == to_json(e));

    DistortionReport d;
    d.sample_description = "100 samples";
    d.k_hat = 3.0;
    d.argmax = Eigen::Vector2d(0.1, 0.2);
    d.comparison_bound = 5.8;
    d.violation_point = Eigen::VectorXd();
    CHECK(to_json(distortion_report_from_json(to_json(d))) == to_json(d));

    SignVerdict v;
    v.term_verdicts = {TermSign::Nonnegative, TermSign::Mixed};
    v.mixed_witnesses = {Eigen::Vector2d(0.0, 0.1), Eigen::Vector2d(0.4, 0.3)};
    v.is_signed = false;
    CHECK(to_json(sign_verdict_from_json(to_json(v))) == to_json(v));
}

TEST_CASE("build_quadrature applies overrides and guards tensor dimensions") {
    const Config cfg = Config::parse_string(
        "quadrature.method = monte-carlo\n"
        "quadrature.budget = 5000\n"
        "quadrature.seed = 7\n");
    const QuadratureSpec spec = build_quadrature(cfg, 2);
    CHECK(spec.method == QuadratureSpec::Method::MonteCarlo);
    CHECK(spec.budget == 5000);
    CHECK(spec.seed == 7);
    const Config bad = Config::parse_string("quadrature.method = tensor-polar\n");
    CHECK_THROWS(build_quadrature(bad, 5));
    // defaults: tensor through n = 3, Monte Carlo beyond
    CHECK(build_quadrature(Config::parse_string(""), 3).method ==
          QuadratureSpec::Method::TensorPolar);
    CHECK(build_quadrature(Config::parse_string(""), 4).method ==
          QuadratureSpec::Method::MonteCarlo);
}

TEST_CASE("build_balls parses explicit lists") {
    const Config cfg = Config::parse_string("balls.list = 0 0 1; 0.5 -0.5 2\n");
    const std::vector<Ball> balls = build_balls(cfg, 2);
    REQUIRE(balls.size() == 2);
    CHECK(balls[1].center[0] == doctest::Approx(0.5));
    CHECK(balls[1].radius == doctest::Approx(2.0));
    const Config bad = Config::parse_string("balls.list = 0 0\n");
    CHECK_THROWS(build_balls(bad, 2));
}
