// Command-line harness: runs the analysis subcommands from line-oriented
// configs and emits JSON reports plus plot-ready CSV.
//
// Exit codes: 0 on pass, 2 when an inequality check fails, 1 on tool or
// config errors.

#include "qrc/config.hpp"
#include "qrc/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace qrc;

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string csv_path;
    long seed = -1;
    long workers = 1;
    long budget = -1;
    std::string radii_override;
    double p_override = -1.0;
    double delta_override = -1.0;
};

void add_common(CLI::App* app, CommonOptions& opts, bool config_required = true) {
    auto* c = app->add_option("--config", opts.config_path, "config file path");
    if (config_required) c->required();
    app->add_option("--seed", opts.seed, "override quadrature/sample seed");
    app->add_option("--workers", opts.workers, "worker count (reserved)");
    app->add_option("--out", opts.out_path, "write JSON report here");
    app->add_option("--csv", opts.csv_path, "write CSV rows here");
    app->add_option("--budget", opts.budget, "override quadrature budget");
    app->add_option("--radii", opts.radii_override, "override radius schedule, e.g. 1,2,4");
    app->add_option("--p", opts.p_override, "override analysis.p");
    app->add_option("--delta", opts.delta_override, "override analysis.delta");
}

Config load_config(const CommonOptions& opts) {
    Config cfg = opts.config_path.empty() ? Config{} : Config::parse_file(opts.config_path);
    if (opts.seed >= 0) {
        cfg.set("quadrature.seed", std::to_string(opts.seed));
        cfg.set("samples.seed", std::to_string(opts.seed));
    }
    if (opts.budget > 0) cfg.set("quadrature.budget", std::to_string(opts.budget));
    if (!opts.radii_override.empty()) cfg.set("radii", opts.radii_override);
    if (opts.p_override > 0) cfg.set("analysis.p", std::to_string(opts.p_override));
    if (opts.delta_override > 0) cfg.set("analysis.delta", std::to_string(opts.delta_override));
    return cfg;
}

int check_valid(const Config& cfg, const std::string& subcommand) {
    const std::vector<std::string> issues = validate_config(cfg, subcommand);
    if (issues.empty()) return 0;
    for (const std::string& issue : issues) std::cerr << "config error: " << issue << "\n";
    return 1;
}

void write_outputs(const CommonOptions& opts, const Json& report, const std::string& csv) {
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        out << report.dump(2) << "\n";
    }
    if (!opts.csv_path.empty() && !csv.empty()) {
        std::ofstream out(opts.csv_path);
        out << csv;
    }
}

SampleSpec build_samples(const Config& cfg) {
    SampleSpec s;
    s.count = cfg.get_long("samples.count", 1000);
    s.seed = static_cast<std::uint64_t>(cfg.get_long("samples.seed", 0));
    s.box = cfg.get_double("samples.box", 1.0);
    return s;
}

int run_comass(const CommonOptions& opts, const std::string& expr, int dim) {
    Config cfg = load_config(opts);
    if (!expr.empty()) cfg.set("comass.expr", expr);
    if (dim > 0) cfg.set("comass.dim", std::to_string(dim));
    if (int rc = check_valid(cfg, "comass")) return rc;

    const Covector c = parse_covector(cfg.get("comass.expr"),
                                      static_cast<int>(cfg.get_long("comass.dim", 0)));
    OptimizerConfig ocfg;
    ocfg.restarts = static_cast<int>(cfg.get_long("comass.restarts", 64));
    ocfg.tol = cfg.get_double("comass.tol", 1e-8);
    ocfg.seed = static_cast<std::uint64_t>(cfg.get_long("samples.seed", 0));
    const ComassResult result = comass(c, ocfg);
    const long oracle_samples = cfg.get_long("comass.oracle_samples", 0);
    Json report{{"subcommand", "comass"},
                {"expr", c.to_string()},
                {"dim", c.ambient_dim()},
                {"comass", result.value}};
    bool pass = true;
    if (oracle_samples > 0) {
        const double oracle = comass_oracle(c, oracle_samples, ocfg.seed);
        report["oracle"] = oracle;
        pass = result.value >= oracle - 1e-9;
    }
    report["pass"] = pass;
    write_outputs(opts, report, "");
    std::cout << "comass = " << result.value << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_distortion(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "distortion")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const FormField omega = build_form(cfg, "omega", curve.map.target);
    std::optional<double> bound;
    if (curve.torus) bound = curve.torus->distortion_bound();
    const DistortionReport report =
        distortion_sup(curve.map, omega, build_samples(cfg), {}, bound);
    Json j{{"subcommand", "distortion"}, {"report", to_json(report)}};
    const bool pass = !report.sign_violation && report.bound_satisfied;
    j["pass"] = pass;
    write_outputs(opts, j, "");
    std::cout << "distortion: K_hat = " << report.k_hat;
    if (bound) std::cout << " (bound " << *bound << ")";
    std::cout << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_growth(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "growth")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const FormField omega = build_form(cfg, "omega", curve.map.target);
    const std::vector<double> radii = build_radii(cfg);
    const QuadratureSpec spec = build_quadrature(cfg, curve.map.domain_dim);
    const int n = curve.map.domain_dim;
    double epsilon = cfg.get_double("analysis.epsilon", 0.0);
    const double p = cfg.get_double("analysis.p", 0.0);
    if (epsilon <= 0.0) epsilon = p > 1.0 ? n * (1.0 - 1.0 / p) : 1.0;
    const GrowthReport report = growth_function(curve.map, omega, radii, epsilon, spec);

    Json j{{"subcommand", "growth"}, {"report", to_json(report)}};
    bool pass = true;
    if (p > 1.0 && cfg.has("analysis.C_p")) {
        const FastGrowthResult fg =
            fast_growth_check(report, curve.map, omega, cfg.get_double("analysis.C_p", 1.0), p,
                              cfg.get_double("analysis.r0", 1.0), spec);
        j["fast_growth"] = to_json(fg);
        pass = fg.pass;
    }
    j["pass"] = pass;

    std::ostringstream csv;
    csv << "r,A,A_normalized\n";
    for (size_t i = 0; i < report.radii.size(); ++i)
        csv << report.radii[i] << "," << report.values[i].value << "," << report.normalized[i]
            << "\n";
    write_outputs(opts, j, csv.str());
    std::cout << "growth: slope = " << report.slope << ", tail min A/r^eps = " << report.tail_min
              << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_rhi(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "rhi")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const FormField omega = build_form(cfg, "omega", curve.map.target);
    const QuadratureSpec spec = build_quadrature(cfg, curve.map.domain_dim);
    const HolderReport report =
        reverse_holder_estimate(curve.map, omega, build_balls(cfg, curve.map.domain_dim),
                                cfg.get_double("analysis.p", 2.0), spec);
    const bool pass = report.excluded.empty();
    Json j{{"subcommand", "rhi"}, {"report", to_json(report)}, {"pass", pass}};
    std::ostringstream csv;
    csv << "ball,lhs,rhs,ratio\n";
    for (size_t i = 0; i < report.lhs.size(); ++i)
        csv << i << "," << report.lhs[i] << "," << report.rhs[i] << ","
            << (report.rhs[i] > 0 ? report.lhs[i] / report.rhs[i] : 0.0) << "\n";
    write_outputs(opts, j, csv.str());
    std::cout << "rhi: C_hat = " << report.c_hat << " over " << report.balls.size() << " balls"
              << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_prop4(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "prop4")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const FormField omega = build_form(cfg, "omega", curve.map.target);
    const QuadratureSpec spec = build_quadrature(cfg, curve.map.domain_dim);
    const Prop4Report report =
        prop4_check(curve.map, omega, build_balls(cfg, curve.map.domain_dim), spec);
    const bool pass = report.excluded.empty();
    Json j{{"subcommand", "prop4"}, {"report", to_json(report)}, {"pass", pass}};
    std::ostringstream csv;
    csv << "ball,lhs,rhs,ratio\n";
    for (size_t i = 0; i < report.lhs.size(); ++i)
        csv << i << "," << report.lhs[i] << "," << report.rhs[i] << ","
            << (report.rhs[i] > 0 ? report.lhs[i] / report.rhs[i] : 0.0) << "\n";
    write_outputs(opts, j, csv.str());
    std::cout << "prop4: C_hat4 = " << report.c_hat << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_higherint(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "higherint")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const FormField omega = build_form(cfg, "omega", curve.map.target);
    const QuadratureSpec spec = build_quadrature(cfg, curve.map.domain_dim);
    Ball u;
    u.radius = cfg.get_double("u.radius", 1.0);
    u.center = Eigen::VectorXd::Zero(curve.map.domain_dim);
    if (cfg.has("u.center")) {
        const std::vector<Number> c = cfg.get_numbers("u.center");
        for (size_t i = 0; i < c.size() && i < static_cast<size_t>(u.center.size()); ++i)
            u.center[i] = c[i].to_double();
    }
    const HigherIntReport report =
        higher_integrability_check(curve.map, omega, u, cfg.get_double("analysis.p", 2.0),
                                   cfg.get_double("analysis.K", 1.0), spec);
    Json j{{"subcommand", "higherint"}, {"report", to_json(report)}, {"pass", report.pass}};
    write_outputs(opts, j, "");
    std::cout << "higherint: lhs = " << report.lhs.value << ", rhs = " << report.rhs
              << (report.pass ? " [pass]" : " [FAIL]") << "\n";
    return report.pass ? 0 : 2;
}

int run_equi(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "equi")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const int n = curve.map.domain_dim;
    const FormField omega0 = build_form(cfg, "omega0", curve.map.target);
    const FormField tau = build_form(cfg, "tau", curve.map.target);
    const QuadratureSpec spec = build_quadrature(cfg, n);
    const double delta = cfg.get_double("analysis.delta", (2.0 * n - 1.0) / (2.0 * n));
    const EquiReport report =
        equidistribution_report(curve.map, omega0, tau, build_radii(cfg), delta, spec);
    const bool pass = report.decay_holds && report.stokes_agrees;
    Json j{{"subcommand", "equi"}, {"report", to_json(report)}, {"pass", pass}};
    std::ostringstream csv;
    csv << "r,A0,A,ratio,sphere_direct,sphere_stokes,flagged\n";
    for (size_t i = 0; i < report.radii.size(); ++i)
        csv << report.radii[i] << "," << report.a0[i] << "," << report.a[i] << ","
            << report.ratio[i] << "," << report.sphere_direct[i] << ","
            << report.sphere_stokes[i] << "," << (report.flagged[i] ? 1 : 0) << "\n";
    write_outputs(opts, j, csv.str());
    std::cout << "equi: log measure of E = " << report.log_measure_e
              << (pass ? " [pass]" : " [FAIL]") << "\n";
    return pass ? 0 : 2;
}

int run_density(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "density")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const std::vector<Number> v_nums = cfg.get_numbers("density.v");
    Eigen::VectorXd v(v_nums.size());
    for (size_t i = 0; i < v_nums.size(); ++i) v[i] = v_nums[i].to_double();
    const GridSpec grid = build_grid(cfg);
    const double min_dist = density_probe(*curve.torus, v, grid);

    bool rational_slope = !curve.slope.empty();
    for (const Number& y : curve.slope) rational_slope &= y.is_rational();
    bool irrational_slope = !curve.slope.empty();
    for (const Number& y : curve.slope) irrational_slope &= !y.is_rational();

    Json j{{"subcommand", "density"}, {"min_distance", min_dist}};
    bool pass = true;
    if (rational_slope) {
        std::vector<Rational> y, v_head;
        for (const Number& num : curve.slope) y.push_back(num.exact);
        for (size_t i = 0; i + 1 < v_nums.size(); ++i) v_head.push_back(v_nums[i].exact);
        const ObstructionResult obstruction = rational_obstruction(y, v_head, v.tail(1)[0]);
        j["obstruction"] = to_json(obstruction);
        pass = min_dist >= obstruction.radius;
        std::cout << "density (rational): min distance " << min_dist << " >= r = "
                  << obstruction.radius << (pass ? " [pass]" : " [FAIL]") << "\n";
    } else if (irrational_slope) {
        const double threshold = cfg.get_double("density.threshold", 0.05);
        j["threshold"] = threshold;
        pass = min_dist < threshold;
        std::cout << "density (irrational): min distance " << min_dist << " < " << threshold
                  << (pass ? " [pass]" : " [FAIL]") << "\n";
    } else {
        std::cout << "density: min distance " << min_dist << " (mixed slope, no verdict)\n";
    }
    j["pass"] = pass;
    write_outputs(opts, j, "");
    return pass ? 0 : 2;
}

int run_signed(const CommonOptions& opts) {
    const Config cfg = load_config(opts);
    if (int rc = check_valid(cfg, "signed")) return rc;
    const CurveSpec curve = build_curve(cfg);
    const std::string kind = cfg.get_or("rep.kind", "split");
    SignedRepresentation rep;
    if (kind == "torus") {
        rep = torus_signed_representation(static_cast<int>(cfg.get_long("rep.l", 1)),
                                          curve.map.target);
    } else {
        RepresentationTerm term;
        FormTerm one;
        one.coeff = Coeff{Coeff::Kind::Const, 1.0, 1};
        term.phi = FormField::from_terms(curve.map.target, 0, {one});
        term.phi.sup_bound = 1.0;
        term.alpha = build_form(cfg, "alpha", curve.map.target);
        term.beta = build_form(cfg, "beta", curve.map.target);
        rep.kind = SignedRepresentation::Kind::RLinear;
        rep.terms.push_back(std::move(term));
    }
    const SignVerdict verdict = signed_check(rep, curve.map, build_samples(cfg));
    Json j{{"subcommand", "signed"}, {"report", to_json(verdict)}, {"pass", verdict.is_signed}};
    write_outputs(opts, j, "");
    std::cout << "signed: " << (verdict.is_signed ? "no mixed terms [pass]"
                                                  : "mixed term found [FAIL]")
              << "\n";
    return verdict.is_signed ? 0 : 2;
}

int run_validate(const CommonOptions& opts, const std::string& subcommand) {
    const Config cfg = load_config(opts);
    const std::string sub = subcommand.empty() ? cfg.get_or("run.subcommand", "distortion")
                                               : subcommand;
    const std::vector<std::string> issues = validate_config(cfg, sub);
    for (const std::string& issue : issues) std::cout << sub << ": " << issue << "\n";
    if (issues.empty()) std::cout << "config valid for " << sub << "\n";
    return issues.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiregular curve laboratory"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string expr;
    int dim = 0;
    std::string validate_sub;

    auto* comass_cmd = app.add_subcommand("comass", "comass of a covector literal");
    add_common(comass_cmd, opts, false);
    comass_cmd->add_option("--expr", expr, "covector literal, e.g. '1.0 dx1^dx2'");
    comass_cmd->add_option("--dim", dim, "ambient dimension");

    auto* distortion_cmd = app.add_subcommand("distortion", "distortion quotient supremum");
    add_common(distortion_cmd, opts);
    auto* growth_cmd = app.add_subcommand("growth", "growth functional A(r)");
    add_common(growth_cmd, opts);
    auto* rhi_cmd = app.add_subcommand("rhi", "weak reverse Holder estimate");
    add_common(rhi_cmd, opts);
    auto* prop4_cmd = app.add_subcommand("prop4", "half-ball vs fractional-mean estimate");
    add_common(prop4_cmd, opts);
    auto* higherint_cmd = app.add_subcommand("higherint", "higher integrability inequality");
    add_common(higherint_cmd, opts);
    auto* equi_cmd = app.add_subcommand("equi", "equidistribution with exception set");
    add_common(equi_cmd, opts);
    auto* density_cmd = app.add_subcommand("density", "image density probe / dichotomy");
    add_common(density_cmd, opts);
    auto* signed_cmd = app.add_subcommand("signed", "signed representation check");
    add_common(signed_cmd, opts);
    auto* validate_cmd = app.add_subcommand("validate", "validate a config without running");
    add_common(validate_cmd, opts);
    validate_cmd->add_option("--subcommand", validate_sub, "restrict validation to one subcommand");

    CLI11_PARSE(app, argc, argv);

    try {
        if (comass_cmd->parsed()) return run_comass(opts, expr, dim);
        if (distortion_cmd->parsed()) return run_distortion(opts);
        if (growth_cmd->parsed()) return run_growth(opts);
        if (rhi_cmd->parsed()) return run_rhi(opts);
        if (prop4_cmd->parsed()) return run_prop4(opts);
        if (higherint_cmd->parsed()) return run_higherint(opts);
        if (equi_cmd->parsed()) return run_equi(opts);
        if (density_cmd->parsed()) return run_density(opts);
        if (signed_cmd->parsed()) return run_signed(opts);
        if (validate_cmd->parsed()) return run_validate(opts, validate_sub);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
