#include "qrc/analysis.hpp"

#include <cmath>
#include <random>

namespace qrc {

namespace {

ScalarField density_of(const CurveMap& f, const FormField& omega) {
    return [&f, &omega](const Eigen::VectorXd& x) { return star_pullback(f, omega, x); };
}

double fit_tail_slope(const std::vector<double>& radii, const std::vector<double>& a,
                      size_t tail_start) {
    std::vector<double> lx, ly;
    for (size_t i = tail_start; i < radii.size(); ++i) {
        if (a[i] > 0 && radii[i] > 0) {
            lx.push_back(std::log(radii[i]));
            ly.push_back(std::log(a[i]));
        }
    }
    if (lx.size() < 2) return 0.0;
    double mx = 0, my = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= lx.size();
    my /= ly.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    return sxx > 0 ? sxy / sxx : 0.0;
}

}  // namespace

GrowthReport growth_function(const CurveMap& f, const FormField& omega,
                             const std::vector<double>& radii, double epsilon,
                             const QuadratureSpec& spec) {
    for (size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0) throw std::invalid_argument("growth_function: radii must be positive");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("growth_function: radii must be increasing");
    }
    GrowthReport report;
    report.radii = radii;
    report.epsilon = epsilon;
    const ScalarField dens = density_of(f, omega);
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(f.domain_dim);
    std::vector<double> a_values;
    for (double r : radii) {
        report.values.push_back(ball_integral(dens, origin, r, spec));
        a_values.push_back(report.values.back().value);
        report.normalized.push_back(a_values.back() / std::pow(r, epsilon));
    }
    const size_t tail_start = radii.size() / 2;
    report.tail_min = std::numeric_limits<double>::infinity();
    for (size_t i = tail_start; i < radii.size(); ++i)
        report.tail_min = std::min(report.tail_min, report.normalized[i]);
    if (!std::isfinite(report.tail_min)) report.tail_min = 0.0;
    report.slope = fit_tail_slope(radii, a_values, tail_start);
    return report;
}

std::pair<double, double> epsilon_and_constant(int n, double p, double c_p) {
    if (p <= 1.0) throw std::invalid_argument("epsilon_and_constant: p must exceed 1");
    if (c_p <= 0.0) throw std::invalid_argument("epsilon_and_constant: C_p must be positive");
    const double epsilon = n * (1.0 - 1.0 / p);
    const double constant =
        (1.0 / c_p) * std::pow(unit_ball_volume(n), 1.0 - 1.0 / p) * std::pow(2.0, n / p);
    return {epsilon, constant};
}

FastGrowthResult fast_growth_check(const GrowthReport& report, const CurveMap& f,
                                   const FormField& omega, double c_p, double p, double r0,
                                   const QuadratureSpec& spec, double slack) {
    FastGrowthResult result;
    const auto [eps, c] = epsilon_and_constant(f.domain_dim, p, c_p);
    result.epsilon = eps;
    result.constant = c;

    const ScalarField dens = density_of(f, omega);
    const ScalarField dens_p = [&dens, p](const Eigen::VectorXd& x) {
        return std::pow(std::max(0.0, dens(x)), p);
    };
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(f.domain_dim);
    const double p_integral =
        std::max(0.0, ball_integral(dens_p, origin, r0 / 2.0, spec).value);
    result.p_norm = std::pow(p_integral, 1.0 / p);
    if (result.p_norm <= 0.0) {
        result.pass = false;  // no radius with positive p-mass: degenerate curve
        return result;
    }

    const double rhs = c * result.p_norm;
    result.worst_margin = std::numeric_limits<double>::infinity();
    bool any = false;
    for (size_t i = 0; i < report.radii.size(); ++i) {
        const double r = report.radii[i];
        if (r < r0) continue;
        any = true;
        const double lhs = report.values[i].value / std::pow(r, eps);
        const double margin = lhs - rhs;
        if (margin < result.worst_margin) {
            result.worst_margin = margin;
            result.worst_radius = r;
        }
    }
    if (!any) throw std::invalid_argument("fast_growth_check: no scheduled radii >= r0");
    result.pass = result.worst_margin >= -slack * rhs;
    return result;
}

std::vector<Ball> random_ball_family(int n, int count, double center_box, double r_min,
                                     double r_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cdist(-center_box, center_box);
    std::uniform_real_distribution<double> rdist(r_min, r_max);
    std::vector<Ball> balls(count);
    for (auto& b : balls) {
        b.center = Eigen::VectorXd::NullaryExpr(n, [&](Eigen::Index) { return cdist(rng); });
        b.radius = rdist(rng);
    }
    return balls;
}

HolderReport reverse_holder_estimate(const CurveMap& f, const FormField& omega,
                                     const std::vector<Ball>& balls, double p,
                                     const QuadratureSpec& spec) {
    if (p <= 1.0) throw std::invalid_argument("reverse_holder_estimate: p must exceed 1");
    if (balls.empty()) throw std::invalid_argument("reverse_holder_estimate: empty ball family");
    HolderReport report;
    report.p = p;
    report.balls = balls;
    const ScalarField dens = density_of(f, omega);
    for (size_t i = 0; i < balls.size(); ++i) {
        const Ball& b = balls[i];
        double min_density = std::numeric_limits<double>::infinity();
        const ScalarField dens_p = [&dens, p, &min_density](const Eigen::VectorXd& x) {
            const double v = dens(x);
            min_density = std::min(min_density, v);
            return std::pow(std::max(0.0, v), p);
        };
        const double lhs_p =
            std::max(0.0, ball_integral(dens_p, b.center, b.radius / 2.0, spec, true).value);
        const double lhs = std::pow(lhs_p, 1.0 / p);
        const double rhs = ball_integral(dens, b.center, b.radius, spec, true).value;
        report.lhs.push_back(lhs);
        report.rhs.push_back(rhs);
        if (min_density < -1e-12 || rhs <= 0.0) {
            report.excluded.push_back(static_cast<int>(i));
            continue;
        }
        const double ratio = lhs / rhs;
        if (ratio > report.c_hat) {
            report.c_hat = ratio;
            report.worst_ball = static_cast<int>(i);
        }
    }
    return report;
}

Prop4Report prop4_check(const CurveMap& f, const FormField& omega, const std::vector<Ball>& balls,
                        const QuadratureSpec& spec) {
    if (balls.empty()) throw std::invalid_argument("prop4_check: empty ball family");
    Prop4Report report;
    report.balls = balls;
    const int n = f.domain_dim;
    const double exponent = static_cast<double>(n) / (n + 1);
    const ScalarField dens = density_of(f, omega);
    for (size_t i = 0; i < balls.size(); ++i) {
        const Ball& b = balls[i];
        double min_density = std::numeric_limits<double>::infinity();
        const ScalarField dens_frac = [&dens, exponent, &min_density](const Eigen::VectorXd& x) {
            const double v = dens(x);
            min_density = std::min(min_density, v);
            return std::pow(std::max(0.0, v), exponent);
        };
        const double lhs = ball_integral(dens, b.center, b.radius / 2.0, spec, true).value;
        const double rhs_inner =
            std::max(0.0, ball_integral(dens_frac, b.center, b.radius, spec, true).value);
        const double rhs = std::pow(rhs_inner, 1.0 / exponent);
        report.lhs.push_back(lhs);
        report.rhs.push_back(rhs);
        if (min_density < -1e-12 || rhs <= 0.0) {
            report.excluded.push_back(static_cast<int>(i));
            continue;
        }
        const double ratio = lhs / rhs;
        if (ratio > report.c_hat) {
            report.c_hat = ratio;
            report.worst_ball = static_cast<int>(i);
        }
    }
    return report;
}

HigherIntReport higher_integrability_check(const CurveMap& f, const FormField& omega,
                                           const Ball& u, double p, double k,
                                           const QuadratureSpec& spec,
                                           const OptimizerConfig& comass_cfg) {
    HigherIntReport report;
    report.p = p;
    report.q = f.domain_dim * p;
    report.k = k;
    const ScalarField norm_q = [&f, q = report.q](const Eigen::VectorXd& x) {
        return std::pow(operator_norm(differential(f, x)), q);
    };
    const ScalarField dens_p = [&f, &omega, p](const Eigen::VectorXd& x) {
        return std::pow(std::max(0.0, star_pullback(f, omega, x)), p);
    };
    report.lhs = ball_integral(norm_q, u.center, u.radius, spec);
    report.rhs_integral = ball_integral(dens_p, u.center, u.radius, spec);
    report.inf_comass_value = inf_comass(omega, 256, comass_cfg, spec.seed);
    const double factor = std::pow(report.inf_comass_value, -p) * std::pow(k, p);
    report.rhs = factor * report.rhs_integral.value;
    const double allowance =
        report.lhs.error_bound + factor * report.rhs_integral.error_bound + 1e-9 * report.rhs;
    report.pass = report.lhs.value <= report.rhs + allowance;
    return report;
}

EquiReport equidistribution_report(const CurveMap& f, const FormField& omega0,
                                   const FormField& tau, const std::vector<double>& radii,
                                   double delta, const QuadratureSpec& spec) {
    const int n = f.domain_dim;
    if (!(delta > static_cast<double>(n - 1) / n && delta < 1.0))
        throw std::invalid_argument("equidistribution_report: delta must lie in ((n-1)/n, 1)");
    if (tau.degree != n - 1)
        throw std::invalid_argument("equidistribution_report: tau must have degree n-1");

    EquiReport report;
    report.delta = delta;
    report.radii = radii;

    const FormField dtau = exterior_derivative(tau);
    const FormField omega = subtract_fields(omega0, dtau);
    const ScalarField dens0 = density_of(f, omega0);
    const ScalarField dens = density_of(f, omega);
    const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);

    for (double r : radii) {
        const IntegralEstimate a0 = ball_integral(dens0, origin, r, spec);
        const IntegralEstimate a = ball_integral(dens, origin, r, spec);
        const IntegralEstimate sph = sphere_integral(f, tau, r, spec);
        report.a0.push_back(a0.value);
        report.a.push_back(a.value);
        report.sphere_direct.push_back(sph.value);
        report.sphere_stokes.push_back(a0.value - a.value);
        report.stokes_gap.push_back(std::abs(sph.value - (a0.value - a.value)));
        report.combined_error.push_back(a0.error_bound + a.error_bound + sph.error_bound);

        const bool excluded = a0.value <= 0.0;
        report.excluded.push_back(excluded);
        if (excluded) {
            report.ratio.push_back(0.0);
            report.decay_bound.push_back(0.0);
            report.flagged.push_back(true);
            continue;
        }
        report.ratio.push_back(a.value / a0.value);
        report.decay_bound.push_back(std::pow(a0.value, delta - 1.0));
        report.flagged.push_back(std::pow(a0.value, delta) <= std::abs(sph.value));
    }

    // exception set: grid-cell interval hull around flagged radii, geometric
    // midpoints between neighbours, clamped to [1, inf)
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!report.flagged[i]) continue;
        const double r = radii[i];
        double lo, hi;
        if (radii.size() == 1) {
            lo = r / std::sqrt(2.0);
            hi = r * std::sqrt(2.0);
        } else {
            const double mid_next =
                i + 1 < radii.size() ? std::sqrt(r * radii[i + 1]) : r * r / std::sqrt(r * radii[i - 1]);
            const double mid_prev = i > 0 ? std::sqrt(r * radii[i - 1]) : r * r / mid_next;
            lo = mid_prev;
            hi = mid_next;
        }
        lo = std::max(1.0, lo);
        if (hi > lo) report.exception_intervals.emplace_back(lo, hi);
    }
    report.log_measure_e = log_measure(report.exception_intervals);

    for (size_t i = 0; i < radii.size(); ++i) {
        if (report.excluded[i] || report.flagged[i]) continue;
        const double err_allow = report.a0[i] > 0 ? report.combined_error[i] / report.a0[i] : 0.0;
        if (std::abs(report.ratio[i] - 1.0) > report.decay_bound[i] + err_allow)
            report.decay_holds = false;
        if (report.stokes_gap[i] > report.combined_error[i] + 1e-9 * std::abs(report.a0[i]))
            report.stokes_agrees = false;
    }
    return report;
}

Covector SignedRepresentation::reconstruct(const Eigen::VectorXd& x) const {
    if (terms.empty()) throw std::invalid_argument("SignedRepresentation: no terms");
    const int m = terms.front().alpha.target.dim;
    const int degree =
        std::min(terms.front().alpha.degree + terms.front().beta.degree, m);
    Covector total(m, degree);
    for (const auto& term : terms) {
        const double phi = term.phi.eval(x).coeff({});
        total += phi * wedge(term.alpha.eval(x), term.beta.eval(x));
    }
    return total;
}

double representation_error(const SignedRepresentation& rep, const FormField& omega,
                            long samples, std::uint64_t seed, double box) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int m = omega.target.dim;
    double worst = 0.0;
    for (long s = 0; s < samples; ++s) {
        Eigen::VectorXd x(m);
        for (int i = 0; i < m; ++i) {
            const double u = unit(rng);
            x[i] = omega.target.is_torus() ? u : box * (2.0 * u - 1.0);
        }
        const Covector diff = rep.reconstruct(x) - omega.eval(x);
        worst = std::max(worst, diff.max_abs_coeff());
    }
    return worst;
}

SignVerdict signed_check(const SignedRepresentation& rep, const CurveMap& f,
                         const SampleSpec& samples, double eta) {
    SignVerdict verdict;
    const int n = f.domain_dim;
    std::mt19937_64 rng(samples.seed);
    std::uniform_real_distribution<double> unit(-samples.box, samples.box);

    std::vector<Eigen::VectorXd> points(samples.count);
    for (auto& x : points) {
        x.resize(n);
        for (int i = 0; i < n; ++i) x[i] = unit(rng);
    }

    for (const auto& term : rep.terms) {
        const FormField product = wedge_fields(term.alpha, term.beta);
        bool has_pos = false, has_neg = false;
        Eigen::VectorXd pos_witness, neg_witness;
        for (const auto& x : points) {
            const Eigen::MatrixXd d = differential(f, x);
            const double value = product.eval(f.map(x)).eval_on_columns(d);
            const double scale =
                product.eval(f.map(x)).l1_norm() * std::pow(operator_norm(d), n) + 1.0;
            const double threshold = eta * scale;
            if (value > threshold && !has_pos) {
                has_pos = true;
                pos_witness = x;
            } else if (value < -threshold && !has_neg) {
                has_neg = true;
                neg_witness = x;
            }
            if (has_pos && has_neg) break;
        }
        TermSign sign;
        if (has_pos && has_neg) {
            sign = TermSign::Mixed;
            verdict.mixed_witnesses.push_back(pos_witness);
            verdict.mixed_witnesses.push_back(neg_witness);
            verdict.is_signed = false;
        } else if (has_pos) {
            sign = TermSign::Nonnegative;
        } else if (has_neg) {
            sign = TermSign::Nonpositive;
        } else {
            sign = TermSign::Zero;
        }
        verdict.term_verdicts.push_back(sign);
    }
    return verdict;
}

SignedRepresentation torus_signed_representation(int l, const TargetManifold& target,
                                                 const Covector* xi_seed) {
    const int m = target.dim;
    if (l < 1 || l > m - 1)
        throw std::invalid_argument("torus_signed_representation: degree out of range");
    Covector xi = [&] {
        if (xi_seed) {
            if (xi_seed->degree() != l || xi_seed->ambient_dim() != m)
                throw std::invalid_argument("torus_signed_representation: bad seed covector");
            return *xi_seed;
        }
        MultiIndex idx(l);
        for (int i = 0; i < l; ++i) idx[i] = i + 1;
        return Covector::basis(m, idx);
    }();
    // normalize so that the fundamental-domain integral of xi ^ star xi equals
    // the torus volume: <xi, xi> = 1
    const double norm = xi.l2_norm();
    if (norm <= 0)
        throw std::invalid_argument("torus_signed_representation: zero seed covector");
    xi *= 1.0 / norm;

    SignedRepresentation rep;
    rep.kind = SignedRepresentation::Kind::RLinear;
    RepresentationTerm term;
    term.phi = FormField::from_terms(target, 0, {{Coeff{Coeff::Kind::Const, 1.0, 1}, {}}});
    term.phi.sup_bound = 1.0;
    term.phi.is_closed = true;
    term.alpha = FormField::constant(target, xi);
    term.alpha.sup_bound = xi.l1_norm();
    term.beta = FormField::constant(target, hodge_star(xi));
    term.beta.sup_bound = hodge_star(xi).l1_norm();
    rep.terms.push_back(std::move(term));
    return rep;
}

}  // namespace qrc
