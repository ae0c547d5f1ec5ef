#include "qrc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qrc {

namespace {
constexpr double pi = std::numbers::pi;
}

double unit_ball_volume(int n) {
    return std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double pairwise_sum(const std::vector<double>& values) {
    // recursive halving over a fixed index order
    std::function<double(size_t, size_t)> sum = [&](size_t lo, size_t hi) -> double {
        if (hi - lo <= 8) {
            double s = 0.0;
            for (size_t i = lo; i < hi; ++i) s += values[i];
            return s;
        }
        const size_t mid = lo + (hi - lo) / 2;
        return sum(lo, mid) + sum(mid, hi);
    };
    return values.empty() ? 0.0 : sum(0, values.size());
}

namespace {

void check_finite(double v, const Eigen::VectorXd& x) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "ball_integral: non-finite integrand at (";
        for (Eigen::Index i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
        msg << ")";
        throw std::runtime_error(msg.str());
    }
}

// sphere directions and surface weights for the product-angle grids, n <= 4
void sphere_nodes(int n, long angular_budget, std::vector<Eigen::VectorXd>& dirs,
                  std::vector<double>& wts) {
    dirs.clear();
    wts.clear();
    if (n == 2) {
        const long k = std::max<long>(8, angular_budget);
        for (long i = 0; i < k; ++i) {
            const double th = 2.0 * pi * i / k;
            Eigen::VectorXd u(2);
            u << std::cos(th), std::sin(th);
            dirs.push_back(u);
            wts.push_back(2.0 * pi / k);
        }
    } else if (n == 3) {
        // t = cos(theta) Gauss-Legendre, phi uniform
        const int nt = std::max(4, static_cast<int>(std::lround(std::sqrt(angular_budget / 2.0))));
        const int nphi = 2 * nt;
        std::vector<double> tn, tw;
        gauss_legendre(nt, tn, tw);
        for (int it = 0; it < nt; ++it) {
            const double t = tn[it];
            const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
            for (int ip = 0; ip < nphi; ++ip) {
                const double phi = 2.0 * pi * ip / nphi;
                Eigen::VectorXd u(3);
                u << s * std::cos(phi), s * std::sin(phi), t;
                dirs.push_back(u);
                wts.push_back(tw[it] * 2.0 * pi / nphi);
            }
        }
    } else if (n == 4) {
        // psi with sin^2 weight, t = cos(theta) Gauss-Legendre, phi uniform
        const int np = std::max(4, static_cast<int>(std::lround(std::cbrt(angular_budget / 2.0))));
        const int nt = np;
        const int nphi = 2 * np;
        std::vector<double> pn, pw, tn, tw;
        gauss_legendre(np, pn, pw);  // mapped to psi in [0, pi]
        gauss_legendre(nt, tn, tw);
        for (int ipsi = 0; ipsi < np; ++ipsi) {
            const double psi = 0.5 * pi * (pn[ipsi] + 1.0);
            const double wpsi = 0.5 * pi * pw[ipsi] * std::sin(psi) * std::sin(psi);
            for (int it = 0; it < nt; ++it) {
                const double t = tn[it];
                const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
                for (int ip = 0; ip < nphi; ++ip) {
                    const double phi = 2.0 * pi * ip / nphi;
                    Eigen::VectorXd u(4);
                    u << std::sin(psi) * s * std::cos(phi), std::sin(psi) * s * std::sin(phi),
                        std::sin(psi) * t, std::cos(psi);
                    dirs.push_back(u);
                    wts.push_back(wpsi * tw[it] * 2.0 * pi / nphi);
                }
            }
        }
    } else {
        throw std::invalid_argument("tensor-polar quadrature supports n <= 4 only");
    }
}

double tensor_polar_ball(const ScalarField& g, const Eigen::VectorXd& center, double r,
                         long budget, long& used) {
    const int n = static_cast<int>(center.size());
    // split ~1:4 between radius and angles (64 x 256 at the default budget)
    const int nrad = std::max(8, static_cast<int>(std::lround(std::sqrt(budget / 4.0))));
    const long nang = 4L * nrad;
    std::vector<double> rn, rw;
    gauss_legendre(nrad, rn, rw);
    std::vector<Eigen::VectorXd> dirs;
    std::vector<double> wts;
    sphere_nodes(n, nang, dirs, wts);

    std::vector<double> contributions;
    contributions.reserve(nrad * dirs.size());
    for (int ir = 0; ir < nrad; ++ir) {
        const double rho = 0.5 * r * (rn[ir] + 1.0);
        const double wrho = 0.5 * r * rw[ir] * std::pow(rho, n - 1);
        for (size_t id = 0; id < dirs.size(); ++id) {
            const Eigen::VectorXd x = center + rho * dirs[id];
            const double v = g(x);
            check_finite(v, x);
            contributions.push_back(wrho * wts[id] * v);
        }
    }
    used = static_cast<long>(contributions.size());
    return pairwise_sum(contributions);
}

}  // namespace

IntegralEstimate ball_integral(const ScalarField& g, const Eigen::VectorXd& center, double r,
                               const QuadratureSpec& spec, bool average) {
    if (r <= 0) throw std::invalid_argument("ball_integral: radius must be positive");
    if (spec.budget < 1) throw std::invalid_argument("ball_integral: budget must be >= 1");
    const int n = static_cast<int>(center.size());
    const double ball_vol = unit_ball_volume(n) * std::pow(r, n);
    IntegralEstimate est;
    if (spec.method == QuadratureSpec::Method::TensorPolar) {
        long used_full = 0, used_half = 0;
        const double full = tensor_polar_ball(g, center, r, spec.budget, used_full);
        const double half = tensor_polar_ball(g, center, r, spec.budget / 2, used_half);
        est.value = full;
        est.error_bound = std::abs(full - half);  // Richardson-style surrogate
        est.budget_used = used_full + used_half;
    } else {
        std::mt19937_64 rng(spec.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> values(spec.budget);
        Eigen::VectorXd u(n);
        for (long s = 0; s < spec.budget; ++s) {
            do {
                for (int i = 0; i < n; ++i) u[i] = gauss(rng);
            } while (u.norm() == 0.0);
            const double rho = r * std::pow(unit(rng), 1.0 / n);
            const Eigen::VectorXd x = center + rho * u.normalized();
            values[s] = g(x);
            check_finite(values[s], x);
        }
        const double mean = pairwise_sum(values) / spec.budget;
        std::vector<double> sq(values.size());
        for (size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - mean;
            sq[i] = d * d;
        }
        const double var = pairwise_sum(sq) / std::max<long>(1, spec.budget - 1);
        est.value = ball_vol * mean;
        est.error_bound = 3.0 * ball_vol * std::sqrt(var / spec.budget);
        est.budget_used = spec.budget;
    }
    if (average) {
        est.value /= ball_vol;
        est.error_bound /= ball_vol;
    }
    return est;
}

namespace {

double sphere_form_integral(const CurveMap& f, const FormField& tau, double r, long budget,
                            long& used) {
    const int n = f.domain_dim;
    std::vector<double> contributions;
    if (n == 2) {
        const long k = std::max<long>(64, budget);
        contributions.reserve(k);
        for (long i = 0; i < k; ++i) {
            const double th = 2.0 * pi * i / k;
            Eigen::VectorXd x(2), tangent(2);
            x << r * std::cos(th), r * std::sin(th);
            tangent << -r * std::sin(th), r * std::cos(th);  // counterclockwise
            contributions.push_back(pullback_eval(f, tau, x, {tangent}) * 2.0 * pi / k);
        }
    } else if (n == 3) {
        const int nt = std::max(8, static_cast<int>(std::lround(std::sqrt(budget / 2.0))));
        const int nphi = 2 * nt;
        std::vector<double> tn, tw;
        gauss_legendre(nt, tn, tw);  // theta in [0, pi]
        contributions.reserve(static_cast<size_t>(nt) * nphi);
        for (int it = 0; it < nt; ++it) {
            const double th = 0.5 * pi * (tn[it] + 1.0);
            const double wth = 0.5 * pi * tw[it];
            for (int ip = 0; ip < nphi; ++ip) {
                const double phi = 2.0 * pi * ip / nphi;
                Eigen::VectorXd x(3), dth(3), dphi(3);
                x << r * std::sin(th) * std::cos(phi), r * std::sin(th) * std::sin(phi),
                    r * std::cos(th);
                dth << r * std::cos(th) * std::cos(phi), r * std::cos(th) * std::sin(phi),
                    -r * std::sin(th);
                dphi << -r * std::sin(th) * std::sin(phi), r * std::sin(th) * std::cos(phi), 0.0;
                // (outward, d_theta, d_phi) is positively oriented
                contributions.push_back(pullback_eval(f, tau, x, {dth, dphi}) * wth * 2.0 * pi /
                                        nphi);
            }
        }
    } else {
        throw std::invalid_argument("sphere_integral: supported for domain dimension 2 or 3");
    }
    used = static_cast<long>(contributions.size());
    return pairwise_sum(contributions);
}

}  // namespace

IntegralEstimate sphere_integral(const CurveMap& f, const FormField& tau, double r,
                                 const QuadratureSpec& spec) {
    if (r <= 0) throw std::invalid_argument("sphere_integral: radius must be positive");
    if (tau.degree != f.domain_dim - 1)
        throw std::invalid_argument("sphere_integral: form degree must be n-1");
    long used_full = 0, used_half = 0;
    const double full = sphere_form_integral(f, tau, r, spec.budget, used_full);
    const double half = sphere_form_integral(f, tau, r, spec.budget / 2, used_half);
    IntegralEstimate est;
    est.value = full;
    est.error_bound = std::abs(full - half);
    est.budget_used = used_full + used_half;
    return est;
}

double log_measure(std::vector<std::pair<double, double>> intervals) {
    for (auto& [a, b] : intervals) {
        if (a > b) std::swap(a, b);
        if (a < 1.0)
            throw std::invalid_argument("log_measure: intervals must lie within [1, inf)");
    }
    std::sort(intervals.begin(), intervals.end());
    double total = 0.0;
    double cur_a = 0.0, cur_b = -1.0;
    for (const auto& [a, b] : intervals) {
        if (a > cur_b) {
            if (cur_b > cur_a) total += std::log(cur_b / cur_a);
            cur_a = a;
            cur_b = b;
        } else {
            cur_b = std::max(cur_b, b);
        }
    }
    if (cur_b > cur_a && cur_a > 0.0) total += std::log(cur_b / cur_a);
    return total;
}

}  // namespace qrc
