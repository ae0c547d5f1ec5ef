#pragma once

#include "qrc/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrc {

// ---------------------------------------------------------------------------
// growth

struct GrowthReport {
    std::vector<double> radii;
    std::vector<IntegralEstimate> values;  // A(r) per radius
    double epsilon = 0.0;
    std::vector<double> normalized;  // A(r) / r^epsilon
    double tail_min = 0.0;           // min of normalized over the tail half
    double slope = 0.0;              // least-squares slope of log A vs log r, tail half
};

// A(r) = integral of the pullback density over B^n(r), per scheduled radius.
GrowthReport growth_function(const CurveMap& f, const FormField& omega,
                             const std::vector<double>& radii, double epsilon,
                             const QuadratureSpec& spec);

// The explicit constants of the reverse-Holder-to-growth argument:
// epsilon = n (1 - 1/p), C = C_p^{-1} |B^n(1)|^{1-1/p} 2^{n/p}.
std::pair<double, double> epsilon_and_constant(int n, double p, double c_p);

struct FastGrowthResult {
    bool pass = false;
    double epsilon = 0.0;
    double constant = 0.0;
    double p_norm = 0.0;        // (integral of density^p over B(r0/2))^{1/p}
    double worst_margin = 0.0;  // min over scheduled r >= r0 of A/r^eps - C * p_norm
    double worst_radius = 0.0;
};

// Checks A(r)/r^eps >= C * (int_{B(r0/2)} density^p)^{1/p} for every scheduled
// radius >= r0. `slack` is a relative numerical allowance on the comparison.
FastGrowthResult fast_growth_check(const GrowthReport& report, const CurveMap& f,
                                   const FormField& omega, double c_p, double p, double r0,
                                   const QuadratureSpec& spec, double slack = 1e-9);

// ---------------------------------------------------------------------------
// reverse Holder

struct Ball {
    Eigen::VectorXd center;
    double radius = 1.0;
};

std::vector<Ball> random_ball_family(int n, int count, double center_box, double r_min,
                                     double r_max, std::uint64_t seed);

struct HolderReport {
    double p = 2.0;
    std::vector<Ball> balls;
    std::vector<double> lhs;  // (avg over B/2 of density^p)^{1/p}
    std::vector<double> rhs;  // avg over B of density
    std::vector<int> excluded;  // balls with nonpositive or sign-violating data
    double c_hat = 0.0;
    int worst_ball = -1;
};

HolderReport reverse_holder_estimate(const CurveMap& f, const FormField& omega,
                                     const std::vector<Ball>& balls, double p,
                                     const QuadratureSpec& spec);

struct Prop4Report {
    std::vector<Ball> balls;
    std::vector<double> lhs;  // avg over B/2 of density
    std::vector<double> rhs;  // (avg over B of density^{n/(n+1)})^{(n+1)/n}
    std::vector<int> excluded;
    double c_hat = 0.0;
    int worst_ball = -1;
};

Prop4Report prop4_check(const CurveMap& f, const FormField& omega, const std::vector<Ball>& balls,
                        const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// higher integrability

struct HigherIntReport {
    double p = 2.0;
    double q = 4.0;  // q = n p
    double k = 1.0;
    IntegralEstimate lhs;  // int_U |Df|^q
    IntegralEstimate rhs_integral;  // int_U density^p
    double rhs = 0.0;  // (inf comass)^{-p} K^p rhs_integral
    double inf_comass_value = 1.0;
    bool pass = false;
};

HigherIntReport higher_integrability_check(const CurveMap& f, const FormField& omega,
                                           const Ball& u, double p, double k,
                                           const QuadratureSpec& spec,
                                           const OptimizerConfig& comass_cfg = {});

// ---------------------------------------------------------------------------
// equidistribution

struct EquiReport {
    double delta = 0.75;
    std::vector<double> radii;
    std::vector<double> a0;             // A_{omega0}(r)
    std::vector<double> a;              // A_{omega}(r), omega = omega0 - d tau
    std::vector<double> ratio;          // A / A0
    std::vector<double> sphere_direct;  // int_{S(r)} f^* tau
    std::vector<double> sphere_stokes;  // A0(r) - A(r)
    std::vector<double> stokes_gap;     // |direct - stokes|
    std::vector<double> combined_error;
    std::vector<double> decay_bound;  // A0(r)^{delta-1}
    std::vector<bool> flagged;        // A0(r)^delta <= |sphere term|
    std::vector<bool> excluded;       // A0(r) <= 0
    std::vector<std::pair<double, double>> exception_intervals;
    double log_measure_e = 0.0;
    bool decay_holds = true;   // |ratio-1| <= decay_bound on unflagged radii
    bool stokes_agrees = true;  // within combined error bounds
};

EquiReport equidistribution_report(const CurveMap& f, const FormField& omega0,
                                   const FormField& tau, const std::vector<double>& radii,
                                   double delta, const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// signed representations

struct RepresentationTerm {
    FormField phi;    // degree-0 coefficient field with sup bound
    FormField alpha;  // closed, degree l
    FormField beta;   // closed, degree n - l
};

struct SignedRepresentation {
    enum class Kind { FSigned, RLinear };
    Kind kind = Kind::RLinear;
    std::vector<RepresentationTerm> terms;

    // sum phi_i (alpha_i ^ beta_i) at x
    Covector reconstruct(const Eigen::VectorXd& x) const;
};

// max reconstruction error of the representation against omega over samples
double representation_error(const SignedRepresentation& rep, const FormField& omega,
                            long samples, std::uint64_t seed, double box = 1.0);

enum class TermSign { Nonnegative, Nonpositive, Mixed, Zero };

struct SignVerdict {
    std::vector<TermSign> term_verdicts;
    std::vector<Eigen::VectorXd> mixed_witnesses;  // one pair (pos, neg) per mixed term
    bool is_signed = true;                         // no term came back Mixed
};

// Samples star f^*(alpha_i ^ beta_i) per term; the sign threshold scales with
// the local magnitude so roundoff zeros stay Zero.
SignVerdict signed_check(const SignedRepresentation& rep, const CurveMap& f,
                         const SampleSpec& samples, double eta = 1e-12);

// The flat-torus instance of the volume-form representation: a single R-linear
// term xi ^ star xi with xi a constant-coefficient l-form normalized so that
// the product integrates to the torus volume. Constant harmonic representative,
// trivial partition and diffeomorphism.
SignedRepresentation torus_signed_representation(int l, const TargetManifold& target,
                                                 const Covector* xi_seed = nullptr);

}  // namespace qrc
