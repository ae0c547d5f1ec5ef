#pragma once

#include "qrc/comass.hpp"
#include "qrc/covector.hpp"
#include "qrc/manifold.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qrc {

// Coefficient function from the built-in catalog: a constant, or
// amp * sin(2 pi x_coord) / amp * cos(2 pi x_coord). Z^m-periodic by
// construction, so torus fields stay well defined.
struct Coeff {
    enum class Kind { Const, Sin, Cos };
    Kind kind = Kind::Const;
    double amp = 1.0;
    int coord = 1;  // 1-based, ignored for Const

    double eval(const Eigen::VectorXd& x) const;
    // analytic partial d/dx_j
    double partial(const Eigen::VectorXd& x, int j) const;
    // d/dx_coord as another catalog coefficient (Const differentiates to amp 0)
    Coeff derivative() const;
};

struct FormTerm {
    Coeff coeff;
    MultiIndex idx;
};

// Differential k-form field on the target, in covering coordinates. Either a
// list of catalog terms (analytic exterior derivative available) or an opaque
// evaluator (finite differences).
class FormField {
public:
    TargetManifold target;
    int degree = 0;
    bool is_closed = false;
    std::optional<double> sup_bound;

    static FormField from_terms(TargetManifold target, int degree, std::vector<FormTerm> terms);
    static FormField from_evaluator(TargetManifold target, int degree,
                                    std::function<Covector(const Eigen::VectorXd&)> evaluator);
    static FormField constant(TargetManifold target, const Covector& value);
    // the constant field dx_1 ^ ... ^ dx_n on an (n+1)-torus (or any m >= n)
    static FormField leading_volume(TargetManifold target, int n);

    bool has_terms() const { return has_terms_; }
    const std::vector<FormTerm>& terms() const { return terms_; }

    Covector eval(const Eigen::VectorXd& x) const;

private:
    bool has_terms_ = false;
    std::vector<FormTerm> terms_;
    std::function<Covector(const Eigen::VectorXd&)> evaluator_;
};

Covector eval_form(const FormField& field, const Eigen::VectorXd& x);

// Pointwise exterior derivative: analytic for catalog terms, central finite
// differences of coefficients otherwise. Degree m fields differentiate to the
// zero covector.
Covector exterior_derivative_at(const FormField& field, const Eigen::VectorXd& x,
                                double h = 1e-5);

// Field-level exterior derivative. Term fields map to term fields; evaluator
// fields wrap the finite-difference rule.
FormField exterior_derivative(const FormField& field, double h = 1e-5);

FormField scale_field(double c, const FormField& field);
FormField add_fields(const FormField& a, const FormField& b);
FormField subtract_fields(const FormField& a, const FormField& b);
FormField wedge_fields(const FormField& a, const FormField& b);

// min over random samples of comass(eval(x)). Torus samples are uniform on
// [0,1)^m; Euclidean samples uniform on [-box, box]^m.
double inf_comass(const FormField& field, long samples, const OptimizerConfig& cfg,
                  std::uint64_t seed = 0, double euclidean_box = 1.0);

}  // namespace qrc
