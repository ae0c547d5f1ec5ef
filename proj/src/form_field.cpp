#include "qrc/form_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qrc {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double Coeff::eval(const Eigen::VectorXd& x) const {
    switch (kind) {
        case Kind::Const: return amp;
        case Kind::Sin: return amp * std::sin(two_pi * x[coord - 1]);
        case Kind::Cos: return amp * std::cos(two_pi * x[coord - 1]);
    }
    return 0.0;
}

double Coeff::partial(const Eigen::VectorXd& x, int j) const {
    if (kind == Kind::Const || j != coord) return 0.0;
    if (kind == Kind::Sin) return amp * two_pi * std::cos(two_pi * x[coord - 1]);
    return -amp * two_pi * std::sin(two_pi * x[coord - 1]);
}

Coeff Coeff::derivative() const {
    switch (kind) {
        case Kind::Const: return {Kind::Const, 0.0, coord};
        case Kind::Sin: return {Kind::Cos, amp * two_pi, coord};
        case Kind::Cos: return {Kind::Sin, -amp * two_pi, coord};
    }
    return {};
}

FormField FormField::from_terms(TargetManifold target, int degree, std::vector<FormTerm> terms) {
    FormField f;
    f.target = target;
    f.degree = degree;
    f.has_terms_ = true;
    for (const auto& term : terms) {
        if (static_cast<int>(term.idx.size()) != degree)
            throw std::invalid_argument("FormField: term degree mismatch");
        if (!multi_index_valid(term.idx, target.dim))
            throw std::invalid_argument("FormField: term multi-index out of range");
    }
    f.terms_ = std::move(terms);
    return f;
}

FormField FormField::from_evaluator(TargetManifold target, int degree,
                                    std::function<Covector(const Eigen::VectorXd&)> evaluator) {
    FormField f;
    f.target = target;
    f.degree = degree;
    f.evaluator_ = std::move(evaluator);
    return f;
}

FormField FormField::constant(TargetManifold target, const Covector& value) {
    if (value.ambient_dim() != target.dim)
        throw std::invalid_argument("FormField::constant: dimension mismatch");
    std::vector<FormTerm> terms;
    for (const auto& [idx, c] : value.coeffs())
        terms.push_back({Coeff{Coeff::Kind::Const, c, 1}, idx});
    FormField f = from_terms(target, value.degree(), std::move(terms));
    f.is_closed = true;
    return f;
}

FormField FormField::leading_volume(TargetManifold target, int n) {
    if (n > target.dim)
        throw std::invalid_argument("FormField::leading_volume: degree exceeds dimension");
    MultiIndex idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i + 1;
    FormField f = constant(target, Covector::basis(target.dim, idx));
    f.sup_bound = 1.0;
    return f;
}

Covector FormField::eval(const Eigen::VectorXd& x) const {
    if (x.size() != target.dim)
        throw std::invalid_argument("FormField::eval: point dimension mismatch");
    if (has_terms_) {
        Covector out(target.dim, degree);
        for (const auto& term : terms_) out.add_coeff(term.idx, term.coeff.eval(x));
        return out;
    }
    Covector out = evaluator_(x);
    if (out.ambient_dim() != target.dim || out.degree() != degree)
        throw std::runtime_error("FormField: evaluator returned wrong degree or dimension");
    return out;
}

Covector eval_form(const FormField& field, const Eigen::VectorXd& x) { return field.eval(x); }

Covector exterior_derivative_at(const FormField& field, const Eigen::VectorXd& x, double h) {
    const int m = field.target.dim;
    if (field.degree == m) return Covector(m, 0);
    Covector out(m, field.degree + 1);
    if (field.has_terms()) {
        for (const auto& term : field.terms()) {
            if (term.coeff.kind == Coeff::Kind::Const) continue;
            const int j = term.coeff.coord;
            MultiIndex merged;
            merged.push_back(j);
            merged.insert(merged.end(), term.idx.begin(), term.idx.end());
            const int sign = sort_sign(merged);
            if (sign == 0) continue;
            out.add_coeff(merged, sign * term.coeff.partial(x, j));
        }
        return out;
    }
    if (h <= 0) throw std::invalid_argument("exterior_derivative_at: h must be positive");
    for (int j = 1; j <= m; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j - 1] += h;
        xm[j - 1] -= h;
        const Covector diff = (1.0 / (2.0 * h)) * (field.eval(xp) - field.eval(xm));
        for (const auto& [idx, c] : diff.coeffs()) {
            MultiIndex merged;
            merged.push_back(j);
            merged.insert(merged.end(), idx.begin(), idx.end());
            const int sign = sort_sign(merged);
            if (sign == 0) continue;
            out.add_coeff(merged, sign * c);
        }
    }
    return out;
}

FormField exterior_derivative(const FormField& field, double h) {
    const int m = field.target.dim;
    if (field.degree == m) {
        FormField zero = FormField::from_terms(field.target, 0, {});
        zero.is_closed = true;
        return zero;
    }
    FormField out;
    if (field.has_terms()) {
        std::vector<FormTerm> dterms;
        for (const auto& term : field.terms()) {
            if (term.coeff.kind == Coeff::Kind::Const) continue;
            const int j = term.coeff.coord;
            MultiIndex merged;
            merged.push_back(j);
            merged.insert(merged.end(), term.idx.begin(), term.idx.end());
            const int sign = sort_sign(merged);
            if (sign == 0) continue;
            Coeff d = term.coeff.derivative();
            d.amp *= sign;
            dterms.push_back({d, merged});
        }
        out = FormField::from_terms(field.target, field.degree + 1, std::move(dterms));
    } else {
        FormField base = field;
        out = FormField::from_evaluator(
            field.target, field.degree + 1,
            [base, h](const Eigen::VectorXd& x) { return exterior_derivative_at(base, x, h); });
    }
    out.is_closed = true;  // d o d = 0
    return out;
}

FormField scale_field(double c, const FormField& field) {
    FormField out;
    if (field.has_terms()) {
        std::vector<FormTerm> terms = field.terms();
        for (auto& t : terms) t.coeff.amp *= c;
        out = FormField::from_terms(field.target, field.degree, std::move(terms));
    } else {
        FormField base = field;
        out = FormField::from_evaluator(
            field.target, field.degree,
            [base, c](const Eigen::VectorXd& x) { return c * base.eval(x); });
    }
    out.is_closed = field.is_closed;
    if (field.sup_bound) out.sup_bound = std::abs(c) * *field.sup_bound;
    return out;
}

FormField add_fields(const FormField& a, const FormField& b) {
    if (a.target.dim != b.target.dim || a.degree != b.degree)
        throw std::invalid_argument("add_fields: dimension or degree mismatch");
    FormField out;
    if (a.has_terms() && b.has_terms()) {
        std::vector<FormTerm> terms = a.terms();
        terms.insert(terms.end(), b.terms().begin(), b.terms().end());
        out = FormField::from_terms(a.target, a.degree, std::move(terms));
    } else {
        FormField fa = a, fb = b;
        out = FormField::from_evaluator(
            a.target, a.degree,
            [fa, fb](const Eigen::VectorXd& x) { return fa.eval(x) + fb.eval(x); });
    }
    out.is_closed = a.is_closed && b.is_closed;
    if (a.sup_bound && b.sup_bound) out.sup_bound = *a.sup_bound + *b.sup_bound;
    return out;
}

FormField subtract_fields(const FormField& a, const FormField& b) {
    return add_fields(a, scale_field(-1.0, b));
}

FormField wedge_fields(const FormField& a, const FormField& b) {
    if (a.target.dim != b.target.dim)
        throw std::invalid_argument("wedge_fields: dimension mismatch");
    FormField fa = a, fb = b;
    FormField out = FormField::from_evaluator(
        a.target, std::min(a.degree + b.degree, a.target.dim),
        [fa, fb](const Eigen::VectorXd& x) { return wedge(fa.eval(x), fb.eval(x)); });
    out.is_closed = a.is_closed && b.is_closed;
    if (a.sup_bound && b.sup_bound) out.sup_bound = *a.sup_bound * *b.sup_bound;
    return out;
}

double inf_comass(const FormField& field, long samples, const OptimizerConfig& cfg,
                  std::uint64_t seed, double euclidean_box) {
    if (samples < 1) throw std::invalid_argument("inf_comass: samples must be >= 1");
    const int m = field.target.dim;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    bool constant_coeffs = field.has_terms();
    if (constant_coeffs)
        for (const auto& t : field.terms())
            if (t.coeff.kind != Coeff::Kind::Const) constant_coeffs = false;
    const long count = constant_coeffs ? 1 : samples;
    for (long s = 0; s < count; ++s) {
        Eigen::VectorXd x(m);
        for (int i = 0; i < m; ++i) {
            const double u = unit(rng);
            x[i] = field.target.is_torus() ? u : euclidean_box * (2.0 * u - 1.0);
        }
        OptimizerConfig local = cfg;
        local.seed = seed + 17 * s;
        best = std::min(best, comass(field.eval(x), local).value);
    }
    return best;
}

}  // namespace qrc
