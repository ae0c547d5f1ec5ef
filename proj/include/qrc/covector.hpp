#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrc {

// Strictly increasing tuple of 1-based axis indices. Identifies a basis
// covector dx_{i1} ^ ... ^ dx_{ik}. The empty index is the scalar basis.
using MultiIndex = std::vector<int>;

bool multi_index_valid(const MultiIndex& idx, int ambient_dim);

// Sparse element of Lambda^k(R^m): coefficients over sorted multi-indices.
// Coefficients with |c| < prune_eps are dropped, so the zero covector has an
// empty map and equality testing stays stable.
class Covector {
public:
    static constexpr double prune_eps = 1e-14;

    Covector(int ambient_dim, int degree);

    static Covector basis(int ambient_dim, const MultiIndex& idx, double coeff = 1.0);
    // dx_1 ^ ... ^ dx_m scaled by coeff.
    static Covector volume(int ambient_dim, double coeff = 1.0);

    int ambient_dim() const { return m_; }
    int degree() const { return k_; }
    const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }

    double coeff(const MultiIndex& idx) const;
    void set_coeff(const MultiIndex& idx, double value);
    void add_coeff(const MultiIndex& idx, double value);
    bool is_zero() const { return coeffs_.empty(); }

    Covector& operator+=(const Covector& other);
    Covector& operator-=(const Covector& other);
    Covector& operator*=(double scalar);

    // max_I |c_I| over the stored coefficients
    double max_abs_coeff() const;
    // sum_I |c_I|
    double l1_norm() const;
    double l2_norm() const;

    // Value of the covector on the k column vectors of a m x k matrix:
    // sum_I c_I det(rows I of V). The workhorse for comass and pullbacks.
    double eval_on_columns(const Eigen::MatrixXd& v) const;

    std::string to_string() const;

private:
    int m_;
    int k_;
    std::map<MultiIndex, double> coeffs_;
};

Covector operator+(Covector a, const Covector& b);
Covector operator-(Covector a, const Covector& b);
Covector operator*(double scalar, Covector a);

// Graded-anticommutative product. Degree overflow past the ambient dimension
// yields the zero covector of the requested degree.
Covector wedge(const Covector& a, const Covector& b);

// Hodge star for the Euclidean metric and standard orientation:
// b ^ star(a) = inner(b, a) vol for every b of matching degree.
Covector hodge_star(const Covector& a);

// Euclidean inner product over the orthonormal multi-index basis.
double inner(const Covector& a, const Covector& b);

// Parses the literal syntax "2.0 dx1^dx2 + 1.0 dx3^dx4". Terms separated by
// +/-, indices 1-based, an optional leading coefficient per term.
Covector parse_covector(const std::string& text, int ambient_dim);

// Sign of the permutation sorting `indices` ascending; 0 on a repeated index.
int sort_sign(MultiIndex& indices);

}  // namespace qrc
