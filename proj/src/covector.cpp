#include "qrc/covector.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qrc {

bool multi_index_valid(const MultiIndex& idx, int ambient_dim) {
    int prev = 0;
    for (int i : idx) {
        if (i <= prev || i > ambient_dim) return false;
        prev = i;
    }
    return true;
}

int sort_sign(MultiIndex& indices) {
    // bubble sort, counting swaps; fine at these sizes
    int sign = 1;
    const int n = static_cast<int>(indices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j + 1 < n - i; ++j) {
            if (indices[j] == indices[j + 1]) return 0;
            if (indices[j] > indices[j + 1]) {
                std::swap(indices[j], indices[j + 1]);
                sign = -sign;
            }
        }
    }
    return sign;
}

Covector::Covector(int ambient_dim, int degree) : m_(ambient_dim), k_(degree) {
    if (ambient_dim < 1) throw std::invalid_argument("Covector: ambient_dim must be >= 1");
    if (degree < 0 || degree > ambient_dim)
        throw std::invalid_argument("Covector: degree must lie in 0..ambient_dim");
}

Covector Covector::basis(int ambient_dim, const MultiIndex& idx, double coeff) {
    Covector c(ambient_dim, static_cast<int>(idx.size()));
    c.set_coeff(idx, coeff);
    return c;
}

Covector Covector::volume(int ambient_dim, double coeff) {
    MultiIndex all(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) all[i] = i + 1;
    return basis(ambient_dim, all, coeff);
}

double Covector::coeff(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void Covector::set_coeff(const MultiIndex& idx, double value) {
    if (static_cast<int>(idx.size()) != k_)
        throw std::invalid_argument("Covector::set_coeff: multi-index degree mismatch");
    if (!multi_index_valid(idx, m_))
        throw std::invalid_argument("Covector::set_coeff: malformed multi-index");
    if (std::abs(value) < prune_eps)
        coeffs_.erase(idx);
    else
        coeffs_[idx] = value;
}

void Covector::add_coeff(const MultiIndex& idx, double value) {
    set_coeff(idx, coeff(idx) + value);
}

Covector& Covector::operator+=(const Covector& other) {
    if (other.m_ != m_ || other.k_ != k_)
        throw std::invalid_argument("Covector sum: dimension or degree mismatch");
    for (const auto& [idx, c] : other.coeffs_) add_coeff(idx, c);
    return *this;
}

Covector& Covector::operator-=(const Covector& other) {
    if (other.m_ != m_ || other.k_ != k_)
        throw std::invalid_argument("Covector difference: dimension or degree mismatch");
    for (const auto& [idx, c] : other.coeffs_) add_coeff(idx, -c);
    return *this;
}

Covector& Covector::operator*=(double scalar) {
    std::map<MultiIndex, double> scaled;
    for (const auto& [idx, c] : coeffs_) {
        const double v = c * scalar;
        if (std::abs(v) >= prune_eps) scaled[idx] = v;
    }
    coeffs_ = std::move(scaled);
    return *this;
}

double Covector::max_abs_coeff() const {
    double best = 0.0;
    for (const auto& [idx, c] : coeffs_) best = std::max(best, std::abs(c));
    return best;
}

double Covector::l1_norm() const {
    double s = 0.0;
    for (const auto& [idx, c] : coeffs_) s += std::abs(c);
    return s;
}

double Covector::l2_norm() const {
    double s = 0.0;
    for (const auto& [idx, c] : coeffs_) s += c * c;
    return std::sqrt(s);
}

double Covector::eval_on_columns(const Eigen::MatrixXd& v) const {
    if (v.rows() != m_ || v.cols() != k_)
        throw std::invalid_argument("Covector::eval_on_columns: expected " + std::to_string(m_) +
                                    "x" + std::to_string(k_) + " matrix");
    if (k_ == 0) {
        // degree-0 value: the scalar coefficient of the empty index
        return coeff({});
    }
    double total = 0.0;
    Eigen::MatrixXd minor(k_, k_);
    for (const auto& [idx, c] : coeffs_) {
        for (int r = 0; r < k_; ++r) minor.row(r) = v.row(idx[r] - 1);
        total += c * minor.determinant();
    }
    return total;
}

std::string Covector::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        out << std::abs(c);
        if (!idx.empty()) {
            out << " ";
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) out << "^";
                out << "dx" << idx[i];
            }
        }
    }
    return out.str();
}

Covector operator+(Covector a, const Covector& b) { return a += b; }
Covector operator-(Covector a, const Covector& b) { return a -= b; }
Covector operator*(double scalar, Covector a) { return a *= scalar; }

Covector wedge(const Covector& a, const Covector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("wedge: ambient dimension mismatch");
    const int m = a.ambient_dim();
    const int k = a.degree() + b.degree();
    if (k > m) return Covector(m, std::min(k, m));  // truncated exterior algebra
    Covector result(m, k);
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            MultiIndex merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            const int sign = sort_sign(merged);
            if (sign == 0) continue;
            result.add_coeff(merged, sign * ca * cb);
        }
    }
    return result;
}

Covector hodge_star(const Covector& a) {
    const int m = a.ambient_dim();
    const int k = a.degree();
    Covector result(m, m - k);
    for (const auto& [idx, c] : a.coeffs()) {
        std::vector<bool> used(m + 1, false);
        for (int i : idx) used[i] = true;
        MultiIndex complement;
        complement.reserve(m - k);
        for (int i = 1; i <= m; ++i)
            if (!used[i]) complement.push_back(i);
        // sign of the permutation (idx, complement) relative to (1..m)
        MultiIndex joined = idx;
        joined.insert(joined.end(), complement.begin(), complement.end());
        const int sign = sort_sign(joined);
        result.add_coeff(complement, sign * c);
    }
    return result;
}

double inner(const Covector& a, const Covector& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.degree() != b.degree())
        throw std::invalid_argument("inner: dimension or degree mismatch");
    double s = 0.0;
    for (const auto& [idx, c] : a.coeffs()) s += c * b.coeff(idx);
    return s;
}

namespace {

void skip_spaces(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool parse_term(const std::string& s, size_t& pos, double& coeff, MultiIndex& idx) {
    skip_spaces(s, pos);
    if (pos >= s.size()) return false;
    coeff = 1.0;
    idx.clear();
    // optional numeric coefficient
    size_t start = pos;
    char* end = nullptr;
    const double value = std::strtod(s.c_str() + pos, &end);
    if (end != s.c_str() + pos) {
        coeff = value;
        pos = end - s.c_str();
        skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_spaces(s, pos);
        }
    } else {
        pos = start;
    }
    // dx factors
    while (pos + 1 < s.size() && s[pos] == 'd' && s[pos + 1] == 'x') {
        pos += 2;
        size_t digits = pos;
        while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
        if (digits == pos) throw std::invalid_argument("parse_covector: dx without index");
        idx.push_back(std::stoi(s.substr(pos, digits - pos)));
        pos = digits;
        skip_spaces(s, pos);
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_spaces(s, pos);
        } else {
            break;
        }
    }
    return true;
}

}  // namespace

Covector parse_covector(const std::string& text, int ambient_dim) {
    struct Term {
        double coeff;
        MultiIndex idx;
    };
    std::vector<Term> terms;
    size_t pos = 0;
    double sign = 1.0;
    skip_spaces(text, pos);
    bool expect_term = true;
    while (pos < text.size()) {
        if (text[pos] == '+') {
            sign = 1.0;
            ++pos;
            expect_term = true;
            skip_spaces(text, pos);
            continue;
        }
        if (text[pos] == '-') {
            sign = -1.0;
            ++pos;
            expect_term = true;
            skip_spaces(text, pos);
            continue;
        }
        if (!expect_term)
            throw std::invalid_argument("parse_covector: expected + or - near '" +
                                        text.substr(pos) + "'");
        double coeff;
        MultiIndex idx;
        if (!parse_term(text, pos, coeff, idx)) break;
        terms.push_back({sign * coeff, idx});
        expect_term = false;
        skip_spaces(text, pos);
    }
    if (terms.empty()) throw std::invalid_argument("parse_covector: no terms in '" + text + "'");
    const int degree = static_cast<int>(terms.front().idx.size());
    Covector result(ambient_dim, degree);
    for (auto& term : terms) {
        if (static_cast<int>(term.idx.size()) != degree)
            throw std::invalid_argument("parse_covector: mixed degrees in '" + text + "'");
        const int s = sort_sign(term.idx);
        if (s == 0) continue;  // repeated index kills the term
        if (!multi_index_valid(term.idx, ambient_dim))
            throw std::invalid_argument("parse_covector: index out of range in '" + text + "'");
        result.add_coeff(term.idx, s * term.coeff);
    }
    return result;
}

}  // namespace qrc
