#include "qrc/covector.hpp"

#include <doctest.h>

#include <random>

using namespace qrc;

namespace {

Covector random_covector(int m, int k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    Covector c(m, k);
    // walk all increasing k-tuples of 1..m
    MultiIndex idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        c.set_coeff(idx, coeff(rng));
        int j = k - 1;
        while (j >= 0 && idx[j] == m - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return c;
}

}  // namespace

TEST_CASE("sort_sign counts inversions and kills repeats") {
    MultiIndex a{2, 1};
    CHECK(sort_sign(a) == -1);
    CHECK(a == MultiIndex{1, 2});
    MultiIndex b{3, 1, 2};
    CHECK(sort_sign(b) == 1);
    MultiIndex c{1, 1};
    CHECK(sort_sign(c) == 0);
}

TEST_CASE("wedge anticommutativity on basis covectors") {
    std::mt19937_64 rng(11);
    for (int m = 2; m <= 5; ++m) {
        for (int k = 1; k < m; ++k) {
            for (int l = 1; l + k <= m; ++l) {
                const Covector a = random_covector(m, k, rng);
                const Covector b = random_covector(m, l, rng);
                const Covector ab = wedge(a, b);
                const Covector ba = wedge(b, a);
                const double sign = (k * l) % 2 == 0 ? 1.0 : -1.0;
                const Covector diff = ab - sign * ba;
                CHECK(diff.max_abs_coeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("wedge associativity") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 5;
        const Covector a = random_covector(m, 1, rng);
        const Covector b = random_covector(m, 2, rng);
        const Covector c = random_covector(m, 1, rng);
        const Covector left = wedge(wedge(a, b), c);
        const Covector right = wedge(a, wedge(b, c));
        CHECK((left - right).max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("wedge truncates past the ambient dimension") {
    const Covector a = Covector::basis(3, {1, 2});
    const Covector b = Covector::basis(3, {2, 3});
    CHECK(wedge(a, b).is_zero());
}

TEST_CASE("Hodge star defining identity b ^ star a = <b, a> vol") {
    std::mt19937_64 rng(13);
    for (int m = 2; m <= 5; ++m) {
        for (int k = 0; k <= m; ++k) {
            const Covector a = k == 0 ? Covector::basis(m, {}, 1.5) : random_covector(m, k, rng);
            const Covector b = k == 0 ? Covector::basis(m, {}, -0.5) : random_covector(m, k, rng);
            const Covector lhs = wedge(b, hodge_star(a));
            const double want = inner(b, a);
            MultiIndex vol_idx(m);
            for (int i = 0; i < m; ++i) vol_idx[i] = i + 1;
            CHECK(lhs.coeff(vol_idx) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("star star sign is (-1)^{k(m-k)}, exhaustive over basis indices") {
    for (int m = 1; m <= 5; ++m) {
        for (int k = 0; k <= m; ++k) {
            // iterate all increasing k-subsets
            std::vector<int> pick(k);
            for (int i = 0; i < k; ++i) pick[i] = i + 1;
            while (true) {
                const Covector a = Covector::basis(m, pick);
                const Covector ss = hodge_star(hodge_star(a));
                const double sign = (k * (m - k)) % 2 == 0 ? 1.0 : -1.0;
                CHECK((ss - sign * a).max_abs_coeff() < 1e-14);
                if (k == 0) break;
                int j = k - 1;
                while (j >= 0 && pick[j] == m - (k - 1 - j)) --j;
                if (j < 0) break;
                ++pick[j];
                for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
            }
        }
    }
}

TEST_CASE("eval_on_columns matches the minor expansion") {
    // dx1^dx2 on two columns is the top-left 2x2 minor
    Eigen::MatrixXd v(3, 2);
    v << 1, 2, 3, 4, 5, 6;
    const Covector a = Covector::basis(3, {1, 2});
    CHECK(a.eval_on_columns(v) == doctest::Approx(1 * 4 - 2 * 3));
    const Covector b = Covector::basis(3, {2, 3});
    CHECK(b.eval_on_columns(v) == doctest::Approx(3 * 6 - 4 * 5));
}

TEST_CASE("parse_covector round trips the term list") {
    const Covector c = parse_covector("2.0 dx1^dx2 + 1.0 dx3^dx4 - 0.5 dx1^dx4", 4);
    CHECK(c.degree() == 2);
    CHECK(c.coeff({1, 2}) == doctest::Approx(2.0));
    CHECK(c.coeff({3, 4}) == doctest::Approx(1.0));
    CHECK(c.coeff({1, 4}) == doctest::Approx(-0.5));
    // permuted factors pick up the permutation sign
    const Covector d = parse_covector("1.0 dx2^dx1", 2);
    CHECK(d.coeff({1, 2}) == doctest::Approx(-1.0));
}

TEST_CASE("covector norms") {
    Covector c(4, 2);
    c.set_coeff({1, 2}, 3.0);
    c.set_coeff({3, 4}, -4.0);
    CHECK(c.max_abs_coeff() == doctest::Approx(4.0));
    CHECK(c.l1_norm() == doctest::Approx(7.0));
    CHECK(c.l2_norm() == doctest::Approx(5.0));
}
