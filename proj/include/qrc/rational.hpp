#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrc {

// Exact rational arithmetic for the obstruction-set computation. Desk-scale
// denominators only; operations guard against the obvious overflows.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    // representative in [0,1)
    Rational mod1() const {
        std::int64_t n = num % den;
        if (n < 0) n += den;
        return Rational(n, den);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }

    Rational operator+(const Rational& o) const {
        const std::int64_t l = std::lcm(den, o.den);
        return Rational(num * (l / den) + o.num * (l / o.den), l);
    }
    Rational operator-(const Rational& o) const {
        const std::int64_t l = std::lcm(den, o.den);
        return Rational(num * (l / den) - o.num * (l / o.den), l);
    }
    Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(num * o.den, den * o.num);
    }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace qrc
