#pragma once

#include "qrc/analysis.hpp"
#include "qrc/density.hpp"
#include "qrc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrc {

// Numeric literal from configs: a decimal, an exact rational "p/q", or an
// irrational surrogate "sqrt:k". Rationals survive parsing exactly so the
// density dichotomy can run on exact arithmetic.
struct Number {
    enum class Kind { Decimal, Exact, Sqrt };
    Kind kind = Kind::Decimal;
    double decimal = 0.0;
    Rational exact;
    long sqrt_arg = 0;

    double to_double() const;
    bool is_rational() const { return kind == Kind::Exact; }
    std::string to_string() const;
};

Number parse_number(const std::string& text);

// Line-oriented config: `dotted.key = value`, '#' comments, blank lines
// ignored.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<Number> get_numbers(const std::string& key) const;

    void set(const std::string& key, const std::string& value);
    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

struct CurveSpec {
    CurveMap map;
    std::optional<TorusLinearCurve> torus;
    std::vector<Number> slope;  // raw slope literals for the torus family
    std::string kind;
};

TargetManifold build_target(const Config& cfg);
CurveSpec build_curve(const Config& cfg);
// form.<name>.degree / .terms / .closed / .sup_bound; term syntax
// "2.0 dx1^dx2 + 0.5 sin:3 dx1" where sin:k / cos:k are taken at 2 pi x_k
FormField build_form(const Config& cfg, const std::string& name, const TargetManifold& target);
QuadratureSpec build_quadrature(const Config& cfg, int domain_dim);
std::vector<double> build_radii(const Config& cfg);
std::vector<Ball> build_balls(const Config& cfg, int n);
GridSpec build_grid(const Config& cfg);

// full constraint report; empty means the config is runnable for the
// subcommand
std::vector<std::string> validate_config(const Config& cfg, const std::string& subcommand);

}  // namespace qrc
