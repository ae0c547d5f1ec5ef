#include "qrc/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qrc {

double Number::to_double() const {
    switch (kind) {
        case Kind::Decimal: return decimal;
        case Kind::Exact: return exact.to_double();
        case Kind::Sqrt: return std::sqrt(static_cast<double>(sqrt_arg));
    }
    return 0.0;
}

std::string Number::to_string() const {
    switch (kind) {
        case Kind::Decimal: {
            std::ostringstream out;
            out << decimal;
            return out.str();
        }
        case Kind::Exact: return exact.to_string();
        case Kind::Sqrt: return "sqrt:" + std::to_string(sqrt_arg);
    }
    return "";
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    return parts;
}

}  // namespace

Number parse_number(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("parse_number: empty literal");
    Number num;
    if (s.rfind("sqrt:", 0) == 0) {
        num.kind = Number::Kind::Sqrt;
        num.sqrt_arg = std::stol(s.substr(5));
        if (num.sqrt_arg < 0) throw std::invalid_argument("parse_number: negative sqrt argument");
        return num;
    }
    const size_t slash = s.find('/');
    if (slash != std::string::npos) {
        num.kind = Number::Kind::Exact;
        num.exact = Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        return num;
    }
    size_t used = 0;
    num.kind = Number::Kind::Decimal;
    num.decimal = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("parse_number: trailing junk in '" + s + "'");
    // integer literals stay exact
    if (s.find_first_of(".eE") == std::string::npos) {
        num.kind = Number::Kind::Exact;
        num.exact = Rational(std::stoll(s));
    }
    return num;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        cfg.entries_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string Config::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw std::runtime_error("missing config key: " + key);
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? parse_number(get(key)).to_double() : fallback;
}

long Config::get_long(const std::string& key, long fallback) const {
    return has(key) ? std::stol(get(key)) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = get(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::runtime_error("config key " + key + ": expected boolean, got '" + v + "'");
}

std::vector<Number> Config::get_numbers(const std::string& key) const {
    std::vector<Number> out;
    for (const std::string& part : split(get(key), ','))
        out.push_back(parse_number(part));
    return out;
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = value; }

TargetManifold build_target(const Config& cfg) {
    const std::string kind = cfg.get_or("target.kind", "flat_torus");
    const int dim = static_cast<int>(cfg.get_long("target.dim", 3));
    if (dim < 2) throw std::runtime_error("target.dim: must be >= 2");
    if (kind == "flat_torus") return TargetManifold::flat_torus(dim);
    if (kind == "euclidean") return TargetManifold::euclidean(dim);
    throw std::runtime_error("target.kind: expected flat_torus or euclidean, got '" + kind + "'");
}

CurveSpec build_curve(const Config& cfg) {
    CurveSpec spec;
    spec.kind = cfg.get_or("curve.kind", "torus_linear");
    if (spec.kind == "torus_linear") {
        spec.slope = cfg.get_numbers("curve.y");
        Eigen::VectorXd y(spec.slope.size());
        for (size_t i = 0; i < spec.slope.size(); ++i) y[i] = spec.slope[i].to_double();
        spec.torus = TorusLinearCurve::make(y);
        spec.map = spec.torus->curve;
        return spec;
    }
    if (spec.kind == "builtin:identity") {
        spec.map = CurveMap::identity(static_cast<int>(cfg.get_long("curve.dim", 2)));
        return spec;
    }
    if (spec.kind == "builtin:poly_demo") {
        spec.map = CurveMap::poly_demo();
        return spec;
    }
    if (spec.kind == "builtin:linear") {
        const std::vector<std::string> rows = split(cfg.get("curve.matrix"), ';');
        if (rows.empty()) throw std::runtime_error("curve.matrix: empty");
        std::vector<std::vector<double>> data;
        for (const std::string& row : rows) {
            std::vector<double> r;
            std::istringstream in(row);
            double v;
            while (in >> v) r.push_back(v);
            data.push_back(r);
        }
        Eigen::MatrixXd a(data.size(), data.front().size());
        for (size_t i = 0; i < data.size(); ++i) {
            if (data[i].size() != data.front().size())
                throw std::runtime_error("curve.matrix: ragged rows");
            for (size_t j = 0; j < data[i].size(); ++j) a(i, j) = data[i][j];
        }
        TargetManifold target = TargetManifold::euclidean(static_cast<int>(a.rows()));
        if (cfg.has("target.kind")) target = build_target(cfg);
        spec.map = CurveMap::linear(a, target);
        return spec;
    }
    throw std::runtime_error("curve.kind: unknown kind '" + spec.kind + "'");
}

namespace {

// "2.0 dx1^dx2 + 0.5 sin:3 dx1"; coefficient and function tag optional
std::vector<FormTerm> parse_form_terms(const std::string& text, int degree, int ambient_dim) {
    std::vector<FormTerm> terms;
    std::string cur;
    double sign = 1.0;
    auto flush = [&](double next_sign) {
        const std::string body = trim(cur);
        cur.clear();
        if (body.empty()) {
            sign = next_sign;
            return;
        }
        std::istringstream in(body);
        std::string token;
        Coeff coeff{Coeff::Kind::Const, sign, 1};
        MultiIndex idx;
        bool saw_number = false;
        while (in >> token) {
            if (token.rfind("dx", 0) == 0) {
                for (const std::string& factor : split(token, '^')) {
                    if (factor.rfind("dx", 0) != 0)
                        throw std::runtime_error("form term: expected dx factor in '" + body + "'");
                    idx.push_back(std::stoi(factor.substr(2)));
                }
            } else if (token.rfind("sin:", 0) == 0) {
                coeff.kind = Coeff::Kind::Sin;
                coeff.coord = std::stoi(token.substr(4));
            } else if (token.rfind("cos:", 0) == 0) {
                coeff.kind = Coeff::Kind::Cos;
                coeff.coord = std::stoi(token.substr(4));
            } else if (!saw_number) {
                coeff.amp = sign * parse_number(token).to_double();
                saw_number = true;
            } else {
                throw std::runtime_error("form term: unexpected token '" + token + "'");
            }
        }
        const int s = sort_sign(idx);
        if (s != 0) {
            coeff.amp *= s;
            if (static_cast<int>(idx.size()) != degree)
                throw std::runtime_error("form term degree mismatch in '" + body + "'");
            if (!multi_index_valid(idx, ambient_dim))
                throw std::runtime_error("form term index out of range in '" + body + "'");
            terms.push_back({coeff, idx});
        }
        sign = next_sign;
    };
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '+') {
            flush(1.0);
        } else if (c == '-') {
            // '-' separates terms except inside an e-notation exponent
            if (i > 0 && (text[i - 1] == 'e' || text[i - 1] == 'E'))
                cur += c;
            else
                flush(-1.0);
        } else {
            cur += c;
        }
    }
    flush(1.0);
    return terms;
}

}  // namespace

FormField build_form(const Config& cfg, const std::string& name, const TargetManifold& target) {
    const std::string prefix = "form." + name + ".";
    const int degree = static_cast<int>(cfg.get_long(prefix + "degree", -1));
    if (degree < 0) throw std::runtime_error(prefix + "degree: missing");
    if (degree > target.dim)
        throw std::runtime_error(prefix + "degree: exceeds target dimension");
    std::vector<FormTerm> terms =
        parse_form_terms(cfg.get(prefix + "terms"), degree, target.dim);
    FormField field = FormField::from_terms(target, degree, std::move(terms));
    field.is_closed = cfg.get_bool(prefix + "closed", false);
    if (cfg.has(prefix + "sup_bound")) {
        const std::string bound = cfg.get(prefix + "sup_bound");
        if (bound != "unbounded") field.sup_bound = parse_number(bound).to_double();
    }
    return field;
}

QuadratureSpec build_quadrature(const Config& cfg, int domain_dim) {
    QuadratureSpec spec = QuadratureSpec::defaults_for(domain_dim);
    const std::string method = cfg.get_or("quadrature.method", "");
    if (method == "tensor-polar") spec.method = QuadratureSpec::Method::TensorPolar;
    else if (method == "monte-carlo") spec.method = QuadratureSpec::Method::MonteCarlo;
    else if (!method.empty())
        throw std::runtime_error("quadrature.method: expected tensor-polar or monte-carlo");
    if (spec.method == QuadratureSpec::Method::TensorPolar && domain_dim > 4)
        throw std::runtime_error("quadrature.method: tensor-polar supports n <= 4 only");
    spec.budget = cfg.get_long("quadrature.budget", spec.budget);
    spec.seed = static_cast<std::uint64_t>(cfg.get_long("quadrature.seed", 0));
    spec.tol = cfg.get_double("quadrature.tol", spec.tol);
    return spec;
}

std::vector<double> build_radii(const Config& cfg) {
    std::vector<double> radii;
    for (const Number& n : cfg.get_numbers("radii")) radii.push_back(n.to_double());
    return radii;
}

std::vector<Ball> build_balls(const Config& cfg, int n) {
    if (cfg.has("balls.list")) {
        std::vector<Ball> balls;
        for (const std::string& entry : split(cfg.get("balls.list"), ';')) {
            std::istringstream in(entry);
            std::vector<double> vals;
            double v;
            while (in >> v) vals.push_back(v);
            if (static_cast<int>(vals.size()) != n + 1)
                throw std::runtime_error("balls.list: expected n center coordinates + radius");
            Ball b;
            b.center = Eigen::Map<Eigen::VectorXd>(vals.data(), n);
            b.radius = vals.back();
            balls.push_back(b);
        }
        return balls;
    }
    return random_ball_family(n, static_cast<int>(cfg.get_long("balls.count", 20)),
                              cfg.get_double("balls.center_box", 2.0),
                              cfg.get_double("balls.r_min", 0.5),
                              cfg.get_double("balls.r_max", 2.0),
                              static_cast<std::uint64_t>(cfg.get_long("balls.seed", 0)));
}

GridSpec build_grid(const Config& cfg) {
    GridSpec grid;
    grid.lo = cfg.get_double("density.grid.lo", 0.0);
    grid.hi = cfg.get_double("density.grid.hi", 50.0);
    grid.step = cfg.get_double("density.grid.step", 0.1);
    return grid;
}

std::vector<std::string> validate_config(const Config& cfg, const std::string& subcommand) {
    std::vector<std::string> issues;
    auto check = [&](const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            issues.emplace_back(e.what());
        }
    };

    if (subcommand == "comass") {
        check([&] {
            const int dim = static_cast<int>(cfg.get_long("comass.dim", -1));
            if (dim < 1) throw std::runtime_error("comass.dim: missing or < 1");
            parse_covector(cfg.get("comass.expr"), dim);
        });
        return issues;
    }

    TargetManifold target;
    bool have_target = false;
    check([&] {
        target = build_target(cfg);
        have_target = true;
    });

    CurveSpec curve;
    bool have_curve = false;
    check([&] {
        curve = build_curve(cfg);
        have_curve = true;
    });
    if (have_target && have_curve && curve.kind == "torus_linear" &&
        curve.map.target.dim != target.dim)
        issues.push_back("target.dim: torus_linear curve targets dimension " +
                         std::to_string(curve.map.target.dim));
    if (have_curve && curve.map.domain_dim > curve.map.target.dim)
        issues.push_back("curve: domain dimension exceeds target dimension (n > m)");

    const TargetManifold form_target =
        have_curve ? curve.map.target : (have_target ? target : TargetManifold::flat_torus(3));

    auto need_form = [&](const std::string& name, int expected_degree) {
        check([&] {
            const FormField field = build_form(cfg, name, form_target);
            if (expected_degree >= 0 && field.degree != expected_degree)
                throw std::runtime_error("form." + name + ".degree: expected " +
                                         std::to_string(expected_degree) + ", got " +
                                         std::to_string(field.degree));
        });
    };

    const int n = have_curve ? curve.map.domain_dim : 2;
    if (subcommand == "distortion" || subcommand == "growth" || subcommand == "rhi" ||
        subcommand == "prop4" || subcommand == "higherint") {
        need_form("omega", n);
    }
    if (subcommand == "growth" || subcommand == "equi")
        check([&] {
            const std::vector<double> radii = build_radii(cfg);
            for (size_t i = 0; i < radii.size(); ++i) {
                if (radii[i] <= 0) throw std::runtime_error("radii: must be positive");
                if (i > 0 && radii[i] <= radii[i - 1])
                    throw std::runtime_error("radii: must be strictly increasing");
            }
        });
    if (subcommand == "rhi")
        check([&] {
            if (cfg.get_double("analysis.p", 2.0) <= 1.0)
                throw std::runtime_error("analysis.p: must exceed 1");
        });
    if (subcommand == "rhi" || subcommand == "prop4")
        check([&] { build_balls(cfg, n); });
    if (subcommand == "higherint")
        check([&] {
            if (cfg.get_double("analysis.p", 2.0) <= 1.0)
                throw std::runtime_error("analysis.p: must exceed 1");
            if (cfg.get_double("analysis.K", 1.0) < 1.0)
                throw std::runtime_error("analysis.K: must be >= 1");
        });
    if (subcommand == "equi") {
        need_form("omega0", n);
        need_form("tau", n - 1);
        check([&] {
            const double delta = cfg.get_double("analysis.delta", (2.0 * n - 1) / (2.0 * n));
            if (!(delta > static_cast<double>(n - 1) / n && delta < 1.0))
                throw std::runtime_error("analysis.delta: must lie in ((n-1)/n, 1)");
        });
    }
    if (subcommand == "density") {
        if (have_curve && !curve.torus)
            issues.push_back("curve.kind: density requires torus_linear");
        check([&] {
            const std::vector<Number> v = cfg.get_numbers("density.v");
            if (have_curve && curve.torus &&
                static_cast<int>(v.size()) != curve.map.target.dim)
                throw std::runtime_error("density.v: expected " +
                                         std::to_string(curve.map.target.dim) + " coordinates");
            bool rational_slope = true;
            for (const Number& y : curve.slope) rational_slope &= y.is_rational();
            if (rational_slope && !v.empty()) {
                for (size_t j = 0; j + 1 < v.size(); ++j)
                    if (!v[j].is_rational())
                        throw std::runtime_error(
                            "density.v: first n coordinates must be rational for rational slopes");
                if (v.back().is_rational())
                    throw std::runtime_error(
                        "density.v: last coordinate must be irrational (float or sqrt:k)");
            }
            build_grid(cfg);
        });
    }
    if (subcommand == "signed") {
        check([&] {
            const std::string kind = cfg.get_or("rep.kind", "split");
            if (kind == "torus") {
                const int l = static_cast<int>(cfg.get_long("rep.l", 1));
                if (!have_curve) return;
                if (l < 1 || l > curve.map.target.dim - 1)
                    throw std::runtime_error("rep.l: must lie in 1..m-1");
                if (curve.map.domain_dim != curve.map.target.dim)
                    throw std::runtime_error(
                        "rep.kind: torus representation needs domain dim == target dim");
            } else if (kind == "split") {
                const FormField alpha = build_form(cfg, "alpha", form_target);
                const FormField beta = build_form(cfg, "beta", form_target);
                if (have_curve && alpha.degree + beta.degree != curve.map.domain_dim)
                    throw std::runtime_error(
                        "form.alpha/form.beta: degrees must sum to the domain dimension");
            } else {
                throw std::runtime_error("rep.kind: expected 'torus' or 'split'");
            }
        });
    }
    check([&] { build_quadrature(cfg, n); });
    return issues;
}

}  // namespace qrc
