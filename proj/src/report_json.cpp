#include "qrc/report_json.hpp"

namespace qrc {

Json vector_to_json(const Eigen::VectorXd& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vector_from_json(const Json& j) {
    Eigen::VectorXd v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
    return v;
}

Json to_json(const IntegralEstimate& est) {
    return Json{{"value", est.value},
                {"error_bound", est.error_bound},
                {"budget_used", est.budget_used}};
}

IntegralEstimate integral_estimate_from_json(const Json& j) {
    return {j.at("value").get<double>(), j.at("error_bound").get<double>(),
            j.at("budget_used").get<long>()};
}

Json to_json(const GrowthReport& report) {
    Json values = Json::array();
    for (const auto& v : report.values) values.push_back(to_json(v));
    return Json{{"radii", report.radii},     {"values", values},
                {"epsilon", report.epsilon}, {"normalized", report.normalized},
                {"tail_min", report.tail_min}, {"slope", report.slope}};
}

GrowthReport growth_report_from_json(const Json& j) {
    GrowthReport report;
    report.radii = j.at("radii").get<std::vector<double>>();
    for (const auto& v : j.at("values")) report.values.push_back(integral_estimate_from_json(v));
    report.epsilon = j.at("epsilon").get<double>();
    report.normalized = j.at("normalized").get<std::vector<double>>();
    report.tail_min = j.at("tail_min").get<double>();
    report.slope = j.at("slope").get<double>();
    return report;
}

Json to_json(const FastGrowthResult& result) {
    return Json{{"pass", result.pass},
                {"epsilon", result.epsilon},
                {"constant", result.constant},
                {"p_norm", result.p_norm},
                {"worst_margin", result.worst_margin},
                {"worst_radius", result.worst_radius}};
}

FastGrowthResult fast_growth_from_json(const Json& j) {
    FastGrowthResult r;
    r.pass = j.at("pass").get<bool>();
    r.epsilon = j.at("epsilon").get<double>();
    r.constant = j.at("constant").get<double>();
    r.p_norm = j.at("p_norm").get<double>();
    r.worst_margin = j.at("worst_margin").get<double>();
    r.worst_radius = j.at("worst_radius").get<double>();
    return r;
}

namespace {

Json balls_to_json(const std::vector<Ball>& balls) {
    Json arr = Json::array();
    for (const auto& b : balls)
        arr.push_back(Json{{"center", vector_to_json(b.center)}, {"radius", b.radius}});
    return arr;
}

std::vector<Ball> balls_from_json(const Json& j) {
    std::vector<Ball> balls;
    for (const auto& e : j)
        balls.push_back({vector_from_json(e.at("center")), e.at("radius").get<double>()});
    return balls;
}

}  // namespace

Json to_json(const HolderReport& report) {
    return Json{{"p", report.p},
                {"balls", balls_to_json(report.balls)},
                {"lhs", report.lhs},
                {"rhs", report.rhs},
                {"excluded", report.excluded},
                {"C_hat", report.c_hat},
                {"worst_ball", report.worst_ball}};
}

HolderReport holder_report_from_json(const Json& j) {
    HolderReport r;
    r.p = j.at("p").get<double>();
    r.balls = balls_from_json(j.at("balls"));
    r.lhs = j.at("lhs").get<std::vector<double>>();
    r.rhs = j.at("rhs").get<std::vector<double>>();
    r.excluded = j.at("excluded").get<std::vector<int>>();
    r.c_hat = j.at("C_hat").get<double>();
    r.worst_ball = j.at("worst_ball").get<int>();
    return r;
}

Json to_json(const Prop4Report& report) {
    return Json{{"balls", balls_to_json(report.balls)},
                {"lhs", report.lhs},
                {"rhs", report.rhs},
                {"excluded", report.excluded},
                {"C_hat4", report.c_hat},
                {"worst_ball", report.worst_ball}};
}

Prop4Report prop4_report_from_json(const Json& j) {
    Prop4Report r;
    r.balls = balls_from_json(j.at("balls"));
    r.lhs = j.at("lhs").get<std::vector<double>>();
    r.rhs = j.at("rhs").get<std::vector<double>>();
    r.excluded = j.at("excluded").get<std::vector<int>>();
    r.c_hat = j.at("C_hat4").get<double>();
    r.worst_ball = j.at("worst_ball").get<int>();
    return r;
}

Json to_json(const HigherIntReport& report) {
    return Json{{"p", report.p},
                {"q", report.q},
                {"K", report.k},
                {"lhs", to_json(report.lhs)},
                {"rhs_integral", to_json(report.rhs_integral)},
                {"rhs", report.rhs},
                {"inf_comass", report.inf_comass_value},
                {"pass", report.pass}};
}

HigherIntReport higher_int_from_json(const Json& j) {
    HigherIntReport r;
    r.p = j.at("p").get<double>();
    r.q = j.at("q").get<double>();
    r.k = j.at("K").get<double>();
    r.lhs = integral_estimate_from_json(j.at("lhs"));
    r.rhs_integral = integral_estimate_from_json(j.at("rhs_integral"));
    r.rhs = j.at("rhs").get<double>();
    r.inf_comass_value = j.at("inf_comass").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

Json to_json(const EquiReport& report) {
    Json intervals = Json::array();
    for (const auto& [a, b] : report.exception_intervals)
        intervals.push_back(Json::array({a, b}));
    return Json{{"delta", report.delta},
                {"radii", report.radii},
                {"A0", report.a0},
                {"A", report.a},
                {"ratio", report.ratio},
                {"sphere_direct", report.sphere_direct},
                {"sphere_stokes", report.sphere_stokes},
                {"stokes_gap", report.stokes_gap},
                {"combined_error", report.combined_error},
                {"decay_bound", report.decay_bound},
                {"flagged", report.flagged},
                {"excluded", report.excluded},
                {"exception_intervals", intervals},
                {"log_measure_E", report.log_measure_e},
                {"decay_holds", report.decay_holds},
                {"stokes_agrees", report.stokes_agrees}};
}

EquiReport equi_report_from_json(const Json& j) {
    EquiReport r;
    r.delta = j.at("delta").get<double>();
    r.radii = j.at("radii").get<std::vector<double>>();
    r.a0 = j.at("A0").get<std::vector<double>>();
    r.a = j.at("A").get<std::vector<double>>();
    r.ratio = j.at("ratio").get<std::vector<double>>();
    r.sphere_direct = j.at("sphere_direct").get<std::vector<double>>();
    r.sphere_stokes = j.at("sphere_stokes").get<std::vector<double>>();
    r.stokes_gap = j.at("stokes_gap").get<std::vector<double>>();
    r.combined_error = j.at("combined_error").get<std::vector<double>>();
    r.decay_bound = j.at("decay_bound").get<std::vector<double>>();
    r.flagged = j.at("flagged").get<std::vector<bool>>();
    r.excluded = j.at("excluded").get<std::vector<bool>>();
    for (const auto& e : j.at("exception_intervals"))
        r.exception_intervals.emplace_back(e[0].get<double>(), e[1].get<double>());
    r.log_measure_e = j.at("log_measure_E").get<double>();
    r.decay_holds = j.at("decay_holds").get<bool>();
    r.stokes_agrees = j.at("stokes_agrees").get<bool>();
    return r;
}

Json to_json(const DistortionReport& report) {
    Json j{{"samples", report.sample_description},
           {"K_hat", report.k_hat},
           {"argmax", vector_to_json(report.argmax)},
           {"degenerate_count", report.degenerate_count},
           {"sign_violation", report.sign_violation},
           {"bound_satisfied", report.bound_satisfied}};
    if (report.comparison_bound) j["comparison_bound"] = *report.comparison_bound;
    if (report.sign_violation) j["violation_point"] = vector_to_json(report.violation_point);
    return j;
}

DistortionReport distortion_report_from_json(const Json& j) {
    DistortionReport r;
    r.sample_description = j.at("samples").get<std::string>();
    r.k_hat = j.at("K_hat").get<double>();
    r.argmax = vector_from_json(j.at("argmax"));
    r.degenerate_count = j.at("degenerate_count").get<long>();
    r.sign_violation = j.at("sign_violation").get<bool>();
    r.bound_satisfied = j.at("bound_satisfied").get<bool>();
    if (j.contains("comparison_bound")) r.comparison_bound = j["comparison_bound"].get<double>();
    if (j.contains("violation_point")) r.violation_point = vector_from_json(j["violation_point"]);
    return r;
}

namespace {

std::string term_sign_name(TermSign s) {
    switch (s) {
        case TermSign::Nonnegative: return "nonnegative";
        case TermSign::Nonpositive: return "nonpositive";
        case TermSign::Mixed: return "mixed";
        case TermSign::Zero: return "zero";
    }
    return "?";
}

TermSign term_sign_from_name(const std::string& s) {
    if (s == "nonnegative") return TermSign::Nonnegative;
    if (s == "nonpositive") return TermSign::Nonpositive;
    if (s == "mixed") return TermSign::Mixed;
    if (s == "zero") return TermSign::Zero;
    throw std::invalid_argument("unknown term sign: " + s);
}

}  // namespace

Json to_json(const SignVerdict& verdict) {
    Json terms = Json::array();
    for (TermSign s : verdict.term_verdicts) terms.push_back(term_sign_name(s));
    Json witnesses = Json::array();
    for (const auto& w : verdict.mixed_witnesses) witnesses.push_back(vector_to_json(w));
    return Json{{"terms", terms}, {"mixed_witnesses", witnesses}, {"signed", verdict.is_signed}};
}

SignVerdict sign_verdict_from_json(const Json& j) {
    SignVerdict v;
    for (const auto& t : j.at("terms")) v.term_verdicts.push_back(term_sign_from_name(t));
    for (const auto& w : j.at("mixed_witnesses")) v.mixed_witnesses.push_back(vector_from_json(w));
    v.is_signed = j.at("signed").get<bool>();
    return v;
}

Json to_json(const ObstructionResult& result) {
    Json set = Json::array();
    for (const Rational& e : result.obstruction_set) set.push_back(e.to_string());
    return Json{{"E", set},
                {"E_size", result.obstruction_set.size()},
                {"radius", result.radius}};
}

}  // namespace qrc
