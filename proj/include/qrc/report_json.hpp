#pragma once

#include "qrc/analysis.hpp"
#include "qrc/density.hpp"

#include <json.hpp>

namespace qrc {

// JSON mirrors of every report type. Insertion-ordered objects so reports
// serialize byte-identically across runs with the same config and seed.
using Json = nlohmann::ordered_json;

Json to_json(const IntegralEstimate& est);
IntegralEstimate integral_estimate_from_json(const Json& j);

Json to_json(const GrowthReport& report);
GrowthReport growth_report_from_json(const Json& j);

Json to_json(const FastGrowthResult& result);
FastGrowthResult fast_growth_from_json(const Json& j);

Json to_json(const HolderReport& report);
HolderReport holder_report_from_json(const Json& j);

Json to_json(const Prop4Report& report);
Prop4Report prop4_report_from_json(const Json& j);

Json to_json(const HigherIntReport& report);
HigherIntReport higher_int_from_json(const Json& j);

Json to_json(const EquiReport& report);
EquiReport equi_report_from_json(const Json& j);

Json to_json(const DistortionReport& report);
DistortionReport distortion_report_from_json(const Json& j);

Json to_json(const SignVerdict& verdict);
SignVerdict sign_verdict_from_json(const Json& j);

Json to_json(const ObstructionResult& result);

Json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const Json& j);

}  // namespace qrc
