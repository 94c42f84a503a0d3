#pragma once

#include <nlohmann/json.hpp>

#include "pw/covariance.hpp"
#include "pw/pulses.hpp"

namespace pw::detail {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
/// Accepts {"re": x, "im": y} or a bare number.
Complex complex_from_json(const Json& j);

/// {"terms": [...]} for analytic pulses, {"samples": {...}} otherwise.
Json pulse_to_json(const TemporalPulse& p);
/// Also accepts the shorthand {"type": "exp", "rate": r}.
TemporalPulse pulse_from_json(const Json& j);

Json covariance_to_json(const TwoTimeCovariance& cov);
TwoTimeCovariance covariance_from_json(const Json& j);

}  // namespace pw::detail
