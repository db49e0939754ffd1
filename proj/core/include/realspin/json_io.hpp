#pragma once

#include <nlohmann/json.hpp>

#include "realspin/autgroup.hpp"
#include "realspin/curve.hpp"
#include "realspin/oracle.hpp"
#include "realspin/signs.hpp"
#include "realspin/spin.hpp"

// JSON fragments exchanged with the command-line front end. Every reader
// validates through the owning module and reports malformed input as
// Error{InvalidInput}; semantic violations keep their module error code.
namespace realspin::json_io {

using nlohmann::json;

json to_json(const Topology& t);
RealCurve curve_from_json(const json& j);

json to_json(const RealCurve& curve, const AutClass& f);
/// {"sign", "f_exponents", "g_exponents" (separating only), "f0" (optional)}.
AutClass aut_from_json(const RealCurve& curve, const json& j);

/// AutClass fragment plus "sl": [...] when the bundle has rank >= 2.
json to_json(const RealCurve& curve, const FullAutClass& f);
FullAutClass full_aut_from_json(const RealCurve& curve, const RealBundle& bundle, const json& j);

json to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const RealCurve& curve, const json& j);

json to_json(const RealW1& w);
RealW1 w1_from_json(const RealCurve& curve, const json& j);

json to_json(const RealBundle& bundle);
RealBundle bundle_from_json(const RealCurve& curve, const json& j);

json to_json(const SLClass& sl);
SLClass sl_from_json(const RealBundle& bundle, const json& j);

json to_json(const BordismClass& b);
json to_json(const DetSignReport& r);
json to_json(const PicardResult& r);
json to_json(const oracle::VerificationReport& report);

}  // namespace realspin::json_io
