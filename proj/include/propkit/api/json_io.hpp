#pragma once

#include <vector>

#include <json.hpp>

#include "propkit/activity/curve.hpp"
#include "propkit/activity/nrtl.hpp"
#include "propkit/core/types.hpp"
#include "propkit/error.hpp"
#include "propkit/fit/nrtl_fit.hpp"
#include "propkit/vle/diagram.hpp"

namespace propkit::api {

using nlohmann::json;

// Field names are snake_case; temperatures carry _K, pressures _Pa.
// Non-finite numbers serialize as null.

json to_json(const Component& c);
json to_json(const AntoineParameterSet& p);
json to_json(const activity::NrtlParameterSet& p);
json to_json(const activity::ActivityCurve& curve);
json to_json(const vle::EquilibriumPoint& pt);
json to_json(const vle::ConsistencyReport& report);
json to_json(const vle::VleDiagram& diagram);
json to_json(const fit::FitResult& result, const std::vector<activity::ActivityCurve>& targets,
             const fit::FitGrid& grid);

// {"error": {"code", "message", "module", "offset"?, "report"?}}
json error_json(const Error& e);

}  // namespace propkit::api
