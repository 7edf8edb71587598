#pragma once

#include <json.hpp>

#include "slc/analysis.hpp"
#include "slc/enumerate.hpp"
#include "slc/metrics.hpp"
#include "slc/reduction.hpp"
#include "slc/typecheck.hpp"

namespace slc {

using Json = nlohmann::json;

Json to_json(const Path& p);  // array of child indices
Json to_json(const TermInfo& info);
Json to_json(const MetricSnapshot& m);
/// Arbitrary-precision fields are decimal strings.
Json to_json(const Certificate& c);
/// Steps carry path, rule, size_after and, when monitored, weight_after and
/// measure_after. Intermediate terms are printed when kept.
Json to_json(const Trace& t);
Json to_json(const TypeError& e);
Json to_json(const BoundCheckReport& r);

}  // namespace slc
