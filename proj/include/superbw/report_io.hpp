#pragma once

#include <string>

#include <json.hpp>

#include "superbw/classify.hpp"

namespace superbw {

using OrderedJson = nlohmann::ordered_json;

// {"epsilon": "+"|"-", "a": <rep>, "d": <rep>}
OrderedJson bw_to_json(const BWClass& bw);

// Report JSON with exactly the ClassificationReport field names in snake case
// and a fixed key order; undetermined components render as
// "undetermined(<reason>)".
OrderedJson report_to_json(const ClassificationReport& report);

// Human-readable rendering; undetermined fields show as "? (<reason>)".
std::string report_to_text(const ClassificationReport& report);

}  // namespace superbw
