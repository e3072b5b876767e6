#ifndef CTX_JSON_IO_HPP
#define CTX_JSON_IO_HPP

#include <string>
#include <string_view>

#include "ctx/analysis.hpp"
#include "ctx/logical_bell.hpp"
#include "ctx/model.hpp"
#include "ctx/quantum.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

// All emitters produce canonical JSON: fixed key order, canonical
// orderings for every collection, rationals as "p/q" strings in lowest
// terms, boolean weights as 0/1 integers. Output is byte-identical across
// runs for identical inputs.

/// Which classification fields a report emission includes.
enum class ReportLevel { All, Probabilistic, Possibilistic, Strong };

std::string scenario_to_json(const MeasurementScenario& scenario);
std::string model_to_json(const EmpiricalModel& model);
std::string report_to_json(const MeasurementScenario& scenario, const ContextualityReport& report,
                           ReportLevel level = ReportLevel::All);
std::string bell_result_to_json(const BellResult& result);
std::string compatibility_to_json(const MeasurementScenario& scenario,
                                  const CompatibilityReport& report);

/// Parses a scenario object. Throws ParseError (with position) on
/// malformed JSON and ValidationError listing every semantic issue.
MeasurementScenario scenario_from_json(std::string_view text);

/// Parses and validates a full model. Structural problems (bad keys,
/// unknown contexts, malformed weights) and data-invariant violations are
/// all collected into a single ValidationError.
EmpiricalModel model_from_json(std::string_view text);

/// {"parties": [{"variables": {"a1": "0", ...}}, ...]}; angles are radians
/// written as decimal strings.
SettingTable settings_from_json(std::string_view text);

/// A JSON array of [re, im] pairs of length 2^n.
StateVector state_from_json(std::string_view text);

}  // namespace ctx

#endif
