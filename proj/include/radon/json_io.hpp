#pragma once

#include <string>

#include <json.hpp>

#include "radon/oracle.hpp"
#include "radon/theorem_checker.hpp"

namespace radon {

// Schema-stable JSON layer (key order preserved).  Weights serialize as
// arrays of exact rational strings; simple-root indices, subsets and reduced
// words as 1-based integer arrays.  Parsers raise ParseError on malformed
// documents and defer to the module operations for domain validation.
using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json subset_to_json(const ParabolicSubset& s);
ParabolicSubset subset_from_json(const Json& j);

Json word_to_json(const WeylElem& w);
WeylElem word_from_json(const RootSystem& rs, const Json& j);

Json cartan_input_to_json(const CartanInput& in);
CartanInput cartan_input_from_json(const Json& j);
Json root_system_to_json(const RootSystem& rs);

Json step_to_json(const FactorizationStep& step);
FactorizationStep step_from_json(const RootSystem& rs, const Json& j);
Json steps_to_json(const std::vector<FactorizationStep>& steps);
std::vector<FactorizationStep> steps_from_json(const RootSystem& rs,
                                               const Json& j);

Json tdo_to_json(const TdoLabel& label);
TdoLabel tdo_from_json(const Json& j);

Json gvm_to_json(const GvmLabel& label);

Json intertwiner_to_json(const IntertwinerSpec& spec);
IntertwinerSpec intertwiner_from_json(const RootSystem& rs, const Json& j);

Json report_to_json(const TheoremReport& report);
TheoremReport report_from_json(const RootSystem& rs, const Json& j);

Json suite_result_to_json(const oracle::SuiteResult& result);
oracle::SuiteResult suite_result_from_json(const Json& j);

// Field access helpers shared by the CLI.
const Json& require_field(const Json& j, const std::string& key);
Json parse_json_text(const std::string& text);

}  // namespace radon
