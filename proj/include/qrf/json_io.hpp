#pragma once

#include <json.hpp>
#include <string>

#include "qrf/equivalence.hpp"
#include "qrf/frame.hpp"
#include "qrf/framechange.hpp"
#include "qrf/group.hpp"
#include "qrf/operator.hpp"
#include "qrf/phaselab.hpp"
#include "qrf/representation.hpp"

namespace qrf {

using Json = nlohmann::json;

// Operators serialize as { "dim": n, "re": [[...]], "im": [[...]] }.
Json to_json(const Operator& op);
Operator operator_from_json(const Json& j);

// Groups serialize as { "order": n, "cayley": [[...]], "name": ... }.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// Reps serialize as { "group": ..., "dim": n, "matrices": [Operator...] }.
Json to_json(const UnitaryRep& rep);
UnitaryRep rep_from_json(const Json& j);

// Frames serialize as { "group": ..., "rep": ..., "effects": [...],
// "flags": {...} }; parsing re-validates every invariant.
Json to_json(const QuantumFrame& frame);
QuantumFrame frame_from_json(const Json& j);

Json to_json(const FinitePOVM& povm);

Json to_json(const ClassSignature& sig);

Json to_json(const ValidationReport& report);

/// Scenario format: { "group": "cyclic:3" | {...}, "convention":
/// "left"|"inverse", "frames": ["canonical" | frame JSON, ...2 or 3],
/// "system": "regular"|"inverse"|rep JSON }.
FrameChangeScenario scenario_from_json(const Json& j);

std::string curve_to_csv(const LocalizationCurve& curve);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qrf
