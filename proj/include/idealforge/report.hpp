#pragma once

#include <string>

#include "idealforge/fltcase.hpp"
#include "idealforge/jsonfmt.hpp"

namespace idealforge {

/// Version of the JSON report layout (schema/report.json).
inline constexpr int kReportSchemaVersion = 1;

Json to_json(const NumberField& field);
Json to_json(const FieldElement& alpha);
Json to_json(const PrimeIdealRep& prime);
Json to_json(const SplitReport& report);
Json to_json(const IdealPowerModule& module);
Json to_json(const Valuation& v);
Json to_json(const ProofStepProbe& probe);
Json to_json(const Theorem2Verdict& verdict);
Json to_json(const CounterexampleCertificate& cert);
Json to_json(const RamificationReport& report);
Json to_json(const RootCount& count);
Json to_json(const NormBoundProbe& probe);
Json to_json(const TraceStep& step);
Json to_json(const LemmaTrace& trace);

/// Line-oriented rendering: one "path: value" line per leaf; arrays of
/// scalars stay on one line.
std::string render_text(const Json& doc);

}  // namespace idealforge
