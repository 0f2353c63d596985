// JSON and text renderings of analysis results, shared by the CLI and tests.
#pragma once

#include "kra/dsl.hpp"
#include "kra/invariants.hpp"
#include "kra/powercount.hpp"

#include <json.hpp>

#include <string>

namespace kra::report {

using Json = nlohmann::ordered_json;

Json cycle_json(const FiniteAlgebra& a, const LabelCycle& c);
Json witness_json(const KrajewskiDiagram& d, const DiagramCycle& c);
Json term_json(const FiniteAlgebra& a, const InvariantTerm& t);

Json validation_json(const KrajewskiDiagram& d, const ValidationReport& v);
Json gauge_json(const KrajewskiDiagram& d);
Json fields_json(const KrajewskiDiagram& d, const FieldSummary& f);
Json terms_json(const FiniteAlgebra& a, const std::vector<InvariantTerm>& terms);
Json coverage_json(const FiniteAlgebra& a, const CoverageReport& c);
Json rconnect_json(const KrajewskiDiagram& d, const RConnectReport& r);
Json verdict_json(const KrajewskiDiagram& d, const Verdict& v);
Json profile_json(const GraphProfile& p, const ProfileReport& r, int n);
Json parse_error_json(const ParseError& e);

/// Reads the profile format used by `kra powercount --profile`.
GraphProfile profile_from_json(const Json& j);

std::string validation_text(const KrajewskiDiagram& d, const ValidationReport& v);
std::string gauge_text(const KrajewskiDiagram& d);
std::string fields_text(const KrajewskiDiagram& d, const FieldSummary& f);
std::string terms_text(const FiniteAlgebra& a, const std::vector<InvariantTerm>& terms);
std::string coverage_text(const FiniteAlgebra& a, const CoverageReport& c);
std::string rconnect_text(const KrajewskiDiagram& d, const RConnectReport& r);
std::string verdict_text(const KrajewskiDiagram& d, const Verdict& v);

} // namespace kra::report
