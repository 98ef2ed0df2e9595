#pragma once

#include "sumlab/grid.hpp"
#include "sumlab/search.hpp"
#include "sumlab/theorems.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace sumlab {

/// All report JSON uses ordered_json with a fixed field order and exact
/// rational strings, so identical runs emit identical bytes. Decimal
/// renderings (12 significant digits) are grouped under "decimal" and
/// flagged inexact.
using ojson = nlohmann::ordered_json;

ojson to_json(const VerificationReport& rep);
ojson to_json(const PetridisCertificate& cert);
ojson to_json(const QuotientLemmaReport& rep);
ojson to_json(const PipelineReport& rep);
ojson to_json(const ConvergenceReport& rep);
ojson search_to_json(const std::vector<SearchInstance>& ranked, const std::string& group,
                     const std::string& inequality);

std::string verification_csv(const std::vector<VerificationReport>& reps);
std::string search_csv(const std::vector<SearchInstance>& ranked, const std::string& group);
std::string convergence_csv(const ConvergenceReport& rep);

/// Minimal SVG line chart of the convergence columns (display only).
std::string convergence_svg(const ConvergenceReport& rep);

} // namespace sumlab
