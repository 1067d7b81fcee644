#pragma once

#include <string>

#include "darboux/spec_io.hpp"

namespace darboux {

constexpr const char* kReportSchema = "darboux-report/1";

Json envelope(const std::string& command, Json body);
Json error_json(const std::string& type, const std::string& message, const std::string& clause = {});

Json params_json(const StructureParams& p);
Json verdict_json(const Verdict& v);
Json classification_json(const Classification& c, const std::optional<IsotropyQuery>& isotropy,
                         const StructureSpec& spec);
Json template_json(const CanonicalTemplate& t);
Json darboux_json(const DarbouxReport& r);
Json tensor_json(const TensorField& t);
Json chart_report(const ChartBundle& b, const std::optional<std::vector<Vec>>& points_override = std::nullopt);
Json connection_report(const ConnectionBundle& b);

// Indented plain-text rendering of a machine report.
std::string render_human(const Json& report);

}  // namespace darboux
