#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "depcol/engine.hpp"

namespace depcol {

enum class OutputFormat { Text, Json };

/// Everything a check/gen-base invocation needs. Exit codes: 0 clean,
/// 1 violations at or above failOn, 2 usage/parse/validation/extraction
/// failure.
struct RunConfig {
    std::string modelPath;
    std::vector<std::string> workspaceRoots;
    OutputFormat format = OutputFormat::Text;
    ReportSeverity failOn = ReportSeverity::Warning;
    bool includeOptional = true;
    Property defaultProperty = Property::Allowed;
    std::optional<std::string> pluginFilter;
};

std::optional<OutputFormat> parseOutputFormat(std::string_view text);
std::optional<ReportSeverity> parseFailOn(std::string_view text);
/// "allowed" | "forbidden-critical" | "forbidden-error" | "forbidden-warning"
std::optional<Property> parseDefaultProperty(std::string_view text);

/// Full pipeline: parse + validate the model, scan the workspace, build the
/// graph, evaluate (all plugins, or just cfg.pluginFilter), render to `out`.
/// Diagnostics go to `err`, never to `out` (the JSON document additionally
/// carries them, as part of the wire contract).
int runCheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Scan the workspace roots and print generated base declarations.
int runGenBase(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace depcol
