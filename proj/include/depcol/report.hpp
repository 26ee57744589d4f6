#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "depcol/ast.hpp"
#include "depcol/diagnostics.hpp"
#include "depcol/engine.hpp"
#include "depcol/workspace.hpp"

namespace depcol {

/// One reported violation, phrased at the level the constraint was written
/// at: all pairs produced by the same constraint merge into one message.
struct ViolationMessage {
    ReportSeverity severity = ReportSeverity::Error;
    std::string verb; // "forbidden" | "tolerated"
    ElementRef source;
    ElementRef target;
    std::vector<PluginPair> violatingPairs; // nonempty
    std::optional<int> constraintOrdinal;   // nullopt: default rule
    std::optional<SourceLocation> constraintLocation;
    std::string text;
};

struct ReportRefinement {
    int refinerOrdinal = 0;
    int refinedOrdinal = 0;
    std::vector<PluginPair> pairs;
    SourceLocation refinerLocation;
    SourceLocation refinedLocation;
};

struct ReportSummary {
    int critical = 0;
    int error = 0;
    int warning = 0;
};

struct CheckReport {
    std::vector<ViolationMessage> messages; // severity, then ordinal, then source
    ReportSummary summary;                  // counts == messages per severity
    std::vector<ReportRefinement> refinements;
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, std::string> manifestPaths; // source plugin -> path
};

/// Merge verdicts into messages. Verdicts sharing a provenance constraint
/// become one message; when the target (or source) of that constraint is a
/// feature or group, the concrete violating plugins are listed alongside.
/// Allowed verdicts produce no message.
std::vector<ViolationMessage> aggregateMessages(
    const std::map<std::string, PluginEvaluation>& results,
    const DependencyModel& model,
    const Workspace& ws);

CheckReport buildReport(const std::map<std::string, PluginEvaluation>& results,
                        const DependencyModel& model,
                        const Workspace& ws,
                        std::vector<Diagnostic> diagnostics);

/// Human-readable rendering: one "Dependency violations with severity
/// <severity> (<count>)" header per nonempty severity in critical, error,
/// warning order, messages indented beneath, then refinement log and
/// diagnostics sections when nonempty. Byte-stable for equal reports.
std::string renderText(const CheckReport& report);

/// Machine contract: {"summary":{...},"violations":[...],"refinements":[...],
/// "diagnostics":[...]} with fixed key order and the same array ordering as
/// the text output.
std::string renderJson(const CheckReport& report);

} // namespace depcol
