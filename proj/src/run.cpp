#include "depcol/run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "depcol/parser.hpp"
#include "depcol/report.hpp"
#include "depcol/validate.hpp"

namespace depcol {

std::optional<OutputFormat> parseOutputFormat(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::optional<ReportSeverity> parseFailOn(std::string_view text) {
    if (text == "critical") return ReportSeverity::Critical;
    if (text == "error") return ReportSeverity::Error;
    if (text == "warning") return ReportSeverity::Warning;
    return std::nullopt;
}

std::optional<Property> parseDefaultProperty(std::string_view text) {
    if (text == "allowed") return Property::Allowed;
    if (text == "forbidden-critical") return Property::Critical;
    if (text == "forbidden-error") return Property::ErrorSeverity;
    if (text == "forbidden-warning") return Property::WarnForbidden;
    return std::nullopt;
}

namespace {

void printDiagnostics(const std::vector<Diagnostic>& diagnostics, std::ostream& err) {
    for (const Diagnostic& diagnostic : diagnostics) {
        err << formatDiagnostic(diagnostic) << "\n";
    }
}

/// Pipeline failed before checking completed: report the diagnostics and
/// exit 2. JSON mode still emits a well-formed document.
int failPipeline(const RunConfig& cfg,
                 std::vector<Diagnostic> diagnostics,
                 std::ostream& out,
                 std::ostream& err) {
    printDiagnostics(diagnostics, err);
    if (cfg.format == OutputFormat::Json) {
        CheckReport report;
        report.diagnostics = std::move(diagnostics);
        out << renderJson(report) << "\n";
    }
    return 2;
}

int severityRank(ReportSeverity severity) {
    switch (severity) {
    case ReportSeverity::Critical: return 0;
    case ReportSeverity::Error: return 1;
    case ReportSeverity::Warning: return 2;
    }
    return 1;
}

std::optional<std::string> readFileBytes(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        return std::nullopt;
    }
    return buffer.str();
}

} // namespace

int runCheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Diagnostic> diagnostics;

    auto modelText = readFileBytes(cfg.modelPath);
    if (!modelText) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                               "cannot read model file '" + cfg.modelPath + "'",
                               {cfg.modelPath, 1, 1}});
        return failPipeline(cfg, std::move(diagnostics), out, err);
    }

    ParseResult parsed = parseModel(*modelText, cfg.modelPath);
    diagnostics.insert(diagnostics.end(), parsed.diagnostics.begin(),
                       parsed.diagnostics.end());
    if (!parsed.ok()) {
        return failPipeline(cfg, std::move(diagnostics), out, err);
    }

    std::vector<Diagnostic> validation = validateModel(parsed.model);
    diagnostics.insert(diagnostics.end(), validation.begin(), validation.end());
    if (hasErrors(validation)) {
        return failPipeline(cfg, std::move(diagnostics), out, err);
    }

    std::vector<Diagnostic> scanDiagnostics;
    Workspace workspace = scanWorkspace(cfg.workspaceRoots, scanDiagnostics);
    diagnostics.insert(diagnostics.end(), scanDiagnostics.begin(), scanDiagnostics.end());
    if (hasErrors(scanDiagnostics)) {
        return failPipeline(cfg, std::move(diagnostics), out, err);
    }

    DependencyGraph graph = buildDependencyGraph(workspace, cfg.includeOptional, &diagnostics);
    Resolver resolver(parsed.model, workspace);

    for (Diagnostic& diagnostic :
         externalTargetDiagnostics(graph, resolver.universe().pluginNames)) {
        diagnostics.push_back(std::move(diagnostic));
    }

    EngineConfig engineConfig;
    engineConfig.defaultProperty = cfg.defaultProperty;
    engineConfig.includeOptional = cfg.includeOptional;

    std::map<std::string, PluginEvaluation> results;
    if (cfg.pluginFilter) {
        if (graph.edges.count(*cfg.pluginFilter) == 0) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-UNKNOWN-PLUGIN",
                                   "plugin '" + *cfg.pluginFilter +
                                       "' was not found in the workspace",
                                   {cfg.modelPath, 1, 1}});
            return failPipeline(cfg, std::move(diagnostics), out, err);
        }
        results.emplace(*cfg.pluginFilter,
                        evaluatePlugin(*cfg.pluginFilter, parsed.model, resolver, graph,
                                       engineConfig));
    } else {
        results = evaluateAll(parsed.model, resolver, graph, engineConfig);
    }

    for (Diagnostic& diagnostic : vacuousConstraintDiagnostics(parsed.model, resolver)) {
        diagnostics.push_back(std::move(diagnostic));
    }
    for (Diagnostic& diagnostic : resolver.diagnostics()) {
        diagnostics.push_back(std::move(diagnostic));
    }

    CheckReport report = buildReport(results, parsed.model, workspace, diagnostics);
    printDiagnostics(report.diagnostics, err);
    if (cfg.format == OutputFormat::Json) {
        out << renderJson(report) << "\n";
    } else {
        // Diagnostics stay on the error stream; the stdout report carries
        // violations and the refinement log only.
        CheckReport stdoutReport = report;
        stdoutReport.diagnostics.clear();
        out << renderText(stdoutReport);
    }

    const int threshold = severityRank(cfg.failOn);
    for (const ViolationMessage& message : report.messages) {
        if (severityRank(message.severity) <= threshold) {
            return 1;
        }
    }
    return 0;
}

int runGenBase(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Diagnostic> diagnostics;
    Workspace workspace = scanWorkspace(cfg.workspaceRoots, diagnostics);
    printDiagnostics(diagnostics, err);
    if (hasErrors(diagnostics)) {
        return 2;
    }
    out << generateBases(workspace);
    return 0;
}

} // namespace depcol
