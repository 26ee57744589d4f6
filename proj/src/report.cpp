#include "depcol/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace depcol {

namespace {

int severityRank(ReportSeverity severity) {
    switch (severity) {
    case ReportSeverity::Critical: return 0;
    case ReportSeverity::Error: return 1;
    case ReportSeverity::Warning: return 2;
    }
    return 1;
}

/// Distinct names drawn from one side of the pairs, first occurrence order.
std::vector<std::string> distinctSide(const std::vector<PluginPair>& pairs, bool targetSide) {
    std::vector<std::string> names;
    for (const PluginPair& pair : pairs) {
        const std::string& name = targetSide ? pair.target : pair.source;
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            names.push_back(name);
        }
    }
    return names;
}

std::string renderMessageText(const ViolationMessage& message) {
    std::ostringstream out;
    out << "Dependency from " << describeRef(message.source) << " to "
        << describeRef(message.target) << " is " << message.verb << ".";
    // Aggregate-level constraints name the element; the concrete plugins
    // behind it are listed separately.
    std::vector<std::string> listed;
    if (message.target.kind != ElementKind::Plugin) {
        listed = distinctSide(message.violatingPairs, /*targetSide=*/true);
    } else if (message.source.kind != ElementKind::Plugin) {
        listed = distinctSide(message.violatingPairs, /*targetSide=*/false);
    }
    if (!listed.empty()) {
        out << " Violating plugins: [";
        for (std::size_t i = 0; i < listed.size(); ++i) {
            if (i != 0) {
                out << ", ";
            }
            out << listed[i];
        }
        out << "].";
    }
    return out.str();
}

} // namespace

std::vector<ViolationMessage> aggregateMessages(
    const std::map<std::string, PluginEvaluation>& results,
    const DependencyModel& /*model*/,
    const Workspace& /*ws*/) {
    std::map<int, ViolationMessage> byOrdinal;
    std::vector<ViolationMessage> defaults;

    for (const auto& [plugin, evaluation] : results) {
        for (const Verdict& verdict : evaluation.relation.entries()) {
            auto severity = violationSeverity(verdict.property);
            if (!severity) {
                continue;
            }
            if (verdict.provenance) {
                const Provenance& provenance = *verdict.provenance;
                ViolationMessage& message = byOrdinal[provenance.ordinal];
                if (message.violatingPairs.empty()) {
                    message.severity = *severity;
                    message.verb = verdict.property == Property::WarnTolerated ? "tolerated"
                                                                               : "forbidden";
                    message.source = provenance.subject;
                    message.target = provenance.target;
                    message.constraintOrdinal = provenance.ordinal;
                    message.constraintLocation = provenance.location;
                }
                message.violatingPairs.push_back(verdict.pair);
            } else {
                ViolationMessage message;
                message.severity = *severity;
                message.verb = "forbidden";
                message.source = ElementRef{ElementKind::Plugin, verdict.pair.source};
                message.target = ElementRef{ElementKind::Plugin, verdict.pair.target};
                message.violatingPairs.push_back(verdict.pair);
                defaults.push_back(std::move(message));
            }
        }
    }

    std::vector<ViolationMessage> messages;
    messages.reserve(byOrdinal.size() + defaults.size());
    for (auto& [ordinal, message] : byOrdinal) {
        messages.push_back(std::move(message));
    }
    for (auto& message : defaults) {
        messages.push_back(std::move(message));
    }
    for (ViolationMessage& message : messages) {
        message.text = renderMessageText(message);
    }

    // critical, error, warning; inside one severity explicit constraints in
    // textual order, default-rule messages after them by pair.
    std::stable_sort(messages.begin(), messages.end(),
                     [](const ViolationMessage& a, const ViolationMessage& b) {
                         int ra = severityRank(a.severity);
                         int rb = severityRank(b.severity);
                         if (ra != rb) {
                             return ra < rb;
                         }
                         if (a.constraintOrdinal.has_value() !=
                             b.constraintOrdinal.has_value()) {
                             return a.constraintOrdinal.has_value();
                         }
                         if (a.constraintOrdinal && b.constraintOrdinal &&
                             *a.constraintOrdinal != *b.constraintOrdinal) {
                             return *a.constraintOrdinal < *b.constraintOrdinal;
                         }
                         return a.violatingPairs.front() < b.violatingPairs.front();
                     });
    return messages;
}

CheckReport buildReport(const std::map<std::string, PluginEvaluation>& results,
                        const DependencyModel& model,
                        const Workspace& ws,
                        std::vector<Diagnostic> diagnostics) {
    CheckReport report;
    report.messages = aggregateMessages(results, model, ws);
    for (const ViolationMessage& message : report.messages) {
        switch (message.severity) {
        case ReportSeverity::Critical: ++report.summary.critical; break;
        case ReportSeverity::Error: ++report.summary.error; break;
        case ReportSeverity::Warning: ++report.summary.warning; break;
        }
        for (const PluginPair& pair : message.violatingPairs) {
            auto it = ws.plugins.find(pair.source);
            if (it != ws.plugins.end() && !it->second.sourcePath.empty()) {
                report.manifestPaths.emplace(pair.source, it->second.sourcePath);
            }
        }
    }

    std::map<int, SourceLocation> statementLocations;
    for (const auto& [block, statement] : statementsInOrder(model)) {
        statementLocations.emplace(statement->ordinal, statement->location);
    }
    for (const auto& [plugin, evaluation] : results) {
        for (const RefinementEvent& event : evaluation.refinements) {
            ReportRefinement refinement;
            refinement.refinerOrdinal = event.refinerOrdinal;
            refinement.refinedOrdinal = event.refinedOrdinal;
            refinement.pairs = event.witnessPairs;
            if (auto it = statementLocations.find(event.refinerOrdinal);
                it != statementLocations.end()) {
                refinement.refinerLocation = it->second;
            }
            if (auto it = statementLocations.find(event.refinedOrdinal);
                it != statementLocations.end()) {
                refinement.refinedLocation = it->second;
            }
            report.refinements.push_back(std::move(refinement));
        }
    }

    report.diagnostics = std::move(diagnostics);
    return report;
}

std::string renderText(const CheckReport& report) {
    std::ostringstream out;
    if (report.messages.empty()) {
        out << "No dependency violations found.\n";
    } else {
        for (ReportSeverity severity :
             {ReportSeverity::Critical, ReportSeverity::Error, ReportSeverity::Warning}) {
            std::vector<const ViolationMessage*> group;
            for (const ViolationMessage& message : report.messages) {
                if (message.severity == severity) {
                    group.push_back(&message);
                }
            }
            if (group.empty()) {
                continue;
            }
            out << "Dependency violations with severity " << reportSeverityName(severity)
                << " (" << group.size() << ")\n";
            for (const ViolationMessage* message : group) {
                out << "  " << message->text << "\n";
                for (const std::string& source :
                     distinctSide(message->violatingPairs, /*targetSide=*/false)) {
                    auto it = report.manifestPaths.find(source);
                    if (it != report.manifestPaths.end()) {
                        out << "    " << it->second << "\n";
                    }
                }
            }
        }
    }
    if (!report.refinements.empty()) {
        out << "\nRefinement log (" << report.refinements.size() << ")\n";
        for (const ReportRefinement& refinement : report.refinements) {
            out << "  constraint #" << refinement.refinerOrdinal << " ("
                << refinement.refinerLocation.file << ':' << refinement.refinerLocation.line
                << ") refines constraint #" << refinement.refinedOrdinal << " ("
                << refinement.refinedLocation.file << ':' << refinement.refinedLocation.line
                << "):";
            for (const PluginPair& pair : refinement.pairs) {
                out << " (" << pair.source << " -> " << pair.target << ")";
            }
            out << "\n";
        }
    }
    if (!report.diagnostics.empty()) {
        out << "\nDiagnostics (" << report.diagnostics.size() << ")\n";
        for (const Diagnostic& diagnostic : report.diagnostics) {
            out << "  " << formatDiagnostic(diagnostic) << "\n";
        }
    }
    return out.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json locationJson(const SourceLocation& location) {
    ordered_json out;
    out["file"] = location.file;
    out["line"] = location.line;
    out["column"] = location.column;
    return out;
}

ordered_json refJson(const ElementRef& ref) {
    ordered_json out;
    out["kind"] = std::string(kindKeyword(ref.kind));
    out["name"] = ref.name;
    return out;
}

ordered_json pairsJson(const std::vector<PluginPair>& pairs) {
    ordered_json out = ordered_json::array();
    for (const PluginPair& pair : pairs) {
        ordered_json entry;
        entry["source"] = pair.source;
        entry["target"] = pair.target;
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

std::string renderJson(const CheckReport& report) {
    ordered_json doc;
    doc["summary"]["critical"] = report.summary.critical;
    doc["summary"]["error"] = report.summary.error;
    doc["summary"]["warning"] = report.summary.warning;

    doc["violations"] = ordered_json::array();
    for (const ViolationMessage& message : report.messages) {
        ordered_json violation;
        violation["severity"] = std::string(reportSeverityName(message.severity));
        violation["verb"] = message.verb;
        violation["source"] = refJson(message.source);
        violation["target"] = refJson(message.target);
        violation["violatingPairs"] = pairsJson(message.violatingPairs);
        violation["constraintOrdinal"] =
            message.constraintOrdinal ? ordered_json(*message.constraintOrdinal)
                                      : ordered_json(nullptr);
        violation["constraintLocation"] = message.constraintLocation
                                              ? locationJson(*message.constraintLocation)
                                              : ordered_json(nullptr);
        doc["violations"].push_back(std::move(violation));
    }

    doc["refinements"] = ordered_json::array();
    for (const ReportRefinement& refinement : report.refinements) {
        ordered_json entry;
        entry["refinerOrdinal"] = refinement.refinerOrdinal;
        entry["refinedOrdinal"] = refinement.refinedOrdinal;
        entry["pairs"] = pairsJson(refinement.pairs);
        doc["refinements"].push_back(std::move(entry));
    }

    doc["diagnostics"] = ordered_json::array();
    for (const Diagnostic& diagnostic : report.diagnostics) {
        ordered_json entry;
        entry["level"] =
            diagnostic.level == DiagnosticLevel::Error ? "error" : "warning";
        entry["code"] = diagnostic.code;
        entry["message"] = diagnostic.message;
        entry["location"] = locationJson(diagnostic.location);
        doc["diagnostics"].push_back(std::move(entry));
    }

    return doc.dump();
}

} // namespace depcol
