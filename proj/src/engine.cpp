#include "depcol/engine.hpp"

#include <algorithm>

namespace depcol {

std::string_view reportSeverityName(ReportSeverity severity) {
    switch (severity) {
    case ReportSeverity::Critical: return "critical";
    case ReportSeverity::Error: return "error";
    case ReportSeverity::Warning: return "warning";
    }
    return "error";
}

std::optional<ReportSeverity> violationSeverity(Property property) {
    switch (property) {
    case Property::Allowed: return std::nullopt;
    case Property::Critical: return ReportSeverity::Critical;
    case Property::ErrorSeverity: return ReportSeverity::Error;
    case Property::WarnForbidden:
    case Property::WarnTolerated: return ReportSeverity::Warning;
    }
    return std::nullopt;
}

bool VerdictRelation::contains(const PluginPair& pair) const {
    return index_.count(pair) != 0;
}

const Verdict* VerdictRelation::find(const PluginPair& pair) const {
    auto it = index_.find(pair);
    if (it == index_.end()) {
        return nullptr;
    }
    return &entries_[it->second];
}

bool VerdictRelation::add(Verdict verdict) {
    auto [it, inserted] = index_.emplace(verdict.pair, entries_.size());
    if (!inserted) {
        return false;
    }
    entries_.push_back(std::move(verdict));
    return true;
}

std::vector<PluginPair> VerdictRelation::pairsWithSeverity(ReportSeverity severity) const {
    std::vector<PluginPair> pairs;
    for (const Verdict& verdict : entries_) {
        if (violationSeverity(verdict.property) == severity) {
            pairs.push_back(verdict.pair);
        }
    }
    return pairs;
}

std::vector<PluginPair> VerdictRelation::allowedPairs() const {
    std::vector<PluginPair> pairs;
    for (const Verdict& verdict : entries_) {
        if (verdict.property == Property::Allowed) {
            pairs.push_back(verdict.pair);
        }
    }
    return pairs;
}

std::set<PluginPair> pairsOf(const ElementRef& subject,
                             const ConstraintStatement& statement,
                             const Resolver& resolver) {
    std::set<PluginPair> pairs;
    const PluginSet& sources = resolver.plugins(subject);
    const PluginSet& targets = resolver.plugins(statement.target);
    for (const std::string& source : sources) {
        for (const std::string& target : targets) {
            pairs.insert({source, target});
        }
    }
    return pairs;
}

Property propertyOf(const ConstraintStatement& statement) {
    switch (statement.kind) {
    case ConstraintKind::Allow:
        return Property::Allowed;
    case ConstraintKind::Tolerate:
        return Property::WarnTolerated;
    case ConstraintKind::Forbid:
        if (!statement.severity) {
            return Property::ErrorSeverity; // unannotated forbid reports as error
        }
        switch (*statement.severity) {
        case Severity::Critical: return Property::Critical;
        case Severity::Error: return Property::ErrorSeverity;
        case Severity::Warning: return Property::WarnForbidden;
        }
        return Property::ErrorSeverity;
    }
    return Property::ErrorSeverity;
}

namespace {

using OrderedStatements =
    std::vector<std::pair<const ConstraintBlock*, const ConstraintStatement*>>;

PluginEvaluation evaluateWithStatements(const std::string& plugin,
                                        const OrderedStatements& statements,
                                        const Resolver& resolver,
                                        const DependencyGraph& graph,
                                        const EngineConfig& config) {
    PluginEvaluation evaluation;
    auto edgesIt = graph.edges.find(plugin);
    if (edgesIt == graph.edges.end()) {
        return evaluation;
    }
    const std::vector<std::string>& edges = edgesIt->second;

    // Last statement first: the first writer of a pair is the refining
    // constraint, every later hit is a collision worth logging.
    for (auto it = statements.rbegin(); it != statements.rend(); ++it) {
        const ConstraintBlock& block = *it->first;
        const ConstraintStatement& statement = *it->second;
        const PluginSet& subjectPlugins = resolver.plugins(block.subject);
        if (subjectPlugins.count(plugin) == 0) {
            continue;
        }
        const PluginSet& targetPlugins = resolver.plugins(statement.target);

        std::map<int, std::vector<PluginPair>> collisionsByRefiner;
        NameSet seenTargets;
        for (const std::string& target : edges) {
            if (targetPlugins.count(target) == 0 || !seenTargets.insert(target).second) {
                continue;
            }
            PluginPair pair{plugin, target};
            if (const Verdict* existing = evaluation.relation.find(pair)) {
                collisionsByRefiner[existing->provenance->ordinal].push_back(pair);
                continue;
            }
            Verdict verdict;
            verdict.pair = std::move(pair);
            verdict.property = propertyOf(statement);
            verdict.provenance = Provenance{statement.ordinal, block.subject,
                                            statement.target,  statement.kind,
                                            statement.severity, statement.location};
            evaluation.relation.add(std::move(verdict));
        }
        for (auto& [refinerOrdinal, pairs] : collisionsByRefiner) {
            evaluation.refinements.push_back(
                {refinerOrdinal, statement.ordinal, std::move(pairs)});
        }
    }

    if (config.defaultProperty != Property::Allowed) {
        NameSet seenTargets;
        for (const std::string& target : edges) {
            if (!seenTargets.insert(target).second) {
                continue;
            }
            PluginPair pair{plugin, target};
            if (evaluation.relation.contains(pair)) {
                continue;
            }
            Verdict verdict;
            verdict.pair = std::move(pair);
            verdict.property = config.defaultProperty;
            evaluation.relation.add(std::move(verdict));
        }
    }
    return evaluation;
}

} // namespace

PluginEvaluation evaluatePlugin(const std::string& plugin,
                                const DependencyModel& model,
                                const Resolver& resolver,
                                const DependencyGraph& graph,
                                const EngineConfig& config) {
    return evaluateWithStatements(plugin, statementsInOrder(model), resolver, graph, config);
}

std::map<std::string, PluginEvaluation> evaluateAll(const DependencyModel& model,
                                                    const Resolver& resolver,
                                                    const DependencyGraph& graph,
                                                    const EngineConfig& config) {
    OrderedStatements statements = statementsInOrder(model);
    std::map<std::string, PluginEvaluation> results;
    for (const auto& [plugin, edges] : graph.edges) {
        results.emplace(plugin,
                        evaluateWithStatements(plugin, statements, resolver, graph, config));
    }
    return results;
}

std::map<PluginPair, Property> referenceEvaluate(const DependencyModel& model,
                                                 const Resolver& resolver,
                                                 const DependencyGraph& graph,
                                                 const EngineConfig& config) {
    OrderedStatements statements = statementsInOrder(model);
    std::map<PluginPair, Property> properties;
    for (const auto& [source, edges] : graph.edges) {
        for (const std::string& target : edges) {
            Property property = config.defaultProperty;
            for (const auto& [block, statement] : statements) {
                if (resolver.plugins(block->subject).count(source) != 0 &&
                    resolver.plugins(statement->target).count(target) != 0) {
                    property = propertyOf(*statement);
                }
            }
            properties.insert_or_assign({source, target}, property);
        }
    }
    return properties;
}

std::vector<Diagnostic> vacuousConstraintDiagnostics(const DependencyModel& model,
                                                     const Resolver& resolver) {
    std::vector<Diagnostic> diagnostics;
    for (const auto& [block, statement] : statementsInOrder(model)) {
        const bool subjectEmpty = resolver.plugins(block->subject).empty();
        const bool targetEmpty = resolver.plugins(statement->target).empty();
        if (!subjectEmpty && !targetEmpty) {
            continue;
        }
        std::string side = subjectEmpty && targetEmpty
                               ? "subject and target resolve"
                               : (subjectEmpty ? "subject " + describeRef(block->subject) +
                                                     " resolves"
                                               : "target " + describeRef(statement->target) +
                                                     " resolves");
        diagnostics.push_back({DiagnosticLevel::Warning, "W-VACUOUS-CONSTRAINT",
                               "constraint governs no plugin pairs: " + side +
                                   " to no plugins",
                               statement->location});
    }
    return diagnostics;
}

} // namespace depcol
