#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "depcol/ast.hpp"
#include "depcol/resolve.hpp"
#include "depcol/workspace.hpp"

namespace depcol {

/// Property a plugin pair ends up with. Forbid-with-severity-warning and
/// tolerate both report at warning severity but stay distinguishable.
enum class Property { Allowed, Critical, ErrorSeverity, WarnForbidden, WarnTolerated };

enum class ReportSeverity { Critical, Error, Warning };

std::string_view reportSeverityName(ReportSeverity severity);

/// Severity a property reports at; nullopt for Allowed.
std::optional<ReportSeverity> violationSeverity(Property property);

/// Ordered dependency pair (source requires target).
struct PluginPair {
    std::string source;
    std::string target;

    auto operator<=>(const PluginPair&) const = default;
};

/// Which constraint statement put a pair into the relation.
struct Provenance {
    int ordinal = 0;
    ElementRef subject;
    ElementRef target;
    ConstraintKind kind = ConstraintKind::Forbid;
    std::optional<Severity> severity;
    SourceLocation location;

    bool operator==(const Provenance&) const = default;
};

/// A pair with its assigned property. No provenance means the pair got the
/// configured default property rather than an explicit constraint.
struct Verdict {
    PluginPair pair;
    Property property = Property::Allowed;
    std::optional<Provenance> provenance;
};

/// Pair -> verdict relation. Each pair carries exactly one property, so the
/// per-property partitions are disjoint by construction. Entries keep
/// insertion order, which downstream reporting relies on.
class VerdictRelation {
public:
    bool contains(const PluginPair& pair) const;
    const Verdict* find(const PluginPair& pair) const;

    /// Adds unless the pair is already present; returns whether it was added.
    bool add(Verdict verdict);

    const std::vector<Verdict>& entries() const { return entries_; }
    std::vector<PluginPair> pairsWithSeverity(ReportSeverity severity) const;
    std::vector<PluginPair> allowedPairs() const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Verdict> entries_;
    std::map<PluginPair, std::size_t> index_;
};

/// Log entry: the later-defined constraint (refiner) took precedence over
/// the earlier one (refined) on the witness pairs.
struct RefinementEvent {
    int refinerOrdinal = 0;
    int refinedOrdinal = 0;
    std::vector<PluginPair> witnessPairs;

    bool operator==(const RefinementEvent&) const = default;
};

struct EngineConfig {
    /// Property of edges no constraint covers. Never WarnTolerated:
    /// tolerated is only ever an explicit modeler statement.
    Property defaultProperty = Property::Allowed;
    bool includeOptional = true;
};

struct PluginEvaluation {
    VerdictRelation relation;
    std::vector<RefinementEvent> refinements;
};

/// The PP function: every (x, y) with x in PG(subject), y in PG(target).
std::set<PluginPair> pairsOf(const ElementRef& subject,
                             const ConstraintStatement& statement,
                             const Resolver& resolver);

Property propertyOf(const ConstraintStatement& statement);

/// Check one plugin: walk the model's statements from last to first, keep
/// only those whose subject set contains the plugin, restrict each pair set
/// to edges actually present in the graph, and let the first writer of a
/// pair win (which is the textually latest constraint). Collisions become
/// refinement events. Uncovered edges keep the default property and are
/// stored only when that default is not Allowed.
PluginEvaluation evaluatePlugin(const std::string& plugin,
                                const DependencyModel& model,
                                const Resolver& resolver,
                                const DependencyGraph& graph,
                                const EngineConfig& config);

/// evaluatePlugin for every plugin of the graph, keyed by plugin name.
std::map<std::string, PluginEvaluation> evaluateAll(const DependencyModel& model,
                                                    const Resolver& resolver,
                                                    const DependencyGraph& graph,
                                                    const EngineConfig& config);

/// Reference semantics computed the straightforward way: for every edge,
/// scan all statements in textual order and keep the last one whose pair
/// set covers the edge. Slower but independent of the reverse traversal;
/// kept as a cross-check for it.
std::map<PluginPair, Property> referenceEvaluate(const DependencyModel& model,
                                                 const Resolver& resolver,
                                                 const DependencyGraph& graph,
                                                 const EngineConfig& config);

/// W-VACUOUS-CONSTRAINT for statements whose subject or target resolves to
/// no plugin at all (usually a pattern that matches nothing).
std::vector<Diagnostic> vacuousConstraintDiagnostics(const DependencyModel& model,
                                                     const Resolver& resolver);

} // namespace depcol
