#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "depcol/ast.hpp"
#include "depcol/diagnostics.hpp"
#include "depcol/workspace.hpp"

namespace depcol {

using NameSet = std::set<std::string>;
using PluginSet = NameSet;

/// The sanctioned name universe of a model: exactly the base declarations.
/// Patterns resolve against these sets, never against the raw workspace.
struct Universe {
    NameSet featureNames;
    NameSet pluginNames;

    static Universe fromModel(const DependencyModel& model);
};

/// Resolves references to concrete plugin sets for one (model, workspace)
/// pair. Group and feature resolutions are memoized; the cache never changes
/// observable results and the class is safe to query from multiple threads.
///
/// Expects a validated model: undeclared groups resolve to the empty set
/// here because validation already rejected them.
class Resolver {
public:
    Resolver(const DependencyModel& model, const Workspace& workspace);

    Resolver(const Resolver&) = delete;
    Resolver& operator=(const Resolver&) = delete;

    /// Features of the base contained in the named feature group, per the
    /// three membership conditions: listed, pattern-matched, or reached
    /// through a nested group.
    const NameSet& featureGroup(const std::string& name) const;

    /// Plugin-side counterpart; the builtin ALL yields the whole plugin base.
    const PluginSet& pluginGroup(const std::string& name) const;

    /// The PG function: concrete plugins represented by any reference.
    const PluginSet& plugins(const ElementRef& ref) const;

    const Universe& universe() const { return universe_; }

    /// Warnings gathered while resolving (W-MISSING-FEATURE), each emitted
    /// once per feature regardless of how often it was needed.
    std::vector<Diagnostic> diagnostics() const;

private:
    const NameSet& featureGroupLocked(const std::string& name, NameSet& inProgress) const;
    const PluginSet& pluginGroupLocked(const std::string& name, NameSet& inProgress) const;
    const PluginSet& pluginsLocked(const ElementRef& ref) const;
    const PluginSet& featurePluginsLocked(const std::string& featureName) const;

    const DependencyModel& model_;
    const Workspace& workspace_;
    Universe universe_;
    std::map<std::string, const GroupDecl*> featureGroups_;
    std::map<std::string, const GroupDecl*> pluginGroups_;

    mutable std::mutex mutex_;
    mutable std::map<std::string, NameSet> featureGroupCache_;
    mutable std::map<std::string, PluginSet> pluginGroupCache_;
    mutable std::map<ElementRef, PluginSet> refCache_;
    mutable std::map<std::string, PluginSet> featurePluginCache_;
    mutable NameSet warnedFeatures_;
    mutable std::vector<Diagnostic> diagnostics_;
};

// One-shot forms for callers without a Resolver at hand.

NameSet resolveFeatureGroup(const std::string& name, const DependencyModel& model);
PluginSet resolvePluginGroup(const std::string& name, const DependencyModel& model);
PluginSet pluginsOf(const ElementRef& ref,
                    const DependencyModel& model,
                    const Workspace& workspace,
                    std::vector<Diagnostic>* diagnostics = nullptr);

} // namespace depcol
