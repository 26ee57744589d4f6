#include "depcol/resolve.hpp"

#include <utility>

#include "depcol/pattern.hpp"

namespace depcol {

namespace {

const PluginSet kEmptySet;

} // namespace

Universe Universe::fromModel(const DependencyModel& model) {
    Universe universe;
    if (model.featureBase) {
        universe.featureNames.insert(model.featureBase->entries.begin(),
                                     model.featureBase->entries.end());
    }
    if (model.pluginBase) {
        universe.pluginNames.insert(model.pluginBase->entries.begin(),
                                    model.pluginBase->entries.end());
    }
    return universe;
}

Resolver::Resolver(const DependencyModel& model, const Workspace& workspace)
    : model_(model), workspace_(workspace), universe_(Universe::fromModel(model)) {
    for (const GroupDecl& group : model_.groups) {
        if (group.kind == ElementKind::PluginGroup && group.name == kAllPluginsGroup) {
            continue; // builtin wins; validation rejects the redeclaration
        }
        auto& table = group.kind == ElementKind::FeatureGroup ? featureGroups_ : pluginGroups_;
        table.emplace(group.name, &group); // first declaration wins
    }
}

const NameSet& Resolver::featureGroup(const std::string& name) const {
    std::lock_guard lock(mutex_);
    NameSet inProgress;
    return featureGroupLocked(name, inProgress);
}

const PluginSet& Resolver::pluginGroup(const std::string& name) const {
    std::lock_guard lock(mutex_);
    NameSet inProgress;
    return pluginGroupLocked(name, inProgress);
}

const PluginSet& Resolver::plugins(const ElementRef& ref) const {
    std::lock_guard lock(mutex_);
    return pluginsLocked(ref);
}

std::vector<Diagnostic> Resolver::diagnostics() const {
    std::lock_guard lock(mutex_);
    return diagnostics_;
}

const NameSet& Resolver::featureGroupLocked(const std::string& name,
                                            NameSet& inProgress) const {
    if (auto it = featureGroupCache_.find(name); it != featureGroupCache_.end()) {
        return it->second;
    }
    auto declIt = featureGroups_.find(name);
    if (declIt == featureGroups_.end() || !inProgress.insert(name).second) {
        return kEmptySet;
    }
    NameSet resolved;
    for (const GroupMember& member : declIt->second->members) {
        if (const auto* ref = std::get_if<GroupRef>(&member.value)) {
            if (ref->kind == ElementKind::FeatureGroup) {
                const NameSet& nested = featureGroupLocked(ref->name, inProgress);
                resolved.insert(nested.begin(), nested.end());
            }
            continue;
        }
        const auto& pattern = std::get<NamePattern>(member.value);
        if (pattern.isLiteral) {
            if (universe_.featureNames.count(pattern.text) != 0) {
                resolved.insert(pattern.text);
            }
            continue;
        }
        CompiledPattern compiled = compilePattern(pattern);
        for (const std::string& featureName : universe_.featureNames) {
            if (compiled.matches(featureName)) {
                resolved.insert(featureName);
            }
        }
    }
    inProgress.erase(name);
    return featureGroupCache_.emplace(name, std::move(resolved)).first->second;
}

const PluginSet& Resolver::pluginGroupLocked(const std::string& name,
                                             NameSet& inProgress) const {
    if (auto it = pluginGroupCache_.find(name); it != pluginGroupCache_.end()) {
        return it->second;
    }
    if (name == kAllPluginsGroup) {
        return pluginGroupCache_.emplace(name, universe_.pluginNames).first->second;
    }
    auto declIt = pluginGroups_.find(name);
    if (declIt == pluginGroups_.end() || !inProgress.insert(name).second) {
        return kEmptySet;
    }
    PluginSet resolved;
    for (const GroupMember& member : declIt->second->members) {
        if (const auto* ref = std::get_if<GroupRef>(&member.value)) {
            if (ref->kind == ElementKind::PluginGroup) {
                const PluginSet& nested = pluginGroupLocked(ref->name, inProgress);
                resolved.insert(nested.begin(), nested.end());
            }
            continue;
        }
        const auto& pattern = std::get<NamePattern>(member.value);
        if (pattern.isLiteral) {
            if (universe_.pluginNames.count(pattern.text) != 0) {
                resolved.insert(pattern.text);
            }
            continue;
        }
        CompiledPattern compiled = compilePattern(pattern);
        for (const std::string& pluginName : universe_.pluginNames) {
            if (compiled.matches(pluginName)) {
                resolved.insert(pluginName);
            }
        }
    }
    inProgress.erase(name);
    return pluginGroupCache_.emplace(name, std::move(resolved)).first->second;
}

const PluginSet& Resolver::featurePluginsLocked(const std::string& featureName) const {
    if (auto it = featurePluginCache_.find(featureName); it != featurePluginCache_.end()) {
        return it->second;
    }
    PluginSet resolved;
    auto featureIt = workspace_.features.find(featureName);
    if (featureIt != workspace_.features.end()) {
        resolved = featureIt->second.containedPlugins;
    } else if (warnedFeatures_.insert(featureName).second) {
        SourceLocation location;
        if (model_.featureBase) {
            location = model_.featureBase->location;
        }
        diagnostics_.push_back({DiagnosticLevel::Warning, "W-MISSING-FEATURE",
                                "feature '" + featureName +
                                    "' was not found in the workspace; it contributes no "
                                    "plugins",
                                std::move(location)});
    }
    return featurePluginCache_.emplace(featureName, std::move(resolved)).first->second;
}

const PluginSet& Resolver::pluginsLocked(const ElementRef& ref) const {
    if (auto it = refCache_.find(ref); it != refCache_.end()) {
        return it->second;
    }
    PluginSet resolved;
    switch (ref.kind) {
    case ElementKind::Plugin:
        resolved.insert(ref.name);
        break;
    case ElementKind::PluginGroup: {
        NameSet inProgress;
        resolved = pluginGroupLocked(ref.name, inProgress);
        break;
    }
    case ElementKind::Feature:
        resolved = featurePluginsLocked(ref.name);
        break;
    case ElementKind::FeatureGroup: {
        NameSet inProgress;
        for (const std::string& featureName : featureGroupLocked(ref.name, inProgress)) {
            const PluginSet& contribution = featurePluginsLocked(featureName);
            resolved.insert(contribution.begin(), contribution.end());
        }
        break;
    }
    }
    return refCache_.emplace(ref, std::move(resolved)).first->second;
}

NameSet resolveFeatureGroup(const std::string& name, const DependencyModel& model) {
    Workspace empty;
    Resolver resolver(model, empty);
    return resolver.featureGroup(name);
}

PluginSet resolvePluginGroup(const std::string& name, const DependencyModel& model) {
    Workspace empty;
    Resolver resolver(model, empty);
    return resolver.pluginGroup(name);
}

PluginSet pluginsOf(const ElementRef& ref,
                    const DependencyModel& model,
                    const Workspace& workspace,
                    std::vector<Diagnostic>* diagnostics) {
    Resolver resolver(model, workspace);
    PluginSet result = resolver.plugins(ref);
    if (diagnostics != nullptr) {
        auto collected = resolver.diagnostics();
        diagnostics->insert(diagnostics->end(), collected.begin(), collected.end());
    }
    return result;
}

} // namespace depcol
