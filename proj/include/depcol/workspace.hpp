#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "depcol/diagnostics.hpp"

namespace depcol {

struct RequiredBundle {
    std::string name;
    bool optional = false; // Require-Bundle entry carried resolution:=optional

    bool operator==(const RequiredBundle&) const = default;
};

/// The slice of an OSGi MANIFEST.MF this tool cares about.
struct PluginManifest {
    std::string symbolicName;
    std::vector<RequiredBundle> requiredBundles; // manifest order, duplicates dropped
    std::string sourcePath;

    bool operator==(const PluginManifest&) const = default;
};

struct FeatureDefinition {
    std::string featureId;
    std::set<std::string> containedPlugins;
    std::string sourcePath;

    bool operator==(const FeatureDefinition&) const = default;
};

/// Everything extracted from a plugin workspace. featuresOfPlugin is the
/// inverse of feature containment and must be rebuilt after the maps are
/// edited by hand (scanWorkspace does this itself).
struct Workspace {
    std::map<std::string, PluginManifest> plugins;
    std::map<std::string, FeatureDefinition> features;
    std::map<std::string, std::set<std::string>> featuresOfPlugin;

    void rebuildFeatureIndex();
};

/// Actual dependency graph: edges(m) lists the plugins required by m, in
/// manifest order. Required names with no manifest in the workspace stay in
/// the graph as external targets, mapped to the path of the first manifest
/// that required them.
struct DependencyGraph {
    std::map<std::string, std::vector<std::string>> edges;
    std::map<std::string, std::string> externalTargets;

    bool hasEdge(const std::string& source, const std::string& target) const;
};

/// Parse OSGi manifest bytes. Header names are case-insensitive, physical
/// lines starting with a single space continue the previous header, and the
/// main section ends at the first blank line. Directives and attributes
/// after ';' are stripped from names; commas inside quoted attribute values
/// do not split Require-Bundle entries.
std::optional<PluginManifest> parseManifest(std::string_view bytes,
                                            const std::string& path,
                                            std::vector<Diagnostic>& diagnostics);

/// Parse a feature.xml: feature id from the root element, contained plugins
/// from <plugin id="..."/> children. <includes> elements are ignored with
/// warning W-FEATURE-INCLUDE.
std::optional<FeatureDefinition> parseFeatureXml(std::string_view bytes,
                                                 const std::string& path,
                                                 std::vector<Diagnostic>& diagnostics);

/// Walk the given roots; every META-INF/MANIFEST.MF becomes a plugin, every
/// feature.xml a feature. The result is independent of traversal order.
/// Duplicate symbolic names are an error; the first (in sorted path order)
/// wins.
Workspace scanWorkspace(const std::vector<std::string>& roots,
                        std::vector<Diagnostic>& diagnostics);

DependencyGraph buildDependencyGraph(const Workspace& ws,
                                     bool includeOptional,
                                     std::vector<Diagnostic>* diagnostics = nullptr);

/// W-EXTERNAL-TARGET warnings for graph targets that are neither workspace
/// plugins nor listed in the plugin base.
std::vector<Diagnostic> externalTargetDiagnostics(const DependencyGraph& graph,
                                                  const std::set<std::string>& pluginBase);

/// Emit "declare featurebase { ... }" and "declare pluginbase { ... }"
/// covering every feature and plugin of the workspace, sorted, one entry
/// per line. The output parses and validates cleanly.
std::string generateBases(const Workspace& ws);

} // namespace depcol
