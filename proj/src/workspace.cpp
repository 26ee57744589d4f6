#include "depcol/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace depcol {

namespace fs = std::filesystem;

void Workspace::rebuildFeatureIndex() {
    featuresOfPlugin.clear();
    for (const auto& [featureId, feature] : features) {
        for (const std::string& plugin : feature.containedPlugins) {
            featuresOfPlugin[plugin].insert(featureId);
        }
    }
}

bool DependencyGraph::hasEdge(const std::string& source, const std::string& target) const {
    auto it = edges.find(source);
    if (it == edges.end()) {
        return false;
    }
    return std::find(it->second.begin(), it->second.end(), target) != it->second.end();
}

namespace {

std::optional<std::string> readFile(const fs::path& path) {
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

void collectFiles(const fs::path& root,
                  std::vector<fs::path>& manifests,
                  std::vector<fs::path>& featureFiles,
                  std::vector<Diagnostic>& diagnostics) {
    std::error_code ec;
    auto iterator = fs::recursive_directory_iterator(
        root, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                               "cannot read workspace root '" + root.string() +
                                   "': " + ec.message(),
                               {root.string(), 1, 1}});
        return;
    }
    for (auto it = fs::begin(iterator); it != fs::end(iterator); it.increment(ec)) {
        if (ec) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                                   "error while scanning '" + root.string() +
                                       "': " + ec.message(),
                                   {root.string(), 1, 1}});
            return;
        }
        if (!it->is_regular_file(ec) || ec) {
            continue;
        }
        const fs::path& path = it->path();
        if (path.filename() == "MANIFEST.MF" && path.parent_path().filename() == "META-INF") {
            manifests.push_back(path);
        } else if (path.filename() == "feature.xml") {
            featureFiles.push_back(path);
        }
    }
}

} // namespace

Workspace scanWorkspace(const std::vector<std::string>& roots,
                        std::vector<Diagnostic>& diagnostics) {
    std::vector<fs::path> manifests;
    std::vector<fs::path> featureFiles;
    for (const std::string& root : roots) {
        fs::path rootPath(root);
        std::error_code ec;
        if (!fs::is_directory(rootPath, ec) || ec) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                                   "workspace root '" + root + "' is not a readable directory",
                                   {root, 1, 1}});
            continue;
        }
        collectFiles(rootPath, manifests, featureFiles, diagnostics);
    }

    // Sorted paths make the merge independent of directory traversal order.
    std::sort(manifests.begin(), manifests.end());
    manifests.erase(std::unique(manifests.begin(), manifests.end()), manifests.end());
    std::sort(featureFiles.begin(), featureFiles.end());
    featureFiles.erase(std::unique(featureFiles.begin(), featureFiles.end()),
                       featureFiles.end());

    Workspace workspace;
    for (const fs::path& path : manifests) {
        auto bytes = readFile(path);
        if (!bytes) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                                   "cannot read '" + path.string() + "'",
                                   {path.string(), 1, 1}});
            continue;
        }
        auto manifest = parseManifest(*bytes, path.string(), diagnostics);
        if (!manifest) {
            continue;
        }
        auto [it, inserted] = workspace.plugins.emplace(manifest->symbolicName, *manifest);
        if (!inserted) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-DUPLICATE-PLUGIN",
                                   "plugin '" + manifest->symbolicName +
                                       "' is declared both in '" + it->second.sourcePath +
                                       "' and in '" + manifest->sourcePath +
                                       "'; the second manifest is ignored",
                                   {manifest->sourcePath, 1, 1}});
        }
    }
    for (const fs::path& path : featureFiles) {
        auto bytes = readFile(path);
        if (!bytes) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-IO",
                                   "cannot read '" + path.string() + "'",
                                   {path.string(), 1, 1}});
            continue;
        }
        auto feature = parseFeatureXml(*bytes, path.string(), diagnostics);
        if (!feature) {
            continue;
        }
        auto [it, inserted] = workspace.features.emplace(feature->featureId, *feature);
        if (!inserted) {
            diagnostics.push_back({DiagnosticLevel::Error, "E-DUPLICATE-FEATURE",
                                   "feature '" + feature->featureId +
                                       "' is declared both in '" + it->second.sourcePath +
                                       "' and in '" + feature->sourcePath +
                                       "'; the second definition is ignored",
                                   {feature->sourcePath, 1, 1}});
        }
    }
    workspace.rebuildFeatureIndex();
    return workspace;
}

DependencyGraph buildDependencyGraph(const Workspace& ws,
                                     bool includeOptional,
                                     std::vector<Diagnostic>* diagnostics) {
    DependencyGraph graph;
    for (const auto& [name, manifest] : ws.plugins) {
        std::vector<std::string>& targets = graph.edges[name];
        std::set<std::string> seen;
        for (const RequiredBundle& required : manifest.requiredBundles) {
            if (required.optional && !includeOptional) {
                continue;
            }
            if (!seen.insert(required.name).second) {
                continue;
            }
            targets.push_back(required.name);
            if (required.name == name && diagnostics != nullptr) {
                diagnostics->push_back({DiagnosticLevel::Warning, "W-SELF-DEPENDENCY",
                                        "plugin '" + name + "' requires itself",
                                        {manifest.sourcePath, 1, 1}});
            }
            if (ws.plugins.count(required.name) == 0) {
                graph.externalTargets.emplace(required.name, manifest.sourcePath);
            }
        }
    }
    return graph;
}

std::vector<Diagnostic> externalTargetDiagnostics(const DependencyGraph& graph,
                                                  const std::set<std::string>& pluginBase) {
    std::vector<Diagnostic> diagnostics;
    for (const auto& [name, sourcePath] : graph.externalTargets) {
        if (pluginBase.count(name) != 0) {
            continue; // declared in the base; constraints may still address it
        }
        diagnostics.push_back({DiagnosticLevel::Warning, "W-EXTERNAL-TARGET",
                               "required bundle '" + name +
                                   "' has no manifest in the workspace and is not in the "
                                   "plugin base",
                               {sourcePath, 1, 1}});
    }
    return diagnostics;
}

std::string generateBases(const Workspace& ws) {
    std::ostringstream out;
    out << "declare featurebase {\n";
    for (const auto& [featureId, feature] : ws.features) {
        out << "    " << featureId << ";\n";
    }
    out << "}\n";
    out << "declare pluginbase {\n";
    for (const auto& [pluginName, manifest] : ws.plugins) {
        out << "    " << pluginName << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace depcol
