#pragma once

// Shared test fixtures: scratch directories, workspace file writers and the
// model texts used across suites.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace depcol::test {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        path_ = fs::temp_directory_path() /
                ("depcol-test-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter.fetch_add(1)));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

inline void writeFile(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream stream(path, std::ios::binary);
    stream << content;
}

/// Creates <root>/<name>/META-INF/MANIFEST.MF. `requireBundle`, when
/// nonempty, becomes the Require-Bundle header value verbatim.
inline fs::path writePluginManifest(const fs::path& root,
                                    const std::string& name,
                                    const std::string& requireBundle = "") {
    std::string manifest = "Manifest-Version: 1.0\n";
    manifest += "Bundle-SymbolicName: " + name + ";singleton:=true\n";
    manifest += "Bundle-Version: 1.0.0\n";
    if (!requireBundle.empty()) {
        manifest += "Require-Bundle: " + requireBundle + "\n";
    }
    fs::path path = root / name / "META-INF" / "MANIFEST.MF";
    writeFile(path, manifest);
    return path;
}

inline fs::path writeFeatureXml(const fs::path& root,
                                const std::string& featureId,
                                const std::vector<std::string>& plugins) {
    std::string xml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    xml += "<feature id=\"" + featureId + "\" version=\"1.0.0\">\n";
    for (const std::string& plugin : plugins) {
        xml += "   <plugin id=\"" + plugin + "\" version=\"0.0.0\"/>\n";
    }
    xml += "</feature>\n";
    fs::path path = root / ("feature-" + featureId) / "feature.xml";
    writeFile(path, xml);
    return path;
}

inline const std::string kListing1 = R"(declare featurebase {
    f1;
    f2;
    f3;
}
)";

inline const std::string kListing2 = R"(declare featuregroup fgListFeatures {
  f1;
  f2;
}
declare featuregroup fgRegExp {
  fs.ui.*;
  fs.core.*;
}
declare featuregroup fgCombined {
  f3;
  fs.ext.*;
  featuregroup fgListFeatures;
  featuregroup fgRegExp;
}
)";

inline const std::string kListing4 = R"(pluginGroup pg1 {
  forbid dependency to pluginGroup ALL;
  tolerate dependency to pluginGroup pgUi;
}
plugin p1 {
  allow dependency to plugin p4.ui;
}
)";

/// Complete model for the plugin-group refinement walkthrough: base of six
/// plugins, pg1 holding p1, pgUi matching *.ui, plus the constraints of
/// kListing4.
inline const std::string kRefinementModel = R"(declare pluginbase {
    p1;
    p2;
    p3;
    p4.ui;
    p5.ui;
    p6.i18n;
}
declare plugingroup pg1 {
    p1;
}
declare plugingroup pgUi {
    *.ui;
}
pluginGroup pg1 {
    forbid dependency to pluginGroup ALL;
    tolerate dependency to pluginGroup pgUi;
}
plugin p1 {
    allow dependency to plugin p4.ui;
}
)";

/// Workspace matching kRefinementModel: p1 requires p4.ui, p5.ui, p6.i18n.
inline void writeRefinementWorkspace(const fs::path& root) {
    writePluginManifest(root, "p1", "p4.ui, p5.ui, p6.i18n");
    writePluginManifest(root, "p2");
    writePluginManifest(root, "p3");
    writePluginManifest(root, "p4.ui");
    writePluginManifest(root, "p5.ui");
    writePluginManifest(root, "p6.i18n");
}

} // namespace depcol::test
