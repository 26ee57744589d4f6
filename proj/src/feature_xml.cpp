#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "depcol/workspace.hpp"

namespace depcol {

std::optional<FeatureDefinition> parseFeatureXml(std::string_view bytes,
                                                 const std::string& path,
                                                 std::vector<Diagnostic>& diagnostics) {
    namespace pt = boost::property_tree;

    pt::ptree document;
    try {
        std::istringstream stream{std::string(bytes)};
        pt::read_xml(stream, document);
    } catch (const pt::xml_parser_error& error) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-FEATURE-XML",
                               std::string("malformed feature.xml: ") + error.message(),
                               {path, static_cast<int>(error.line()), 1}});
        return std::nullopt;
    }

    auto featureNode = document.get_child_optional("feature");
    if (!featureNode) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-FEATURE-XML",
                               "root element is not <feature>",
                               {path, 1, 1}});
        return std::nullopt;
    }

    auto id = featureNode->get_optional<std::string>("<xmlattr>.id");
    if (!id || id->empty()) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-FEATURE-XML",
                               "<feature> element has no id attribute",
                               {path, 1, 1}});
        return std::nullopt;
    }

    FeatureDefinition feature;
    feature.featureId = *id;
    feature.sourcePath = path;

    for (const auto& [name, child] : *featureNode) {
        if (name == "plugin") {
            auto pluginId = child.get_optional<std::string>("<xmlattr>.id");
            if (pluginId && !pluginId->empty()) {
                feature.containedPlugins.insert(*pluginId);
            } else {
                diagnostics.push_back({DiagnosticLevel::Warning, "W-FEATURE-XML",
                                       "<plugin> element without id attribute ignored",
                                       {path, 1, 1}});
            }
        } else if (name == "includes") {
            // No nested-feature flattening; included features are skipped.
            diagnostics.push_back({DiagnosticLevel::Warning, "W-FEATURE-INCLUDE",
                                   "feature '" + feature.featureId +
                                       "' includes another feature; the include is ignored",
                                   {path, 1, 1}});
        }
    }
    return feature;
}

} // namespace depcol
