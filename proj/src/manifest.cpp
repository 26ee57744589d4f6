#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "depcol/workspace.hpp"

namespace depcol {

namespace {

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return std::string(text.substr(begin, end - begin));
}

std::string toLower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

/// Split on `separator` outside double-quoted runs.
std::vector<std::string> splitOutsideQuotes(std::string_view text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    bool inQuotes = false;
    for (char c : text) {
        if (c == '"') {
            inQuotes = !inQuotes;
            current.push_back(c);
        } else if (c == separator && !inQuotes) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string stripQuotes(std::string value) {
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        return value.substr(1, value.size() - 2);
    }
    return value;
}

/// Unfold the main manifest section into "Header: value" logical lines.
/// A physical line starting with a single space continues the previous
/// header; the first blank line ends the section.
std::vector<std::string> unfoldMainSection(std::string_view bytes) {
    std::vector<std::string> logical;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? bytes.substr(pos)
                                    : bytes.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            break; // end of main section
        }
        if (line.front() == ' ') {
            if (!logical.empty()) {
                logical.back().append(line.substr(1));
            }
        } else {
            logical.emplace_back(line);
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
    }
    return logical;
}

bool hasOptionalResolution(const std::vector<std::string>& parameters) {
    for (std::size_t i = 1; i < parameters.size(); ++i) {
        std::string parameter;
        for (char c : parameters[i]) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                parameter.push_back(c);
            }
        }
        auto assign = parameter.find(":=");
        if (assign == std::string::npos) {
            continue;
        }
        if (parameter.substr(0, assign) == "resolution" &&
            stripQuotes(parameter.substr(assign + 2)) == "optional") {
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<PluginManifest> parseManifest(std::string_view bytes,
                                            const std::string& path,
                                            std::vector<Diagnostic>& diagnostics) {
    std::string symbolicNameValue;
    std::string requireBundleValue;
    bool sawSymbolicName = false;

    for (const std::string& line : unfoldMainSection(bytes)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            continue; // not a header line; tolerated
        }
        std::string name = toLower(trim(std::string_view(line).substr(0, colon)));
        std::string value = trim(std::string_view(line).substr(colon + 1));
        if (name == "bundle-symbolicname" && !sawSymbolicName) {
            sawSymbolicName = true;
            symbolicNameValue = std::move(value);
        } else if (name == "require-bundle" && requireBundleValue.empty()) {
            requireBundleValue = std::move(value);
        }
    }

    if (!sawSymbolicName) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-MANIFEST",
                               "manifest has no Bundle-SymbolicName header",
                               {path, 1, 1}});
        return std::nullopt;
    }

    PluginManifest manifest;
    manifest.sourcePath = path;
    manifest.symbolicName =
        trim(splitOutsideQuotes(symbolicNameValue, ';').front());
    if (manifest.symbolicName.empty()) {
        diagnostics.push_back({DiagnosticLevel::Error, "E-MANIFEST",
                               "Bundle-SymbolicName value is empty",
                               {path, 1, 1}});
        return std::nullopt;
    }

    std::set<std::string> seen;
    for (const std::string& element : splitOutsideQuotes(requireBundleValue, ',')) {
        auto parameters = splitOutsideQuotes(element, ';');
        std::string bundleName = trim(parameters.front());
        if (bundleName.empty()) {
            continue; // trailing comma or stray separator
        }
        if (!seen.insert(bundleName).second) {
            continue; // duplicates keep the first occurrence
        }
        manifest.requiredBundles.push_back(
            {std::move(bundleName), hasOptionalResolution(parameters)});
    }
    return manifest;
}

} // namespace depcol
