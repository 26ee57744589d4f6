#include "depcol/ast.hpp"

#include <algorithm>

namespace depcol {

std::string_view kindKeyword(ElementKind kind) {
    switch (kind) {
    case ElementKind::Plugin: return "plugin";
    case ElementKind::Feature: return "feature";
    case ElementKind::PluginGroup: return "plugingroup";
    case ElementKind::FeatureGroup: return "featuregroup";
    }
    return "plugin";
}

std::string describeRef(const ElementRef& ref) {
    std::string out{kindKeyword(ref.kind)};
    out += ' ';
    out += ref.name;
    return out;
}

std::string_view constraintKeyword(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::Forbid: return "forbid";
    case ConstraintKind::Tolerate: return "tolerate";
    case ConstraintKind::Allow: return "allow";
    }
    return "forbid";
}

std::string_view severityName(Severity severity) {
    switch (severity) {
    case Severity::Critical: return "critical";
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    }
    return "error";
}

std::vector<std::pair<const ConstraintBlock*, const ConstraintStatement*>>
statementsInOrder(const DependencyModel& model) {
    std::vector<std::pair<const ConstraintBlock*, const ConstraintStatement*>> out;
    for (const ConstraintBlock& block : model.blocks) {
        for (const ConstraintStatement& statement : block.statements) {
            out.emplace_back(&block, &statement);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second->ordinal < b.second->ordinal; });
    return out;
}

namespace {

bool isIdentifierChar(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-';
}

} // namespace

bool isValidIdentifier(std::string_view text) {
    if (text.empty() || text.front() == '.' || text.front() == '-') {
        return false;
    }
    return std::all_of(text.begin(), text.end(), isIdentifierChar);
}

bool isValidPattern(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    if (text.front() == '.' || text.front() == '-') {
        return false;
    }
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return isIdentifierChar(c) || c == '*'; });
}

} // namespace depcol
