#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "depcol/diagnostics.hpp"

namespace depcol {

enum class ElementKind { Plugin, Feature, PluginGroup, FeatureGroup };

/// Canonical lowercase keyword for a kind ("plugin", "featuregroup", ...).
std::string_view kindKeyword(ElementKind kind);

/// Reference to a plugin, feature or group by name.
struct ElementRef {
    ElementKind kind = ElementKind::Plugin;
    std::string name;

    auto operator<=>(const ElementRef&) const = default;
};

/// "plugin p1", "featuregroup fgUi" - the way a reference reads in a model.
std::string describeRef(const ElementRef& ref);

/// A name or a wildcard pattern. `*` matches any (possibly empty) substring;
/// every other character, including `.`, matches literally.
struct NamePattern {
    std::string text;
    bool isLiteral = true; // true iff text contains no '*'

    bool operator==(const NamePattern&) const = default;
};

enum class BaseKind { Feature, Plugin };

/// declare featurebase { ... } / declare pluginbase { ... }
struct BaseDecl {
    BaseKind kind = BaseKind::Feature;
    std::vector<std::string> entries; // textual order, duplicates removed
    SourceLocation location;

    bool operator==(const BaseDecl&) const = default;
};

/// Group member that names another group, e.g. "featuregroup fgCore;".
/// The kind is the keyword as written; a mismatch with the enclosing
/// declaration is a validation error, not a parse error.
struct GroupRef {
    ElementKind kind = ElementKind::FeatureGroup;
    std::string name;

    bool operator==(const GroupRef&) const = default;
};

struct GroupMember {
    std::variant<NamePattern, GroupRef> value;
    SourceLocation location;

    bool operator==(const GroupMember&) const = default;
};

/// declare featuregroup NAME { member; ... } (or plugingroup).
struct GroupDecl {
    ElementKind kind = ElementKind::FeatureGroup; // FeatureGroup or PluginGroup
    std::string name;
    std::vector<GroupMember> members;
    SourceLocation location;

    bool operator==(const GroupDecl&) const = default;
};

enum class ConstraintKind { Forbid, Tolerate, Allow };

std::string_view constraintKeyword(ConstraintKind kind);

enum class Severity { Critical, Error, Warning };

std::string_view severityName(Severity severity);

/// One "forbid/tolerate/allow dependency to X;" line. The ordinal is the
/// 0-based position of the statement in textual order across the whole
/// model; it is what refinement resolution is keyed on.
struct ConstraintStatement {
    ConstraintKind kind = ConstraintKind::Forbid;
    std::optional<Severity> severity; // annotation, legal on forbid only
    ElementRef target;
    SourceLocation location;
    int ordinal = 0;

    bool operator==(const ConstraintStatement&) const = default;
};

/// "plugin p1 { ...statements... }"
struct ConstraintBlock {
    ElementRef subject;
    std::vector<ConstraintStatement> statements; // nonempty, textual order
    SourceLocation location;

    bool operator==(const ConstraintBlock&) const = default;
};

/// Parsed dependency model. Bases are optional at the AST level; validation
/// only demands a base once an element of that kind is actually referenced.
struct DependencyModel {
    std::optional<BaseDecl> featureBase;
    std::optional<BaseDecl> pluginBase;
    std::vector<GroupDecl> groups;   // declaration order
    std::vector<ConstraintBlock> blocks; // textual order

    bool operator==(const DependencyModel&) const = default;
};

/// Name of the builtin plugin group covering the entire plugin base.
inline constexpr std::string_view kAllPluginsGroup = "ALL";

/// All statements of the model paired with their enclosing block,
/// sorted by ordinal (equals textual order).
std::vector<std::pair<const ConstraintBlock*, const ConstraintStatement*>>
statementsInOrder(const DependencyModel& model);

bool isValidIdentifier(std::string_view text);
bool isValidPattern(std::string_view text);

} // namespace depcol
