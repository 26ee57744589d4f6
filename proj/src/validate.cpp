#include "depcol/validate.hpp"

#include <map>
#include <set>
#include <string>

namespace depcol {

namespace {

class Validator {
public:
    explicit Validator(const DependencyModel& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        collectGroups();
        checkGroupMembers();
        checkGroupCycles(ElementKind::FeatureGroup, featureGroups_);
        checkGroupCycles(ElementKind::PluginGroup, pluginGroups_);
        checkBlocks();
        return std::move(diagnostics_);
    }

private:
    void report(const char* code, std::string message, const SourceLocation& location) {
        diagnostics_.push_back(
            {DiagnosticLevel::Error, code, std::move(message), location});
    }

    void collectGroups() {
        for (const GroupDecl& group : model_.groups) {
            if (group.kind == ElementKind::PluginGroup && group.name == kAllPluginsGroup) {
                report("CC7",
                       "plugin group 'ALL' is builtin (it contains the whole plugin base) "
                       "and cannot be redeclared",
                       group.location);
                continue;
            }
            auto& table =
                group.kind == ElementKind::FeatureGroup ? featureGroups_ : pluginGroups_;
            auto [it, inserted] = table.emplace(group.name, &group);
            if (!inserted) {
                report("CC6",
                       "duplicate " + std::string(kindKeyword(group.kind)) + " name '" +
                           group.name + "'",
                       group.location);
            }
        }
    }

    bool inBase(BaseKind kind, const std::string& name) const {
        const auto& base = kind == BaseKind::Feature ? model_.featureBase : model_.pluginBase;
        if (!base) {
            return false;
        }
        for (const std::string& entry : base->entries) {
            if (entry == name) {
                return true;
            }
        }
        return false;
    }

    void checkBaseMembership(BaseKind kind, const std::string& name,
                             const SourceLocation& location) {
        if (inBase(kind, name)) {
            return;
        }
        const bool feature = kind == BaseKind::Feature;
        const auto& base = feature ? model_.featureBase : model_.pluginBase;
        std::string message = feature ? "feature '" + name + "' is not listed in the feature base"
                                      : "plugin '" + name + "' is not listed in the plugin base";
        if (!base) {
            message += feature ? " (no feature base is declared)"
                               : " (no plugin base is declared)";
        }
        report(feature ? "CC1" : "CC2", std::move(message), location);
    }

    void checkGroupRef(ElementKind kind, const std::string& name,
                       const SourceLocation& location) {
        if (kind == ElementKind::PluginGroup) {
            if (name == kAllPluginsGroup || pluginGroups_.count(name) != 0) {
                return;
            }
            report("CC3", "plugingroup '" + name + "' is not declared", location);
        } else {
            if (featureGroups_.count(name) != 0) {
                return;
            }
            report("CC3", "featuregroup '" + name + "' is not declared", location);
        }
    }

    void checkGroupMembers() {
        for (const GroupDecl& group : model_.groups) {
            for (const GroupMember& member : group.members) {
                if (const auto* ref = std::get_if<GroupRef>(&member.value)) {
                    if (ref->kind != group.kind) {
                        report("CC4",
                               "a " + std::string(kindKeyword(group.kind)) +
                                   " cannot contain the " +
                                   std::string(kindKeyword(ref->kind)) + " '" + ref->name +
                                   "'",
                               member.location);
                    } else {
                        checkGroupRef(ref->kind, ref->name, member.location);
                    }
                } else {
                    const auto& pattern = std::get<NamePattern>(member.value);
                    if (pattern.isLiteral) {
                        checkBaseMembership(group.kind == ElementKind::FeatureGroup
                                                ? BaseKind::Feature
                                                : BaseKind::Plugin,
                                            pattern.text, member.location);
                    }
                }
            }
        }
    }

    void checkGroupCycles(ElementKind kind,
                          const std::map<std::string, const GroupDecl*>& table) {
        // Three-color DFS in declaration order; every back edge is one CC5.
        std::map<std::string, int> color; // 0 white, 1 gray, 2 black
        for (const GroupDecl& group : model_.groups) {
            if (group.kind != kind || table.count(group.name) == 0 ||
                table.at(group.name) != &group) {
                continue;
            }
            visit(group, table, color);
        }
    }

    void visit(const GroupDecl& group,
               const std::map<std::string, const GroupDecl*>& table,
               std::map<std::string, int>& color) {
        int& mark = color[group.name];
        if (mark != 0) {
            return;
        }
        mark = 1;
        for (const GroupMember& member : group.members) {
            const auto* ref = std::get_if<GroupRef>(&member.value);
            if (ref == nullptr || ref->kind != group.kind) {
                continue;
            }
            auto it = table.find(ref->name);
            if (it == table.end()) {
                continue; // undeclared, reported as CC3
            }
            int state = color.count(ref->name) ? color[ref->name] : 0;
            if (state == 1) {
                report("CC5",
                       "cyclic group inclusion: " + std::string(kindKeyword(group.kind)) +
                           " '" + group.name + "' reaches itself through '" + ref->name +
                           "'",
                       member.location);
                continue;
            }
            if (state == 0) {
                visit(*it->second, table, color);
            }
        }
        color[group.name] = 2;
    }

    void checkRef(const ElementRef& ref, const SourceLocation& location) {
        switch (ref.kind) {
        case ElementKind::Plugin:
            checkBaseMembership(BaseKind::Plugin, ref.name, location);
            break;
        case ElementKind::Feature:
            checkBaseMembership(BaseKind::Feature, ref.name, location);
            break;
        case ElementKind::FeatureGroup:
        case ElementKind::PluginGroup:
            checkGroupRef(ref.kind, ref.name, location);
            break;
        }
    }

    void checkBlocks() {
        for (const ConstraintBlock& block : model_.blocks) {
            checkRef(block.subject, block.location);
            for (const ConstraintStatement& statement : block.statements) {
                checkRef(statement.target, statement.location);
                if (statement.severity && statement.kind != ConstraintKind::Forbid) {
                    report("CC8",
                           "severity annotations are only allowed on 'forbid' statements",
                           statement.location);
                }
            }
        }
    }

    const DependencyModel& model_;
    std::map<std::string, const GroupDecl*> featureGroups_;
    std::map<std::string, const GroupDecl*> pluginGroups_;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace

std::vector<Diagnostic> validateModel(const DependencyModel& model) {
    return Validator(model).run();
}

} // namespace depcol
