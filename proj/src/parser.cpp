#include "depcol/parser.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lexer.hpp"

namespace depcol {

namespace {

using detail::Token;
using detail::TokenType;

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diagnostics)
        : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

    DependencyModel run() {
        while (!at(TokenType::End)) {
            if (!parseItem()) {
                recoverToItemStart();
            }
        }
        return std::move(model_);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t index = pos_ + ahead;
        if (index >= tokens_.size()) {
            index = tokens_.size() - 1; // End token
        }
        return tokens_[index];
    }

    const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    bool at(TokenType type) const { return peek().type == type; }

    bool atKeyword(std::string_view keyword) const {
        return at(TokenType::Word) && peek().lowered == keyword;
    }

    void error(std::string message, SourceLocation location) {
        diagnostics_.push_back(
            {DiagnosticLevel::Error, "E-SYNTAX", std::move(message), std::move(location)});
    }

    void warn(std::string code, std::string message, SourceLocation location) {
        diagnostics_.push_back({DiagnosticLevel::Warning, std::move(code), std::move(message),
                                std::move(location)});
    }

    bool expect(TokenType type, std::string_view what) {
        if (at(type)) {
            take();
            return true;
        }
        error(std::string("expected ") + std::string(what), peek().location);
        return false;
    }

    // --- recovery ------------------------------------------------------

    static bool isItemStartKeyword(std::string_view lowered) {
        return lowered == "declare" || lowered == "plugin" || lowered == "feature" ||
               lowered == "featuregroup" || lowered == "plugingroup";
    }

    void recoverToItemStart() {
        // Always make progress, then sync on something that can begin an item.
        if (!at(TokenType::End)) {
            take();
        }
        int depth = 0;
        while (!at(TokenType::End)) {
            if (at(TokenType::LBrace)) {
                ++depth;
            } else if (at(TokenType::RBrace)) {
                if (depth == 0) {
                    take();
                    return;
                }
                --depth;
            } else if (depth == 0 && at(TokenType::Word) &&
                       isItemStartKeyword(peek().lowered)) {
                return;
            }
            take();
        }
    }

    /// Skip to the end of a broken statement: past the next ';', or stop
    /// before '}' so the enclosing block can close.
    void recoverToStatementEnd() {
        while (!at(TokenType::End) && !at(TokenType::RBrace)) {
            if (at(TokenType::Semicolon)) {
                take();
                return;
            }
            take();
        }
    }

    // --- items ----------------------------------------------------------

    bool parseItem() {
        if (atKeyword("declare")) {
            return parseDeclaration();
        }
        if (auto kind = refKind(peek().lowered)) {
            return parseConstraintBlock(*kind);
        }
        error("expected 'declare', or a constraint block starting with 'plugin', "
              "'feature', 'featuregroup' or 'plugingroup'",
              peek().location);
        return false;
    }

    static std::optional<ElementKind> refKind(std::string_view lowered) {
        if (lowered == "plugin") return ElementKind::Plugin;
        if (lowered == "feature") return ElementKind::Feature;
        if (lowered == "featuregroup") return ElementKind::FeatureGroup;
        if (lowered == "plugingroup") return ElementKind::PluginGroup;
        return std::nullopt;
    }

    bool parseDeclaration() {
        SourceLocation declareLoc = peek().location;
        take(); // declare
        if (atKeyword("featurebase")) {
            take();
            return parseBaseDecl(BaseKind::Feature, declareLoc);
        }
        if (atKeyword("pluginbase")) {
            take();
            return parseBaseDecl(BaseKind::Plugin, declareLoc);
        }
        if (atKeyword("featuregroup")) {
            take();
            return parseGroupDecl(ElementKind::FeatureGroup, declareLoc);
        }
        if (atKeyword("plugingroup")) {
            take();
            return parseGroupDecl(ElementKind::PluginGroup, declareLoc);
        }
        error("expected 'featurebase', 'pluginbase', 'featuregroup' or 'plugingroup' "
              "after 'declare'",
              peek().location);
        return false;
    }

    bool parseBaseDecl(BaseKind kind, SourceLocation location) {
        BaseDecl base;
        base.kind = kind;
        base.location = std::move(location);
        if (!expect(TokenType::LBrace, "'{'")) {
            return false;
        }
        std::set<std::string> seen;
        while (!at(TokenType::RBrace) && !at(TokenType::End)) {
            if (!at(TokenType::Word)) {
                error("expected a name or '}'", peek().location);
                recoverToStatementEnd();
                continue;
            }
            Token entry = take();
            if (!isValidIdentifier(entry.text)) {
                error("'" + entry.text + "' is not a valid name", entry.location);
            } else if (!seen.insert(entry.text).second) {
                warn("W-DUP-BASE-ENTRY",
                     "duplicate entry '" + entry.text + "' in " + baseKeyword(kind) +
                         "; keeping the first occurrence",
                     entry.location);
            } else {
                base.entries.push_back(entry.text);
            }
            expect(TokenType::Semicolon, "';'");
        }
        expect(TokenType::RBrace, "'}'");

        auto& slot = kind == BaseKind::Feature ? model_.featureBase : model_.pluginBase;
        if (slot.has_value()) {
            diagnostics_.push_back({DiagnosticLevel::Error, "E-DUP-BASE",
                                    "a " + baseKeyword(kind) +
                                        " was already declared; this one is ignored",
                                    base.location});
        } else {
            slot = std::move(base);
        }
        return true;
    }

    static std::string baseKeyword(BaseKind kind) {
        return kind == BaseKind::Feature ? "featurebase" : "pluginbase";
    }

    bool parseGroupDecl(ElementKind kind, SourceLocation location) {
        GroupDecl group;
        group.kind = kind;
        group.location = std::move(location);
        if (!at(TokenType::Word)) {
            error("expected a group name", peek().location);
            return false;
        }
        Token name = take();
        if (!isValidIdentifier(name.text)) {
            error("'" + name.text + "' is not a valid group name", name.location);
        }
        group.name = name.text;
        if (!expect(TokenType::LBrace, "'{'")) {
            return false;
        }
        while (!at(TokenType::RBrace) && !at(TokenType::End)) {
            parseGroupMember(group);
        }
        expect(TokenType::RBrace, "'}'");
        model_.groups.push_back(std::move(group));
        return true;
    }

    void parseGroupMember(GroupDecl& group) {
        if (!at(TokenType::Word)) {
            error("expected a group member or '}'", peek().location);
            recoverToStatementEnd();
            return;
        }
        Token first = take();
        GroupMember member;
        member.location = first.location;
        if (first.lowered == "featuregroup" || first.lowered == "plugingroup") {
            ElementKind refKind = first.lowered == "featuregroup" ? ElementKind::FeatureGroup
                                                                  : ElementKind::PluginGroup;
            if (!at(TokenType::Word)) {
                error("expected a group name after '" + first.text + "'", peek().location);
                recoverToStatementEnd();
                return;
            }
            Token name = take();
            if (!isValidIdentifier(name.text)) {
                error("'" + name.text + "' is not a valid group name", name.location);
                recoverToStatementEnd();
                return;
            }
            member.value = GroupRef{refKind, name.text};
        } else {
            if (!isValidPattern(first.text)) {
                error("'" + first.text + "' is not a valid name or pattern", first.location);
                recoverToStatementEnd();
                return;
            }
            NamePattern pattern;
            pattern.text = first.text;
            pattern.isLiteral = first.text.find('*') == std::string::npos;
            member.value = std::move(pattern);
        }
        expect(TokenType::Semicolon, "';'");
        group.members.push_back(std::move(member));
    }

    bool parseConstraintBlock(ElementKind subjectKind) {
        ConstraintBlock block;
        block.location = peek().location;
        take(); // subject kind keyword
        if (!at(TokenType::Word)) {
            error("expected a name after '" + std::string(kindKeyword(subjectKind)) + "'",
                  peek().location);
            return false;
        }
        Token name = take();
        if (!isValidIdentifier(name.text)) {
            error("'" + name.text + "' is not a valid name", name.location);
        }
        block.subject = ElementRef{subjectKind, name.text};
        if (!expect(TokenType::LBrace, "'{'")) {
            return false;
        }
        while (!at(TokenType::RBrace) && !at(TokenType::End)) {
            parseStatement(block);
        }
        expect(TokenType::RBrace, "'}'");
        if (block.statements.empty()) {
            warn("W-EMPTY-BLOCK",
                 "constraint block for " + describeRef(block.subject) +
                     " contains no statements and is dropped",
                 block.location);
            return true;
        }
        model_.blocks.push_back(std::move(block));
        return true;
    }

    void parseStatement(ConstraintBlock& block) {
        ConstraintStatement statement;
        statement.location = peek().location;

        if (at(TokenType::LBracket)) {
            take();
            if (at(TokenType::Word)) {
                Token severity = take();
                if (severity.lowered == "critical") {
                    statement.severity = Severity::Critical;
                } else if (severity.lowered == "error") {
                    statement.severity = Severity::Error;
                } else if (severity.lowered == "warning") {
                    statement.severity = Severity::Warning;
                } else {
                    error("unknown severity '" + severity.text +
                              "'; expected critical, error or warning",
                          severity.location);
                    recoverToStatementEnd();
                    return;
                }
            } else {
                error("expected a severity after '['", peek().location);
                recoverToStatementEnd();
                return;
            }
            if (!expect(TokenType::RBracket, "']'")) {
                recoverToStatementEnd();
                return;
            }
        }

        if (atKeyword("forbid")) {
            statement.kind = ConstraintKind::Forbid;
        } else if (atKeyword("tolerate")) {
            statement.kind = ConstraintKind::Tolerate;
        } else if (atKeyword("allow")) {
            statement.kind = ConstraintKind::Allow;
        } else {
            error("expected 'forbid', 'tolerate' or 'allow'", peek().location);
            recoverToStatementEnd();
            return;
        }
        take();

        if (!atKeyword("dependency")) {
            error("expected 'dependency'", peek().location);
            recoverToStatementEnd();
            return;
        }
        take();
        if (!atKeyword("to")) {
            error("expected 'to'", peek().location);
            recoverToStatementEnd();
            return;
        }
        take();

        auto targetKind = at(TokenType::Word) ? refKind(peek().lowered) : std::nullopt;
        if (!targetKind) {
            error("expected 'plugin', 'feature', 'featuregroup' or 'plugingroup'",
                  peek().location);
            recoverToStatementEnd();
            return;
        }
        take();
        if (!at(TokenType::Word)) {
            error("expected a name", peek().location);
            recoverToStatementEnd();
            return;
        }
        Token targetName = take();
        if (!isValidIdentifier(targetName.text)) {
            error("'" + targetName.text + "' is not a valid name", targetName.location);
            recoverToStatementEnd();
            return;
        }
        statement.target = ElementRef{*targetKind, targetName.text};

        if (!expect(TokenType::Semicolon, "';'")) {
            recoverToStatementEnd();
            // The statement itself is complete; keep it.
        }
        statement.ordinal = nextOrdinal_++;
        block.statements.push_back(std::move(statement));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic>& diagnostics_;
    DependencyModel model_;
    int nextOrdinal_ = 0;
};

} // namespace

ParseResult parseModel(std::string_view text, std::string fileName) {
    ParseResult result;
    auto tokens = detail::tokenize(text, fileName, result.diagnostics);
    Parser parser(std::move(tokens), result.diagnostics);
    result.model = parser.run();
    return result;
}

} // namespace depcol
