#include "lexer.hpp"

#include <cctype>

namespace depcol::detail {

namespace {

bool isWordChar(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-' || c == '*';
}

std::string toLower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

std::vector<Token> tokenize(std::string_view text,
                            const std::string& fileName,
                            std::vector<Diagnostic>& diagnostics) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;

    auto here = [&] { return SourceLocation{fileName, line, column}; };
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };
    auto push = [&](TokenType type, std::string tokenText, SourceLocation location) {
        Token token;
        token.type = type;
        token.lowered = toLower(tokenText);
        token.text = std::move(tokenText);
        token.location = std::move(location);
        tokens.push_back(std::move(token));
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(c);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                advance(text[i]);
            }
            continue;
        }
        SourceLocation start = here();
        switch (c) {
        case '{': push(TokenType::LBrace, "{", start); advance(c); continue;
        case '}': push(TokenType::RBrace, "}", start); advance(c); continue;
        case '[': push(TokenType::LBracket, "[", start); advance(c); continue;
        case ']': push(TokenType::RBracket, "]", start); advance(c); continue;
        case ';': push(TokenType::Semicolon, ";", start); advance(c); continue;
        default: break;
        }
        if (isWordChar(c)) {
            std::string word;
            while (i < text.size() && isWordChar(text[i])) {
                word.push_back(text[i]);
                advance(text[i]);
            }
            push(TokenType::Word, std::move(word), start);
            continue;
        }
        diagnostics.push_back({DiagnosticLevel::Error, "E-SYNTAX",
                               std::string("unexpected character '") + c + "'", start});
        advance(c);
    }

    Token end;
    end.type = TokenType::End;
    end.location = here();
    tokens.push_back(std::move(end));
    return tokens;
}

} // namespace depcol::detail
