#pragma once

// Tokenizer for DepCoL model text, internal to the parser.

#include <string>
#include <string_view>
#include <vector>

#include "depcol/diagnostics.hpp"

namespace depcol::detail {

enum class TokenType {
    Word,      // identifier / pattern / keyword candidate
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semicolon,
    End,
};

struct Token {
    TokenType type = TokenType::End;
    std::string text;    // as written
    std::string lowered; // lowercase copy, used for keyword matching
    SourceLocation location;
};

/// Splits model text into tokens. Line comments (// to end of line) and
/// whitespace are skipped; unexpected characters produce a diagnostic and
/// are dropped so parsing can continue.
std::vector<Token> tokenize(std::string_view text,
                            const std::string& fileName,
                            std::vector<Diagnostic>& diagnostics);

} // namespace depcol::detail
