#pragma once

#include <string_view>

#include "depcol/ast.hpp"

namespace depcol {

/// Anchored whole-name matcher for a NamePattern. `*` matches any run of
/// characters (including none); everything else is literal. Matching is
/// total and deterministic for any input string.
class CompiledPattern {
public:
    explicit CompiledPattern(NamePattern source);

    bool matches(std::string_view name) const;
    const NamePattern& source() const { return source_; }

private:
    NamePattern source_;
};

CompiledPattern compilePattern(const NamePattern& pattern);

} // namespace depcol
