#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "depcol/ast.hpp"
#include "depcol/diagnostics.hpp"

namespace depcol {

struct ParseResult {
    DependencyModel model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !hasErrors(diagnostics); }
};

/// Parse DepCoL model text. Recovers from syntax errors where possible so a
/// single run reports every problem; the model is only meaningful when ok().
/// Keywords match case-insensitively; statement ordinals are assigned
/// globally in textual order.
ParseResult parseModel(std::string_view text, std::string fileName);

} // namespace depcol
