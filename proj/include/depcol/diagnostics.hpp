#pragma once

#include <string>
#include <vector>

namespace depcol {

/// Position inside a source file. Lines and columns are 1-based.
struct SourceLocation {
    std::string file;
    int line = 1;
    int column = 1;

    bool operator==(const SourceLocation&) const = default;
};

enum class DiagnosticLevel { Error, Warning };

/// A single reported problem. `code` is a short stable identifier
/// (e.g. "CC1", "W-MISSING-FEATURE") that tools and tests key on.
struct Diagnostic {
    DiagnosticLevel level = DiagnosticLevel::Error;
    std::string code;
    std::string message;
    SourceLocation location;

    bool operator==(const Diagnostic&) const = default;
};

bool hasErrors(const std::vector<Diagnostic>& diagnostics);

/// "error CC1: message (file:line:col)" - the one-line human form.
std::string formatDiagnostic(const Diagnostic& diagnostic);

} // namespace depcol
