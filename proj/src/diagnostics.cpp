#include "depcol/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace depcol {

bool hasErrors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
        return d.level == DiagnosticLevel::Error;
    });
}

std::string formatDiagnostic(const Diagnostic& diagnostic) {
    std::ostringstream out;
    out << (diagnostic.level == DiagnosticLevel::Error ? "error" : "warning") << ' '
        << diagnostic.code << ": " << diagnostic.message;
    if (!diagnostic.location.file.empty()) {
        out << " (" << diagnostic.location.file << ':' << diagnostic.location.line << ':'
            << diagnostic.location.column << ')';
    }
    return out.str();
}

} // namespace depcol
