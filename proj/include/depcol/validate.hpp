#pragma once

#include <vector>

#include "depcol/ast.hpp"
#include "depcol/diagnostics.hpp"

namespace depcol {

/// Context-condition checks over a parsed model:
///   CC1  referenced feature name missing from the feature base
///   CC2  referenced plugin name missing from the plugin base
///   CC3  reference to an undeclared group
///   CC4  group member of the wrong kind (feature group inside a plugin
///        group or vice versa)
///   CC5  cyclic group inclusion
///   CC6  duplicate group name within one kind
///   CC7  redefinition of the builtin plugin group ALL
///   CC8  severity annotation on tolerate/allow
/// Pure: identical models yield identical diagnostic lists.
std::vector<Diagnostic> validateModel(const DependencyModel& model);

} // namespace depcol
