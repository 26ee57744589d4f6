#include "depcol/pattern.hpp"

namespace depcol {

namespace {

// Anchored wildcard match with backtracking over '*' positions.
bool wildcardMatch(std::string_view pattern, std::string_view name) {
    std::size_t p = 0;
    std::size_t n = 0;
    std::size_t starPos = std::string_view::npos;
    std::size_t retry = 0;
    while (n < name.size()) {
        if (p < pattern.size() && pattern[p] == '*') {
            starPos = p++;
            retry = n;
        } else if (p < pattern.size() && pattern[p] == name[n]) {
            ++p;
            ++n;
        } else if (starPos != std::string_view::npos) {
            p = starPos + 1;
            n = ++retry;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

} // namespace

CompiledPattern::CompiledPattern(NamePattern source) : source_(std::move(source)) {}

bool CompiledPattern::matches(std::string_view name) const {
    if (source_.isLiteral) {
        return name == source_.text;
    }
    return wildcardMatch(source_.text, name);
}

CompiledPattern compilePattern(const NamePattern& pattern) {
    return CompiledPattern(pattern);
}

} // namespace depcol
