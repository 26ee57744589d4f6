#include <map>
#include <random>

#include "doctest.h"

#include "depcol/engine.hpp"
#include "depcol/parser.hpp"
#include "depcol/pattern.hpp"
#include "depcol/validate.hpp"
#include "support/random_models.hpp"

using namespace depcol;
using namespace depcol::test;

namespace {

Property effectiveProperty(const std::map<std::string, PluginEvaluation>& results,
                           const PluginPair& pair,
                           const EngineConfig& config) {
    auto it = results.find(pair.source);
    if (it == results.end()) {
        return config.defaultProperty;
    }
    const Verdict* verdict = it->second.relation.find(pair);
    return verdict != nullptr ? verdict->property : config.defaultProperty;
}

} // namespace

TEST_CASE("wildcard matcher agrees with a regex-based matcher") {
    std::mt19937 rng(7001);
    const std::vector<std::string> names = {
        "",     "a",        "alpha",    "alpha.ui", "beta.core", "a.b.c",
        "x.ui", "uialpha",  "core",     "alpha.ui.extra",
    };
    for (int i = 0; i < 2000; ++i) {
        // Random pattern over {a, l, ., *}, length 0..6.
        std::string patternText;
        int length = randomInt(rng, 1, 6);
        const std::string alphabet = "al.*u";
        for (int c = 0; c < length; ++c) {
            patternText.push_back(
                alphabet[static_cast<std::size_t>(randomInt(rng, 0, 4))]);
        }
        if (patternText.front() == '.') {
            patternText.front() = 'a';
        }
        NamePattern pattern;
        pattern.text = patternText;
        pattern.isLiteral = patternText.find('*') == std::string::npos;
        CompiledPattern compiled = compilePattern(pattern);
        for (const std::string& name : names) {
            CHECK_MESSAGE(compiled.matches(name) == regexWildcardMatch(patternText, name),
                          "pattern=", patternText, " name=", name);
        }
    }
}

TEST_CASE("recursive group resolution equals the flattened single-pass route") {
    std::mt19937 rng(7002);
    for (int i = 0; i < 200; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        Resolver resolver(instance.model, instance.workspace);
        const Universe& universe = resolver.universe();
        for (const GroupDecl& group : instance.model.groups) {
            if (group.kind == ElementKind::FeatureGroup) {
                CHECK(resolver.featureGroup(group.name) ==
                      singlePassResolve(instance.model, group.name,
                                        ElementKind::FeatureGroup,
                                        universe.featureNames));
            } else {
                CHECK(resolver.pluginGroup(group.name) ==
                      singlePassResolve(instance.model, group.name,
                                        ElementKind::PluginGroup,
                                        universe.pluginNames));
            }
        }
    }
}

TEST_CASE("adding a member never shrinks a group's resolution") {
    std::mt19937 rng(7003);
    for (int i = 0; i < 200; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        if (instance.model.groups.empty()) {
            continue;
        }
        std::size_t index = static_cast<std::size_t>(
            randomInt(rng, 0, static_cast<int>(instance.model.groups.size()) - 1));
        const GroupDecl& group = instance.model.groups[index];
        NameSet before = group.kind == ElementKind::FeatureGroup
                             ? resolveFeatureGroup(group.name, instance.model)
                             : resolvePluginGroup(group.name, instance.model);

        DependencyModel grown = instance.model;
        GroupMember member;
        member.value = NamePattern{pick(rng, kPatternPool), false};
        grown.groups[index].members.push_back(member);
        NameSet after = group.kind == ElementKind::FeatureGroup
                            ? resolveFeatureGroup(group.name, grown)
                            : resolvePluginGroup(group.name, grown);

        for (const std::string& name : before) {
            CHECK(after.count(name) == 1);
        }
    }
}

TEST_CASE("reverse traversal matches the forward-scan reference on random instances") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 300; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        Resolver resolver(instance.model, instance.workspace);
        auto results = evaluateAll(instance.model, resolver, instance.graph,
                                   instance.config);
        auto reference = referenceEvaluate(instance.model, resolver, instance.graph,
                                           instance.config);
        for (const auto& [source, targets] : instance.graph.edges) {
            for (const std::string& target : targets) {
                PluginPair pair{source, target};
                CHECK_MESSAGE(effectiveProperty(results, pair, instance.config) ==
                                  reference.at(pair),
                              "instance ", i, " pair (", source, ", ", target, ")\n",
                              instance.modelText);
            }
        }
    }
}

TEST_CASE("structural invariants hold on random instances") {
    std::mt19937 rng(4243);
    for (int i = 0; i < 300; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        Resolver resolver(instance.model, instance.workspace);
        auto results = evaluateAll(instance.model, resolver, instance.graph,
                                   instance.config);
        auto statements = statementsInOrder(instance.model);

        for (const auto& [plugin, evaluation] : results) {
            // Disjoint partitions: each pair appears exactly once overall.
            std::set<PluginPair> seen;
            for (const Verdict& verdict : evaluation.relation.entries()) {
                CHECK(seen.insert(verdict.pair).second);
                CHECK(instance.graph.hasEdge(verdict.pair.source, verdict.pair.target));
                CHECK(verdict.pair.source == plugin);
            }

            for (const RefinementEvent& event : evaluation.refinements) {
                CHECK(event.refinerOrdinal > event.refinedOrdinal);
                CHECK_FALSE(event.witnessPairs.empty());
                const auto& refiner = statements[static_cast<std::size_t>(
                    event.refinerOrdinal)];
                const auto& refined = statements[static_cast<std::size_t>(
                    event.refinedOrdinal)];
                auto refinerPairs = pairsOf(refiner.first->subject, *refiner.second,
                                            resolver);
                auto refinedPairs = pairsOf(refined.first->subject, *refined.second,
                                            resolver);
                for (const PluginPair& witness : event.witnessPairs) {
                    CHECK(refinerPairs.count(witness) == 1);
                    CHECK(refinedPairs.count(witness) == 1);
                    CHECK(instance.graph.hasEdge(witness.source, witness.target));
                }
            }
        }
    }
}

TEST_CASE("single-plugin evaluation is the slice of the full evaluation") {
    std::mt19937 rng(4244);
    for (int i = 0; i < 100; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        Resolver resolver(instance.model, instance.workspace);
        auto results = evaluateAll(instance.model, resolver, instance.graph,
                                   instance.config);
        for (const auto& [plugin, expected] : results) {
            PluginEvaluation single = evaluatePlugin(plugin, instance.model, resolver,
                                                     instance.graph, instance.config);
            REQUIRE(single.relation.size() == expected.relation.size());
            for (const Verdict& verdict : expected.relation.entries()) {
                const Verdict* got = single.relation.find(verdict.pair);
                REQUIRE(got != nullptr);
                CHECK(got->property == verdict.property);
            }
            CHECK(single.refinements == expected.refinements);
        }
    }
}

TEST_CASE("generated models parse deterministically and keep textual order") {
    std::mt19937 rng(4245);
    for (int i = 0; i < 100; ++i) {
        GeneratedInstance instance = generateInstance(rng);
        ParseResult again = parseModel(instance.modelText, "generated.depcol");
        REQUIRE(again.ok());
        CHECK(again.model == instance.model);

        auto ordered = statementsInOrder(again.model);
        for (std::size_t s = 1; s < ordered.size(); ++s) {
            const SourceLocation& before = ordered[s - 1].second->location;
            const SourceLocation& after = ordered[s].second->location;
            CHECK((before.line < after.line ||
                   (before.line == after.line && before.column < after.column)));
        }
    }
}
