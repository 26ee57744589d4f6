#include <map>

#include "doctest.h"
#include "json.hpp"

#include "depcol/parser.hpp"
#include "depcol/report.hpp"
#include "depcol/validate.hpp"
#include "support/fixtures.hpp"

using namespace depcol;
using namespace depcol::test;

namespace {

DependencyModel parseValid(const std::string& text) {
    ParseResult result = parseModel(text, "rep.depcol");
    REQUIRE(result.ok());
    REQUIRE_FALSE(hasErrors(validateModel(result.model)));
    return result.model;
}

Workspace makeWorkspace(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& pluginEdges,
    const std::vector<std::pair<std::string, std::set<std::string>>>& features = {}) {
    Workspace ws;
    for (const auto& [name, targets] : pluginEdges) {
        PluginManifest manifest;
        manifest.symbolicName = name;
        manifest.sourcePath = "/ws/" + name + "/META-INF/MANIFEST.MF";
        for (const std::string& target : targets) {
            manifest.requiredBundles.push_back({target, false});
        }
        ws.plugins.emplace(name, std::move(manifest));
    }
    for (const auto& [featureId, plugins] : features) {
        ws.features.emplace(featureId, FeatureDefinition{featureId, plugins, ""});
    }
    ws.rebuildFeatureIndex();
    return ws;
}

CheckReport reportFor(const DependencyModel& model, const Workspace& ws,
                      EngineConfig config = {}) {
    DependencyGraph graph = buildDependencyGraph(ws, config.includeOptional);
    Resolver resolver(model, ws);
    auto results = evaluateAll(model, resolver, graph, config);
    return buildReport(results, model, ws, {});
}

} // namespace

TEST_CASE("feature-to-feature verdicts merge into one message listing targets") {
    DependencyModel model = parseValid(R"(declare featurebase { f.ui; f.db; }
feature f.ui {
    forbid dependency to feature f.db;
}
)");
    Workspace ws = makeWorkspace({{"a1", {"p.db.base", "p.db.ext"}},
                                  {"p.db.base", {}},
                                  {"p.db.ext", {}}},
                                 {{"f.ui", {"a1"}},
                                  {"f.db", {"p.db.base", "p.db.ext"}}});
    CheckReport report = reportFor(model, ws);
    REQUIRE(report.messages.size() == 1);
    const ViolationMessage& message = report.messages[0];
    CHECK(message.text ==
          "Dependency from feature f.ui to feature f.db is forbidden. "
          "Violating plugins: [p.db.base, p.db.ext].");
    CHECK(message.severity == ReportSeverity::Error);
    CHECK(message.violatingPairs ==
          std::vector<PluginPair>{{"a1", "p.db.base"}, {"a1", "p.db.ext"}});
}

TEST_CASE("plugin-to-plugin tolerated message") {
    DependencyModel model = parseValid(R"(declare pluginbase { p2; p3; }
plugin p2 {
    tolerate dependency to plugin p3;
}
)");
    Workspace ws = makeWorkspace({{"p2", {"p3"}}, {"p3", {}}});
    CheckReport report = reportFor(model, ws);
    REQUIRE(report.messages.size() == 1);
    CHECK(report.messages[0].text ==
          "Dependency from plugin p2 to plugin p3 is tolerated.");
    CHECK(report.messages[0].verb == "tolerated");
    CHECK(report.messages[0].severity == ReportSeverity::Warning);
}

TEST_CASE("no verdicts aggregate to no messages") {
    DependencyModel model = parseValid("declare pluginbase { p1; }\n");
    Workspace ws = makeWorkspace({{"p1", {}}});
    CheckReport report = reportFor(model, ws);
    CHECK(report.messages.empty());
    CHECK(renderText(report) == "No dependency violations found.\n");
}

TEST_CASE("headers carry counts and appear in severity order") {
    // 2 critical, 10 error, 1 warning across thirteen constraints.
    std::string modelText = "declare pluginbase {\n    src0;";
    for (int i = 1; i < 13; ++i) {
        modelText += "\n    src" + std::to_string(i) + ";";
    }
    modelText += "\n    tgt;\n}\n";
    for (int i = 0; i < 13; ++i) {
        std::string subject = "src" + std::to_string(i);
        modelText += "plugin " + subject + " {\n";
        if (i < 2) {
            modelText += "    [critical] forbid dependency to plugin tgt;\n";
        } else if (i < 12) {
            modelText += "    forbid dependency to plugin tgt;\n";
        } else {
            modelText += "    tolerate dependency to plugin tgt;\n";
        }
        modelText += "}\n";
    }
    DependencyModel model = parseValid(modelText);

    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (int i = 0; i < 13; ++i) {
        edges.push_back({"src" + std::to_string(i), {"tgt"}});
    }
    edges.push_back({"tgt", {}});
    Workspace ws = makeWorkspace(edges);

    CheckReport report = reportFor(model, ws);
    CHECK(report.summary.critical == 2);
    CHECK(report.summary.error == 10);
    CHECK(report.summary.warning == 1);

    std::string text = renderText(report);
    auto criticalPos = text.find("Dependency violations with severity critical (2)\n");
    auto errorPos = text.find("Dependency violations with severity error (10)\n");
    auto warningPos = text.find("Dependency violations with severity warning (1)\n");
    REQUIRE(criticalPos != std::string::npos);
    REQUIRE(errorPos != std::string::npos);
    REQUIRE(warningPos != std::string::npos);
    CHECK(criticalPos < errorPos);
    CHECK(errorPos < warningPos);
}

TEST_CASE("severities with no messages omit their header") {
    DependencyModel model = parseValid(R"(declare pluginbase { a; b; }
plugin a {
    tolerate dependency to plugin b;
}
)");
    Workspace ws = makeWorkspace({{"a", {"b"}}, {"b", {}}});
    std::string text = renderText(reportFor(model, ws));
    CHECK(text.find("severity warning (1)") != std::string::npos);
    CHECK(text.find("severity critical") == std::string::npos);
    CHECK(text.find("severity error") == std::string::npos);
}

TEST_CASE("messages are followed by the source plugin manifest paths") {
    DependencyModel model = parseValid(R"(declare pluginbase { a; b; }
plugin a {
    forbid dependency to plugin b;
}
)");
    Workspace ws = makeWorkspace({{"a", {"b"}}, {"b", {}}});
    std::string text = renderText(reportFor(model, ws));
    CHECK(text.find("  Dependency from plugin a to plugin b is forbidden.\n"
                    "    /ws/a/META-INF/MANIFEST.MF\n") != std::string::npos);
}

TEST_CASE("empty report renders the frozen empty JSON document") {
    CheckReport report;
    CHECK(renderJson(report) ==
          R"({"summary":{"critical":0,"error":0,"warning":0},"violations":[],"refinements":[],"diagnostics":[]})");
}

TEST_CASE("refinement walkthrough produces two violations in JSON") {
    DependencyModel model = parseValid(kRefinementModel);
    Workspace ws = makeWorkspace({{"p1", {"p4.ui", "p5.ui", "p6.i18n"}},
                                  {"p2", {}},
                                  {"p3", {}},
                                  {"p4.ui", {}},
                                  {"p5.ui", {}},
                                  {"p6.i18n", {}}});
    CheckReport report = reportFor(model, ws);

    auto doc = nlohmann::json::parse(renderJson(report));
    REQUIRE(doc["violations"].size() == 2);
    CHECK(doc["summary"]["critical"] == 0);
    CHECK(doc["summary"]["error"] == 1);
    CHECK(doc["summary"]["warning"] == 1);
    CHECK(doc["violations"][0]["severity"] == "error");
    CHECK(doc["violations"][0]["verb"] == "forbidden");
    CHECK(doc["violations"][0]["source"]["kind"] == "plugingroup");
    CHECK(doc["violations"][0]["source"]["name"] == "pg1");
    CHECK(doc["violations"][0]["violatingPairs"][0]["target"] == "p6.i18n");
    CHECK(doc["violations"][1]["severity"] == "warning");
    CHECK(doc["violations"][1]["verb"] == "tolerated");
    CHECK(doc["refinements"].size() == 3);
}

TEST_CASE("a report with one refinement serializes one entry") {
    CheckReport report;
    ReportRefinement refinement;
    refinement.refinerOrdinal = 2;
    refinement.refinedOrdinal = 0;
    refinement.pairs = {{"a", "b"}};
    report.refinements.push_back(refinement);

    auto doc = nlohmann::json::parse(renderJson(report));
    REQUIRE(doc["refinements"].size() == 1);
    CHECK(doc["refinements"][0]["refinerOrdinal"] == 2);
    CHECK(doc["refinements"][0]["refinedOrdinal"] == 0);
    CHECK(doc["refinements"][0]["pairs"][0]["source"] == "a");
}

TEST_CASE("text and JSON agree on counts and message multiset") {
    DependencyModel model = parseValid(kRefinementModel);
    Workspace ws = makeWorkspace({{"p1", {"p4.ui", "p5.ui", "p6.i18n"}},
                                  {"p2", {}},
                                  {"p3", {}},
                                  {"p4.ui", {}},
                                  {"p5.ui", {}},
                                  {"p6.i18n", {}}});
    CheckReport report = reportFor(model, ws);
    auto doc = nlohmann::json::parse(renderJson(report));
    std::string text = renderText(report);

    CHECK(doc["violations"].size() == report.messages.size());
    for (const ViolationMessage& message : report.messages) {
        CHECK(text.find(message.text) != std::string::npos);
    }
    int total = doc["summary"]["critical"].get<int>() +
                doc["summary"]["error"].get<int>() +
                doc["summary"]["warning"].get<int>();
    CHECK(total == static_cast<int>(report.messages.size()));
}

TEST_CASE("aggregation conserves the non-allowed verdict pairs") {
    DependencyModel model = parseValid(kRefinementModel);
    Workspace ws = makeWorkspace({{"p1", {"p4.ui", "p5.ui", "p6.i18n"}},
                                  {"p2", {}},
                                  {"p3", {}},
                                  {"p4.ui", {}},
                                  {"p5.ui", {}},
                                  {"p6.i18n", {}}});
    DependencyGraph graph = buildDependencyGraph(ws, true);
    Resolver resolver(model, ws);
    auto results = evaluateAll(model, resolver, graph, EngineConfig{});

    std::multiset<std::pair<std::string, std::string>> fromEngine;
    for (const auto& [plugin, evaluation] : results) {
        for (const Verdict& verdict : evaluation.relation.entries()) {
            if (violationSeverity(verdict.property)) {
                fromEngine.insert({verdict.pair.source, verdict.pair.target});
            }
        }
    }
    std::multiset<std::pair<std::string, std::string>> fromMessages;
    for (const ViolationMessage& message : aggregateMessages(results, model, ws)) {
        for (const PluginPair& pair : message.violatingPairs) {
            fromMessages.insert({pair.source, pair.target});
        }
    }
    CHECK(fromEngine == fromMessages);
}

TEST_CASE("rendering is byte-stable") {
    DependencyModel model = parseValid(kRefinementModel);
    Workspace ws = makeWorkspace({{"p1", {"p4.ui", "p5.ui", "p6.i18n"}},
                                  {"p2", {}},
                                  {"p3", {}},
                                  {"p4.ui", {}},
                                  {"p5.ui", {}},
                                  {"p6.i18n", {}}});
    CheckReport a = reportFor(model, ws);
    CheckReport b = reportFor(model, ws);
    CHECK(renderText(a) == renderText(b));
    CHECK(renderJson(a) == renderJson(b));
}

TEST_CASE("default-rule violations carry a null constraint in JSON") {
    DependencyModel model = parseValid("declare pluginbase { a; b; }\n");
    Workspace ws = makeWorkspace({{"a", {"b"}}, {"b", {}}});
    EngineConfig config;
    config.defaultProperty = Property::ErrorSeverity;
    CheckReport report = reportFor(model, ws, config);

    REQUIRE(report.messages.size() == 1);
    CHECK_FALSE(report.messages[0].constraintOrdinal.has_value());
    CHECK(report.messages[0].text ==
          "Dependency from plugin a to plugin b is forbidden.");

    auto doc = nlohmann::json::parse(renderJson(report));
    CHECK(doc["violations"][0]["constraintOrdinal"].is_null());
    CHECK(doc["violations"][0]["constraintLocation"].is_null());
}
