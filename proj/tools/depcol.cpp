// Command line front end: `depcol check` and `depcol gen-base`.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "depcol/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"depcol - dependency constraint checker for plugin workspaces"};
    app.require_subcommand(1);

    depcol::RunConfig cfg;
    std::string format = "text";
    std::string failOn = "warning";
    std::string defaultProperty = "allowed";
    bool noOptionalDeps = false;

    CLI::App* check = app.add_subcommand(
        "check", "Check a workspace against a dependency model");
    check->add_option("--model", cfg.modelPath, "Dependency model file (.depcol)")
        ->required();
    check->add_option("--workspace", cfg.workspaceRoots,
                      "Workspace root directory (repeatable)")
        ->required();
    check->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("DEPCOL_FORMAT");
    check->add_option("--fail-on", failOn,
                      "Lowest severity that forces exit code 1")
        ->check(CLI::IsMember({"critical", "error", "warning"}));
    check->add_flag("--no-optional-deps", noOptionalDeps,
                    "Ignore Require-Bundle entries marked resolution:=optional");
    check->add_option("--default", defaultProperty,
                      "Property of dependencies no constraint covers")
        ->check(CLI::IsMember(
            {"allowed", "forbidden-critical", "forbidden-error", "forbidden-warning"}));
    std::string pluginFilter;
    check->add_option("--plugin", pluginFilter, "Check a single plugin only");

    CLI::App* genBase = app.add_subcommand(
        "gen-base", "Print base declarations covering a workspace");
    genBase->add_option("--workspace", cfg.workspaceRoots,
                        "Workspace root directory (repeatable)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.format = depcol::parseOutputFormat(format).value_or(depcol::OutputFormat::Text);
    cfg.failOn = depcol::parseFailOn(failOn).value_or(depcol::ReportSeverity::Warning);
    cfg.defaultProperty =
        depcol::parseDefaultProperty(defaultProperty).value_or(depcol::Property::Allowed);
    cfg.includeOptional = !noOptionalDeps;
    if (!pluginFilter.empty()) {
        cfg.pluginFilter = pluginFilter;
    }

    if (check->parsed()) {
        return depcol::runCheck(cfg, std::cout, std::cerr);
    }
    if (genBase->parsed()) {
        return depcol::runGenBase(cfg, std::cout, std::cerr);
    }
    return 2;
}
