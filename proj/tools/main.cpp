#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "icotrace/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "icotrace: finite character theory, Satake-side Hecke operators and smoothed\n"
        "Rankin-Selberg sums for the icosahedral tower, with trace-identity certification"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", fixture_dir = "data/fixtures";
    bool write_fixture = false;
    app.add_option("--config", config_path, "scenario config file");
    app.add_option("--out", out_dir, "report output directory");
    app.add_option("--fixture", fixture_dir, "golden fixture directory");
    app.add_flag("--write-fixture", write_fixture, "write the fixture instead of diffing");

    for (const char* name :
         {"chartab", "branch", "fibers", "satake", "smoothsum", "trace-identity"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    icotrace::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = icotrace::RunConfig::parse_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string command = app.get_subcommands().at(0)->get_name();
    return icotrace::run_command(command, cfg, out_dir, fixture_dir, write_fixture, std::cout);
}
