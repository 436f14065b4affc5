#include "logmonoid/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace logmonoid;
    CLI::App app{"logmonoid: monoids, cones, fans and log blowups"};
    app.set_version_flag("--version", "0.1.0");

    CliOptions options;
    std::vector<std::string> files;
    std::string out_file;
    std::string characteristic = "0";

    std::string names;
    for (const auto& n : command_names()) names += (names.empty() ? "" : ", ") + n;
    app.add_option("command", options.command, "one of: " + names)->required();
    app.add_option("files", files, "input documents");
    app.add_option("--mode", options.mode, "pushout mode: presentation, fine or fs");
    app.add_option("--char", characteristic, "residue characteristic (0 or a prime)");
    app.add_option("--out", out_file, "write the result to this file");
    app.add_flag("--verify", options.verify, "re-run brute-force oracles on small inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (options.characteristic.set_str(characteristic, 10) != 0) {
        std::cerr << "error: --char expects an integer, got '" << characteristic << "'\n";
        return exit_usage;
    }
    std::optional<std::string> out;
    if (!out_file.empty()) out = out_file;
    return run_cli(options, files, out, std::cout, std::cerr);
}
