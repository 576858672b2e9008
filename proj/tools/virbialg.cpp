// Command-line front end: `virbialg run <script> [--window N]
// [--budget K] [--out FILE]` and `virbialg selfcheck`.

#include "virbialg/virbialg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic toolkit for generalized Virasoro-like Lie bialgebras"};
    app.require_subcommand(1);

    std::string script_path, out_path;
    virbialg::RunConfig cfg;

    CLI::App* run = app.add_subcommand("run", "run a script and print its certificate");
    run->add_option("script", script_path, "script file")->required();
    run->add_option("--window", cfg.window_radius, "window box radius (default 5)");
    run->add_option("--budget", cfg.probe_budget, "probe budget (default 64)");
    run->add_option("--out", out_path, "write the certificate to a file");

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the embedded invariant suite");
    selfcheck->add_option("--window", cfg.window_radius, "window box radius (default 5)");
    selfcheck->add_option("--budget", cfg.probe_budget, "probe budget (default 64)");

    CLI11_PARSE(app, argc, argv);

    if (selfcheck->parsed()) return virbialg::run_selfcheck(std::cout, cfg) ? 0 : 1;

    std::ifstream in(script_path);
    if (!in) {
        std::cerr << "error: cannot open " << script_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        virbialg::Certificate cert = virbialg::run_script_text(buf.str(), cfg);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            out << cert.text;
        } else {
            std::cout << cert.text;
        }
        return cert.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
