#include <iostream>

#include "CLI11.hpp"
#include "korteweg/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Helmholtz-Korteweg wave toolbox: dispersion, reflection, scattering, pulses"};
    korteweg::CliOptions opt;
    app.add_option("command", opt.command,
                   "dispersion | reflect | transmit | scatter-mie | scatter-solve | "
                   "solve | pulse | specfun-check")
        ->required();
    app.add_option("--config", opt.config_path, "configuration file ([section] key = value)");
    app.add_option("--out", opt.out_dir, "output directory (created if missing)");
    app.add_option("--override", opt.overrides, "section.key=value, repeatable");
    app.add_flag("--quiet", opt.quiet, "suppress the key=value summary");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad usage is a configuration error
    }
    return korteweg::run(opt, std::cout);
}
