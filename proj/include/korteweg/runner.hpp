#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace korteweg {

// Parsed command line of the hkwave tool.
struct CliOptions {
    std::string command;
    std::string config_path;  // empty: built-in defaults only
    std::string out_dir = ".";
    std::vector<std::string> overrides;  // "section.key=value"
    bool quiet = false;
};

// Runs one command and writes the key=value summary (suppressed by quiet;
// error lines always appear). Returns the process exit code:
// 0 success, 1 configuration error, 2 numerical failure.
int run(const CliOptions& opt, std::ostream& summary);

// Scattering-curve file name, pml_<u1>_<u2>_n1_<xi>_n2_<xi>.csv; the moduli
// print in shortest form, the angle with two decimals minus one trailing zero.
std::string scatter_csv_name(double u1, double u2, double xi);

const char* usage();

}  // namespace korteweg
