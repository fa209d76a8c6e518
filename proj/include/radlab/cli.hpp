#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "radlab/ground_state.hpp"

namespace radlab {

// Everything a run needs, collected before any computation starts.
struct RunConfig {
    std::string command; // ground | sweep | entire | blowup | supinf | epsreg
    ProblemParams params;
    std::string format = "csv"; // csv | json
    std::string output;         // empty: stdout
    std::string config_path;    // key = value option file

    // sweep
    double gamma_min = 0.0, gamma_max = 0.0;
    int steps = 9;
    // entire
    double mu = 1.0;
    std::vector<double> radii; // empty: 64 log-spaced points in [0, 10 r*]
    int radii_count = 64;
    double radii_span = 10.0; // multiples of r*
    // probes
    double A0 = 1.0;
    double R = 1.0;
    int k_min = 0, k_max = 12;     // mu = 2^k when mu_list is empty
    std::vector<double> mu_list;   // explicit grid
    double C_used = -1.0;          // < 0: use 2 C_star
    std::vector<double> eps_frac = {0.25, 0.5, 0.9, 0.99};
};

// Exit code 0 on success, 1 when the computation fails (diagnostic JSON on
// err), 2 on bad arguments or precondition violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace radlab
