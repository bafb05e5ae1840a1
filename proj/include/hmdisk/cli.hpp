#pragma once

#include <cstdint>
#include <string>

namespace hmdisk {

// Command front-ends. Each returns the process exit code:
//   0 success, 1 verification failure, 2 input error.
// Input errors print a one-line JSON diagnostic on stderr; timing and
// warnings also go to stderr, so the payload (stdout or --out file) is a
// pure function of the inputs and seed.

struct EstimateArgs {
    std::string scene_path;
    int k = 1;
    long samples = 100000;
    double epsilon = 1e-4;
    std::uint64_t seed = 0;
    double resolution = 0.005; // component-check grid
    std::string format = "csv"; // csv | json
    std::string out;            // empty -> stdout
};
int cmd_estimate(const EstimateArgs& a);

struct CheckBoundArgs {
    std::string scene_path;
    long samples = 100000;
    double epsilon = 1e-4;
    std::uint64_t seed = 0;
    double resolution = 0.005;
    std::string format = "csv";
    std::string out;
};
int cmd_check_bound(const CheckBoundArgs& a);

struct IdentitiesArgs {
    std::string theta_grid = "0.05:3.09:0.05"; // start:stop:step, radians
    double tol = 0.0;                          // 0 -> per-family defaults
};
int cmd_identities(const IdentitiesArgs& a);

struct SearchArgs {
    int n = 3;
    double rho = 0.5;
    std::string objective = "max_omega"; // mean_psi | max_omega
    long budget = 400;
    std::uint64_t seed = 0;
    long samples = 20000;
    double epsilon = 1e-4;
    std::string out;
};
int cmd_search(const SearchArgs& a);

struct RenderArgs {
    std::string scene_path;
    std::string out;
};
int cmd_render(const RenderArgs& a);

} // namespace hmdisk
