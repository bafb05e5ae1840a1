// Command line front end. Exit codes: 0 success, 1 verification failure
// (identity suite or a VIOLATION_CANDIDATE verdict), 2 input error.
#include <cstdio>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmdisk/cli.hpp"

int main(int argc, char** argv) {
    using namespace hmdisk;

    CLI::App app{"harmonic-measure decomposition toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    EstimateArgs est;
    auto* estimate = app.add_subcommand(
        "estimate", "estimate the harmonic measure of one complementary component");
    estimate->add_option("--scene", est.scene_path, "scene JSON file")->required();
    estimate->add_option("--k", est.k, "component index, 1-based");
    estimate->add_option("--samples", est.samples, "walk count");
    estimate->add_option("--epsilon", est.epsilon, "absorption shell width");
    estimate->add_option("--seed", est.seed, "stream seed");
    estimate->add_option("--resolution", est.resolution, "verification grid resolution");
    estimate->add_option("--format", est.format, "csv or json");
    estimate->add_option("--out", est.out, "write payload to file instead of stdout");
    estimate->callback([&] { rc = cmd_estimate(est); });

    CheckBoundArgs chk;
    auto* check = app.add_subcommand(
        "check-bound", "compare the mean-Psi functional against -n log rho");
    check->add_option("--scene", chk.scene_path, "scene JSON file")->required();
    check->add_option("--samples", chk.samples, "walks per component");
    check->add_option("--epsilon", chk.epsilon, "absorption shell width");
    check->add_option("--seed", chk.seed, "stream seed");
    check->add_option("--resolution", chk.resolution, "verification grid resolution");
    check->add_option("--format", chk.format, "csv or json");
    check->add_option("--out", chk.out, "write payload to file instead of stdout");
    check->callback([&] { rc = cmd_check_bound(chk); });

    IdentitiesArgs ids;
    auto* identities = app.add_subcommand(
        "identities", "run the closed-form identity suite");
    identities->add_option("--theta-grid", ids.theta_grid, "start:stop:step for the slit angle");
    identities->add_option("--tol", ids.tol, "override every family tolerance (0 = defaults)");
    identities->callback([&] { rc = cmd_identities(ids); });

    SearchArgs sea;
    auto* search = app.add_subcommand(
        "search", "minimize an objective over bent-spoke perturbations");
    search->add_option("--n", sea.n, "component count");
    search->add_option("--rho", sea.rho, "marked-point modulus");
    search->add_option("--objective", sea.objective, "mean_psi or max_omega");
    search->add_option("--budget", sea.budget, "objective evaluations");
    search->add_option("--seed", sea.seed, "search seed");
    search->add_option("--samples", sea.samples, "walks per component per evaluation");
    search->add_option("--epsilon", sea.epsilon, "absorption shell width");
    search->add_option("--out", sea.out, "write payload to file instead of stdout");
    search->callback([&] { rc = cmd_search(sea); });

    RenderArgs ren;
    auto* render = app.add_subcommand("render", "render a scene to SVG");
    render->add_option("--scene", ren.scene_path, "scene JSON file")->required();
    render->add_option("--out", ren.out, "write SVG to file instead of stdout");
    render->callback([&] { rc = cmd_render(ren); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        nlohmann::ordered_json diag{{"error", "ParseError"}, {"message", e.what()}};
        std::fprintf(stderr, "%s\n", diag.dump().c_str());
        return 2;
    }
    return rc;
}
