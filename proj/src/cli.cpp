#include "hmdisk/cli.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <vector>

#include <json.hpp>

#include "hmdisk/bound.hpp"
#include "hmdisk/conformal.hpp"
#include "hmdisk/error.hpp"
#include "hmdisk/harmonic.hpp"
#include "hmdisk/render.hpp"
#include "hmdisk/scene.hpp"
#include "hmdisk/search.hpp"

namespace hmdisk {

namespace {
using Json = nlohmann::ordered_json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_payload(const std::string& out, const std::string& payload) {
    if (out.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + out + "' for writing");
    f.write(payload.data(), std::streamsize(payload.size()));
    if (!f) throw Error(ErrorCode::ParseError, "failed writing '" + out + "'");
}

void log_line(const std::string& s) { std::fprintf(stderr, "%s\n", s.c_str()); }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        Json diag{{"error", to_string(e.code())}, {"message", e.what()}};
        log_line(diag.dump());
        return 2;
    } catch (const std::exception& e) {
        Json diag{{"error", "InternalError"}, {"message", e.what()}};
        log_line(diag.dump());
        return 2;
    }
}

void warn_aborts(const Estimate& e, int k) {
    if (e.samples > 0 && double(e.aborted) / double(e.samples) > 1e-4)
        log_line("warning: component " + std::to_string(k) + ": " + std::to_string(e.aborted) +
                 " of " + std::to_string(e.samples) + " walks hit the step limit");
}

// JSON forbids non-finite numbers; the +inf sentinel becomes the string "inf"
Json json_real(double v) {
    if (std::isfinite(v)) return v;
    return num(v);
}

Json estimate_json(const Estimate& e) {
    return Json{{"mean", e.mean},       {"std_error", e.std_error},
                {"samples", e.samples}, {"hit_e", e.hit_e},
                {"hit_circle", e.hit_circle}, {"aborted", e.aborted}};
}

std::string estimate_csv_row(int k, const Estimate& e) {
    return std::to_string(k) + "," + num(e.mean) + "," + num(e.std_error) + "," +
           std::to_string(e.samples) + "," + std::to_string(e.hit_e) + "," +
           std::to_string(e.hit_circle) + "," + std::to_string(e.aborted) + "\n";
}

constexpr const char* kEstimateHeader = "k,mean,std_error,samples,hit_e,hit_circle,aborted\n";

void check_format(const std::string& f) {
    if (f != "csv" && f != "json")
        throw Error(ErrorCode::ParseError, "format must be 'csv' or 'json', got '" + f + "'");
}

Configuration load_valid_configuration(const std::string& path, double resolution) {
    const SceneFile scene = load_scene(path);
    Configuration cfg = scene_to_configuration(scene);
    const auto v = verify_configuration(cfg, resolution);
    if (!v.ok)
        throw Error(ErrorCode::DomainError, "scene '" + path + "' is not a valid decomposition: " + v.reason);
    return cfg;
}

Objective parse_objective(std::string s) {
    for (char& c : s) {
        if (c == '-') c = '_';
        c = char(std::tolower((unsigned char)c));
    }
    if (s == "mean_psi") return Objective::MEAN_PSI;
    if (s == "max_omega") return Objective::MAX_OMEGA;
    throw Error(ErrorCode::ParseError, "objective must be 'mean_psi' or 'max_omega', got '" + s + "'");
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3)
        throw Error(ErrorCode::ParseError, "theta grid must be start:stop:step, got '" + spec + "'");
    if (!(step > 0.0) || !(stop >= start))
        throw Error(ErrorCode::ParseError, "theta grid needs step > 0 and stop >= start");
    std::vector<double> out;
    for (long i = 0;; ++i) {
        const double v = start + step * double(i);
        if (v > stop + step * 1e-9) break;
        out.push_back(v);
        if (i > 1000000) throw Error(ErrorCode::ParseError, "theta grid has too many points");
    }
    return out;
}
} // namespace

int cmd_estimate(const EstimateArgs& a) {
    return guarded([&] {
        Timer timer;
        check_format(a.format);
        Configuration cfg = load_valid_configuration(a.scene_path, a.resolution);
        if (a.k < 1 || a.k > cfg.n)
            throw Error(ErrorCode::DomainError,
                        "k must lie in [1, " + std::to_string(cfg.n) + "], got " + std::to_string(a.k));
        WosParams params;
        params.samples = a.samples;
        params.epsilon = a.epsilon;
        params.seed = a.seed;
        const Estimate e = wos_estimate(cfg, a.k, params);
        warn_aborts(e, a.k);

        std::string payload;
        if (a.format == "csv") {
            payload += "# command=estimate scene=" + a.scene_path + " k=" + std::to_string(a.k) +
                       " samples=" + std::to_string(a.samples) + " epsilon=" + num(a.epsilon) +
                       " seed=" + std::to_string(a.seed) + "\n";
            payload += kEstimateHeader;
            payload += estimate_csv_row(a.k, e);
        } else {
            Json j{{"command", "estimate"}, {"scene", a.scene_path},   {"k", a.k},
                   {"samples", a.samples},  {"epsilon", a.epsilon},    {"seed", a.seed},
                   {"estimate", estimate_json(e)}};
            payload = j.dump(2) + "\n";
        }
        write_payload(a.out, payload);
        log_line("# wall_time_s=" + num(timer.seconds()));
        return 0;
    });
}

int cmd_check_bound(const CheckBoundArgs& a) {
    return guarded([&] {
        Timer timer;
        check_format(a.format);
        Configuration cfg = load_valid_configuration(a.scene_path, a.resolution);
        WosParams params;
        params.samples = a.samples;
        params.epsilon = a.epsilon;
        params.seed = a.seed;
        const BoundReport rep = check_inequality(cfg, params);
        for (int k = 1; k <= cfg.n; ++k) warn_aborts(rep.omegas[k - 1], k);

        std::string payload;
        if (a.format == "csv") {
            payload += "# command=check-bound scene=" + a.scene_path + " samples=" +
                       std::to_string(a.samples) + " epsilon=" + num(a.epsilon) +
                       " seed=" + std::to_string(a.seed) + "\n";
            payload += kEstimateHeader;
            for (int k = 1; k <= cfg.n; ++k) payload += estimate_csv_row(k, rep.omegas[k - 1]);
            payload += "\nquantity,value\n";
            payload += "n," + std::to_string(cfg.n) + "\n";
            payload += "rho," + num(cfg.rho) + "\n";
            payload += "lhs," + num(rep.lhs) + "\n";
            payload += "lhs_std_error," + num(rep.lhs_std_error) + "\n";
            payload += "rhs," + num(rep.rhs) + "\n";
            payload += "margin," + num(rep.margin) + "\n";
            payload += std::string("verdict,") + to_string(rep.verdict) + "\n";
        } else {
            Json omegas = Json::array();
            for (const auto& e : rep.omegas) omegas.push_back(estimate_json(e));
            Json j{{"command", "check-bound"},
                   {"scene", a.scene_path},
                   {"samples", a.samples},
                   {"epsilon", a.epsilon},
                   {"seed", a.seed},
                   {"n", cfg.n},
                   {"rho", cfg.rho},
                   {"omegas", std::move(omegas)},
                   {"lhs", json_real(rep.lhs)},
                   {"lhs_std_error", rep.lhs_std_error},
                   {"rhs", rep.rhs},
                   {"margin", json_real(rep.margin)},
                   {"verdict", to_string(rep.verdict)}};
            payload = j.dump(2) + "\n";
        }
        write_payload(a.out, payload);
        log_line("# wall_time_s=" + num(timer.seconds()));
        return rep.verdict == Verdict::VIOLATION_CANDIDATE ? 1 : 0;
    });
}

namespace {
struct FamilyReport {
    std::string name;
    long cases = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    std::string note;
    std::vector<std::string> failures;

    void add(const std::string& label, double residual, double case_tol) {
        ++cases;
        if (residual > max_residual) max_residual = residual;
        if (!(residual <= case_tol))
            failures.push_back("  FAIL " + label + " residual=" + num(residual) +
                               " tol=" + num(case_tol));
    }

    bool print(std::string& out) const {
        out += name + ": " + std::to_string(cases) + " cases, max residual " + num(max_residual) +
               ", tol " + num(tol) + (failures.empty() ? ": PASS\n" : ": FAIL\n");
        if (!note.empty()) out += "  " + note + "\n";
        const std::size_t shown = std::min<std::size_t>(failures.size(), 25);
        for (std::size_t i = 0; i < shown; ++i) out += failures[i] + "\n";
        if (failures.size() > shown)
            out += "  ... and " + std::to_string(failures.size() - shown) + " more\n";
        return failures.empty();
    }
};
} // namespace

int cmd_identities(const IdentitiesArgs& a) {
    return guarded([&] {
        Timer timer;
        if (a.tol < 0.0) throw Error(ErrorCode::ParseError, "tol must be >= 0");
        const bool tol_override = a.tol > 0.0;
        const auto tol_for = [&](double family_default) {
            return tol_override ? a.tol : family_default;
        };
        const std::vector<double> thetas = parse_grid(a.theta_grid);

        std::string out;
        bool ok = true;

        {
            FamilyReport fam;
            fam.name = "integral identity (quadrature vs closed form)";
            fam.tol = tol_for(1e-10);
            for (double theta : thetas) {
                const auto r = integral_identity_check(theta);
                fam.add("theta=" + num(theta), std::fabs(r.quadrature - r.closed_form), fam.tol);
            }
            ok &= fam.print(out);
        }
        {
            FamilyReport fam;
            fam.name = "psi round trip";
            fam.tol = tol_for(1e-12);
            for (int i = 0; i < 1000; ++i) {
                const double x = 0.999 * double(i) / 999.0;
                fam.add("x=" + num(x), std::fabs(psi_inverse(psi(x)) - x), fam.tol);
            }
            ok &= fam.print(out);
        }
        {
            FamilyReport fam;
            fam.name = "equality closure (psi of the extremal measure vs -n log rho)";
            fam.tol = tol_for(1e-12);
            long floored = 0;
            double max_floor = 0.0;
            for (int n = 2; n <= 8; ++n)
                for (int i = 1; i <= 19; ++i) {
                    const double rho = 0.05 * double(i);
                    const double w = extremal_measure(n, rho);
                    // a double cannot carry omega* more precisely than half an
                    // ulp, and psi magnifies that by psi'(omega*)
                    const double floor_tol =
                        psi_prime(w) * (std::nextafter(w, 2.0) - w);
                    // an explicit --tol is taken literally; the defaults make
                    // room for what a double can actually represent
                    const double case_tol =
                        tol_override ? fam.tol : std::max(fam.tol, floor_tol);
                    if (floor_tol > fam.tol) {
                        ++floored;
                        max_floor = std::max(max_floor, floor_tol);
                    }
                    fam.add("n=" + std::to_string(n) + " rho=" + num(rho),
                            std::fabs(psi(w) + double(n) * std::log(rho)), case_tol);
                }
            if (floored > 0 && !tol_override)
                fam.note = "note: " + std::to_string(floored) +
                           " case(s) near measure 1 use the rounding floor psi'(x)*ulp(x), up to " +
                           num(max_floor);
            ok &= fam.print(out);
        }
        {
            FamilyReport fam;
            fam.name = "sector product (geometric mean vs 4r/n)";
            fam.tol = tol_for(1e-12);
            for (int n = 2; n <= 6; ++n)
                for (int i = 1; i <= 9; ++i) {
                    const double r = 0.1 * double(i);
                    const auto [lhs, rhs] = sector_product_check(n, r);
                    fam.add("n=" + std::to_string(n) + " r=" + num(r), std::fabs(lhs - rhs),
                            fam.tol);
                }
            ok &= fam.print(out);
        }
        {
            FamilyReport fam;
            fam.name = "radial chain (sector integral vs -(n/4) log rho vs psi side)";
            fam.tol = tol_for(1e-12);
            for (int n = 2; n <= 6; ++n)
                for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                    const auto c = my3_chain_check(n, rho);
                    const double residual = std::max(std::fabs(c.radial_integral - c.bound),
                                                     std::fabs(c.psi_side - c.bound));
                    fam.add("n=" + std::to_string(n) + " rho=" + num(rho), residual, fam.tol);
                }
            ok &= fam.print(out);
        }

        out += ok ? "all identity checks passed\n" : "identity checks FAILED\n";
        write_payload("", out);
        log_line("# wall_time_s=" + num(timer.seconds()));
        return ok ? 0 : 1;
    });
}

int cmd_search(const SearchArgs& a) {
    return guarded([&] {
        Timer timer;
        const Objective obj = parse_objective(a.objective);
        WosParams params;
        params.samples = a.samples;
        params.epsilon = a.epsilon;
        const SearchResult res = minimize(a.n, a.rho, obj, a.budget, a.seed, params);

        std::string payload;
        payload += "# command=search n=" + std::to_string(a.n) + " rho=" + num(a.rho) +
                   " objective=" + to_string(obj) + " budget=" + std::to_string(a.budget) +
                   " seed=" + std::to_string(a.seed) + " samples=" + std::to_string(a.samples) +
                   " epsilon=" + num(a.epsilon) + "\n";
        payload += "evaluation,objective\n";
        for (const auto& [eval_index, value] : res.history)
            payload += std::to_string(eval_index) + "," + num(value) + "\n";
        payload += "# evaluations=" + std::to_string(res.evaluations) + "\n";
        payload += "# best_objective=" + num(res.best_objective) + "\n";
        payload += "# best_objective_std_error=" + num(res.best_objective_std_error) + "\n";
        write_payload(a.out, payload);
        log_line("# wall_time_s=" + num(timer.seconds()));
        return 0;
    });
}

int cmd_render(const RenderArgs& a) {
    return guarded([&] {
        const SceneFile scene = load_scene(a.scene_path);
        const Configuration cfg = scene_to_configuration(scene);
        write_payload(a.out, render_scene_svg(cfg));
        return 0;
    });
}

} // namespace hmdisk
