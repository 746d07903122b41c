#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycc/collapse.hpp"
#include "polycc/conditions.hpp"
#include "polycc/io.hpp"
#include "polycc/kernels.hpp"
#include "polycc/newtonian.hpp"
#include "polycc/solver.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace polycc;

twist parse_theta(const std::string& text, int n) {
    if (text == "0") return twist::zero();
    if (text == "pi-over-n") return twist::half_step();
    size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("theta must be 0, pi-over-n, or a radian value");
    }
    if (used != text.size())
        throw std::invalid_argument("theta must be 0, pi-over-n, or a radian value");
    return twist::from_radians(v, n);
}

grid_spec parse_grid(const std::string& text, const std::string& flag) {
    grid_spec g;
    size_t p1 = text.find(':');
    size_t p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument(flag + " must look like lo:hi:steps");
    try {
        g.lo = std::stod(text.substr(0, p1));
        g.hi = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        g.steps = std::stoi(text.substr(p2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + " must look like lo:hi:steps");
    }
    if (g.steps < 1) throw std::invalid_argument(flag + " needs at least one step");
    return g;
}

int env_thread_cap() {
    const char* env = std::getenv("POLYCC_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
}

// Report JSON goes to stdout unless --out was given, in which case the file
// is written atomically with a manifest beside it.
void emit(const std::string& out_path, const std::string& content, const std::string& command,
          const ordered_json& params, std::optional<long long> seed = std::nullopt) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    io::atomic_write(out_path, content);
    io::atomic_write(out_path + ".manifest.json",
                     io::manifest_json(command, params.dump(), seed, {out_path}));
}

ordered_json params_echo(int n, double a, double b, double h, const twist& theta, double m) {
    ordered_json p;
    p["n"] = n;
    p["a"] = a;
    p["b"] = b;
    p["h"] = h;
    p["theta_kind"] = theta.canonical ? (theta.numer == 0 ? "0" : "pi-over-n") : "radians";
    p["theta"] = theta.radians(n);
    p["m"] = m;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted double-polygon central configurations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("polycc ") + io::tool_version);
    // The height flag --h would collide with the default -h help alias, so
    // help is long-form only, here and on every subcommand.
    app.set_help_flag("--help", "print help and exit");

    // build
    auto* cmd_build = app.add_subcommand("build", "write the 2N-body configuration as JSON");
    cmd_build->set_help_flag("--help", "print help and exit");
    int b_n = 0;
    double b_a = 1.0, b_b = 1.0, b_h = 0.0, b_m = 1.0;
    std::string b_theta = "0", b_out;
    cmd_build->add_option("--n", b_n)->required();
    cmd_build->add_option("--a", b_a)->required();
    cmd_build->add_option("--b", b_b)->required();
    cmd_build->add_option("--h", b_h)->required();
    cmd_build->add_option("--theta", b_theta)->required();
    cmd_build->add_option("--m", b_m);
    cmd_build->add_option("--out", b_out)->required();

    // check
    auto* cmd_check = app.add_subcommand("check", "evaluate the central-configuration residual");
    cmd_check->set_help_flag("--help", "print help and exit");
    std::string c_file;
    double c_tol = default_central_tolerance;
    cmd_check->add_option("file", c_file)->required();
    cmd_check->add_option("--tol", c_tol);

    // kernels
    auto* cmd_kernels = app.add_subcommand("kernels", "evaluate the reduced sums x, y, z");
    cmd_kernels->set_help_flag("--help", "print help and exit");
    int k_n = 0;
    double k_a = 1.0, k_h = 0.0;
    std::string k_theta = "0", k_out;
    cmd_kernels->add_option("--n", k_n)->required();
    cmd_kernels->add_option("--a", k_a)->required();
    cmd_kernels->add_option("--h", k_h)->required();
    cmd_kernels->add_option("--theta", k_theta)->required();
    cmd_kernels->add_option("--out", k_out);

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "find the equal-case ring separation");
    cmd_solve->set_help_flag("--help", "print help and exit");
    int s_n = 0;
    std::string s_theta = "pi-over-n", s_out;
    cmd_solve->add_option("--n", s_n)->required();
    cmd_solve->add_option("--theta", s_theta);
    cmd_solve->add_option("--out", s_out);

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "residual certification scan over (a, b, h)");
    cmd_scan->set_help_flag("--help", "print help and exit");
    int g_n = 0, g_threads = 0;
    std::string g_theta = "pi-over-n", g_a, g_b, g_h, g_out;
    double g_delta = 0.05, g_floor = 0.0;
    cmd_scan->add_option("--n", g_n)->required();
    cmd_scan->add_option("--theta", g_theta);
    cmd_scan->add_option("--a-grid", g_a)->required();
    cmd_scan->add_option("--b-grid", g_b)->required();
    cmd_scan->add_option("--h-grid", g_h)->required();
    cmd_scan->add_option("--delta-excl", g_delta);
    cmd_scan->add_option("--floor", g_floor);
    cmd_scan->add_option("--threads", g_threads);
    cmd_scan->add_option("--out", g_out);

    // collapse
    auto* cmd_collapse = app.add_subcommand("collapse", "release from rest and track the shape");
    cmd_collapse->set_help_flag("--help", "print help and exit");
    int l_n = 0;
    double l_a = 1.0, l_b = 1.0, l_h = 0.0, l_m = 1.0, l_tend = 0.0, l_dt = 1e-3;
    std::string l_theta = "0", l_out;
    cmd_collapse->add_option("--n", l_n)->required();
    cmd_collapse->add_option("--a", l_a)->required();
    cmd_collapse->add_option("--b", l_b)->required();
    cmd_collapse->add_option("--h", l_h)->required();
    cmd_collapse->add_option("--theta", l_theta)->required();
    cmd_collapse->add_option("--m", l_m);
    cmd_collapse->add_option("--t-end", l_tend);
    cmd_collapse->add_option("--dt", l_dt);
    cmd_collapse->add_option("--out", l_out);

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "randomized proof-step property checks");
    cmd_suite->set_help_flag("--help", "print help and exit");
    int u_nmax = 10;
    long u_samples = 10000;
    long long u_seed = 42;
    std::string u_out;
    cmd_suite->add_option("--n-max", u_nmax);
    cmd_suite->add_option("--samples", u_samples);
    cmd_suite->add_option("--seed", u_seed);
    cmd_suite->add_option("--out", u_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_build) {
            twisted_polygon_params p{b_n, b_a, b_b, b_h, parse_theta(b_theta, b_n), b_m};
            body_system sys = build_configuration(p);
            emit(b_out, io::body_system_json(sys, p), "build",
                 params_echo(p.n, p.a, p.b, p.h, p.theta, p.m));
            return 0;
        }

        if (*cmd_check) {
            std::optional<twisted_polygon_params> meta;
            body_system sys = io::parse_body_system(io::read_file(c_file), &meta);
            cc_report report = cc_residual(sys, c_tol);
            std::optional<condition_residual> conditions;
            if (meta && meta->theta.canonical && meta->h > 0.0)
                conditions = evaluate_conditions(*meta);
            std::cout << io::check_report_json(report, conditions);
            return report.is_central ? 0 : 1;
        }

        if (*cmd_kernels) {
            twist th = parse_theta(k_theta, k_n);
            yz_values yz = kernel_yz(k_n, k_a, k_h, th);
            double x = kernel_x(k_n);
            ordered_json params;
            params["n"] = k_n;
            params["a"] = k_a;
            params["h"] = k_h;
            params["theta"] = th.radians(k_n);
            emit(k_out, io::kernels_json(k_n, k_a, k_h, th, x, yz), "kernels", params);
            return 0;
        }

        if (*cmd_solve) {
            twist th = parse_theta(s_theta, s_n);
            solve_result r = solve_h(s_n, th);
            ordered_json params;
            params["n"] = s_n;
            params["theta"] = th.radians(s_n);
            emit(s_out, io::solve_result_json(r), "solve", params);
            return 0;
        }

        if (*cmd_scan) {
            twist th = parse_theta(g_theta, g_n);
            grid_spec ga = parse_grid(g_a, "--a-grid");
            grid_spec gb = parse_grid(g_b, "--b-grid");
            grid_spec gh = parse_grid(g_h, "--h-grid");
            int threads = g_threads;
            int cap = env_thread_cap();
            if (cap > 0 && (threads == 0 || threads > cap)) threads = cap;
            std::vector<scan_cell> cells =
                certify_no_solution(g_n, th, ga, gb, gh, g_delta, threads);
            ordered_json params;
            params["n"] = g_n;
            params["theta"] = th.radians(g_n);
            params["a_grid"] = g_a;
            params["b_grid"] = g_b;
            params["h_grid"] = g_h;
            params["delta_excl"] = g_delta;
            params["floor"] = g_floor;
            emit(g_out, io::scan_csv(cells), "scan", params);
            int violations = 0;
            for (const auto& cell : cells) {
                if (g_floor > 0.0 && cell.min_residual <= g_floor) {
                    ++violations;
                    std::cerr << "floor violation: a=" << cell.a << " b=" << cell.b
                              << " min_residual=" << cell.min_residual << "\n";
                }
            }
            return violations > 0 ? 1 : 0;
        }

        if (*cmd_collapse) {
            twisted_polygon_params p{l_n, l_a, l_b, l_h, parse_theta(l_theta, l_n), l_m};
            body_system sys = build_configuration(p);
            double t_end = l_tend > 0.0 ? l_tend : collapse_window(sys);
            trajectory_report report = integrate_release(sys, t_end, l_dt);
            ordered_json params = params_echo(p.n, p.a, p.b, p.h, p.theta, p.m);
            params["t_end"] = t_end;
            params["dt"] = l_dt;
            emit(l_out, io::trajectory_csv(report), "collapse", params);
            return 0;
        }

        if (*cmd_suite) {
            suite_report report = step_property_suite(u_nmax, u_samples,
                                                      static_cast<unsigned long long>(u_seed));
            ordered_json params;
            params["n_max"] = u_nmax;
            params["samples"] = u_samples;
            emit(u_out, io::suite_report_json(report), "suite", params, u_seed);
            if (!report.pass) {
                for (const auto& ck : report.checks) {
                    if (ck.violations > 0)
                        std::cerr << "property violation: " << ck.name << " failed "
                                  << ck.violations << " of " << ck.samples << " samples\n";
                }
                return 1;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
