#include "polycc/solver.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>

#include "polycc/angles.hpp"
#include "polycc/conditions.hpp"
#include "polycc/kahan.hpp"
#include "polycc/kernels.hpp"
#include "polycc/newtonian.hpp"

namespace polycc {

namespace {

constexpr double bracket_start_lo = 1e-3;
constexpr double bracket_start_hi = 1.0;
constexpr double h_max = 1e3;
constexpr double bisect_width = 1e-14;

double joint_reduced_residual(int n, const twist& theta, double x, double a, double b, double h) {
    yz_values yz = kernel_yz(n, a, h, theta);
    double r1 = b * a * yz.y - (x - yz.z);
    double r2 = (b / (a * a)) * x - b * a * yz.z - yz.y;
    return std::hypot(r1, r2);
}

// golden-section minimization, assuming a single dip inside [lo, hi]
template <typename F>
double golden_min(F f, double lo, double hi, double* arg) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - (hi - lo) * inv_phi;
    double d = lo + (hi - lo) * inv_phi;
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(1.0, std::fabs(lo)); ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = f(d);
        }
    }
    double mid = 0.5 * (lo + hi);
    if (arg) *arg = mid;
    return f(mid);
}

struct rng64 {
    std::uint64_t state;
    explicit rng64(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        // splitmix64: platform-independent stream for reproducible draws
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform() * std::log(hi / lo));
    }
    int int_range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

double equal_case_f(int n, const twist& theta, double h) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    if (!(h > 0.0)) throw std::invalid_argument("separation h must be positive");
    const double x = kernel_x(n);
    kahan_sum tail;  // z + y = sum (1 + cos)/D^{3/2}, all terms nonnegative
    if (theta.canonical) {
        for (int k = 1; k <= n; ++k) {
            double c = cos_pi_frac(2LL * k + theta.numer, n);
            double d = 2.0 * (1.0 - c) + h * h;
            if (d <= collision_tolerance * collision_tolerance)
                throw std::domain_error("coincident ring points in kernel sum");
            tail.add((1.0 + c) / (d * std::sqrt(d)));
        }
    } else {
        const double ct = std::cos(theta.raw);
        const double st = std::sin(theta.raw);
        for (int k = 1; k <= n; ++k) {
            double c = cos_pi_frac(2LL * k, n) * ct - sin_pi_frac(2LL * k, n) * st;
            double d = 2.0 * (1.0 - c) + h * h;
            if (d <= collision_tolerance * collision_tolerance)
                throw std::domain_error("coincident ring points in kernel sum");
            tail.add((1.0 + c) / (d * std::sqrt(d)));
        }
    }
    return x - tail.value();
}

solve_result solve_h(int n, const twist& theta) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    solve_result out;

    double lo = bracket_start_lo;
    double hi = bracket_start_hi;
    double flo = equal_case_f(n, theta, lo);
    if (flo > 0.0) {
        out.note = "f positive at lower bracket " + std::to_string(lo) + "; no root reported";
        return out;
    }
    double fhi = equal_case_f(n, theta, hi);
    while (fhi <= 0.0 && hi < h_max) {
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        if (hi > h_max) hi = h_max;
        fhi = equal_case_f(n, theta, hi);
    }
    if (fhi <= 0.0) {
        out.note = "no sign change up to h = " + std::to_string(h_max);
        return out;
    }

    out.bracket_lo = lo;
    out.bracket_hi = hi;
    int iters = 0;
    while (hi - lo > bisect_width && iters < 200) {
        double mid = 0.5 * (lo + hi);
        double fm = equal_case_f(n, theta, mid);
        if (fm <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iters;
    }
    out.found = true;
    out.h_root = 0.5 * (lo + hi);
    out.iterations = iters;
    out.residual_at_root = std::fabs(equal_case_f(n, theta, out.h_root));

    twisted_polygon_params p{n, 1.0, 1.0, out.h_root, theta, 1.0};
    out.lambda = lambda_of(build_configuration(p));
    return out;
}

std::vector<scan_cell> certify_no_solution(int n, const twist& theta, grid_spec a_grid,
                                           grid_spec b_grid, grid_spec h_grid, double delta_excl,
                                           int threads) {
    if (n < 3) throw std::invalid_argument("N must be at least 3");
    if (a_grid.steps < 1 || b_grid.steps < 1 || h_grid.steps < 1)
        throw std::invalid_argument("grids must be nonempty");
    if (!(h_grid.lo > 0.0) || !(h_grid.hi > h_grid.lo))
        throw std::invalid_argument("h grid must satisfy 0 < lo < hi");

    auto linear_points = [delta_excl](grid_spec g) {
        std::vector<double> pts;
        for (int i = 0; i < g.steps; ++i) {
            double v = g.steps == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.steps - 1);
            if (std::fabs(v - 1.0) < delta_excl) continue;
            pts.push_back(v);
        }
        return pts;
    };
    std::vector<double> as = linear_points(a_grid);
    std::vector<double> bs = linear_points(b_grid);
    if (as.empty() || bs.empty()) throw std::invalid_argument("grids must be nonempty");

    // geometric points on (lo, hi]
    std::vector<double> hs(h_grid.steps);
    double ratio = std::pow(h_grid.hi / h_grid.lo, 1.0 / h_grid.steps);
    for (int i = 0; i < h_grid.steps; ++i) hs[i] = h_grid.lo * std::pow(ratio, i + 1);
    hs.back() = h_grid.hi;

    const double x = kernel_x(n);
    std::vector<scan_cell> cells(as.size() * bs.size());

    auto scan_a_row = [&](size_t ai) {
        double a = as[ai];
        std::vector<yz_values> yzs(hs.size());
        for (size_t i = 0; i < hs.size(); ++i) yzs[i] = kernel_yz(n, a, hs[i], theta);
        for (size_t bi = 0; bi < bs.size(); ++bi) {
            double b = bs[bi];
            double best = std::numeric_limits<double>::infinity();
            size_t best_i = 0;
            for (size_t i = 0; i < hs.size(); ++i) {
                double r1 = b * a * yzs[i].y - (x - yzs[i].z);
                double r2 = (b / (a * a)) * x - b * a * yzs[i].z - yzs[i].y;
                double v = std::hypot(r1, r2);
                if (v < best) {
                    best = v;
                    best_i = i;
                }
            }
            double lo = hs[best_i > 0 ? best_i - 1 : 0];
            double hi = hs[best_i + 1 < hs.size() ? best_i + 1 : hs.size() - 1];
            double arg = hs[best_i];
            double refined = golden_min(
                [&](double h) { return joint_reduced_residual(n, theta, x, a, b, h); }, lo, hi,
                &arg);
            if (refined < best) {
                best = refined;
            } else {
                arg = hs[best_i];
            }
            cells[ai * bs.size() + bi] = {a, b, best, arg};
        }
    };

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, static_cast<int>(as.size()));
    if (nthreads <= 1) {
        for (size_t ai = 0; ai < as.size(); ++ai) scan_a_row(ai);
    } else {
        std::atomic<size_t> next_row{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (size_t ai = next_row.fetch_add(1); ai < as.size();
                     ai = next_row.fetch_add(1)) {
                    scan_a_row(ai);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return cells;
}

suite_report step_property_suite(int n_max, long samples, unsigned long long seed) {
    if (n_max < 3) throw std::invalid_argument("N_max must be at least 3");
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    suite_report report;
    rng64 rng(seed);

    // (i) y > 0 for N >= 3, h > 0, theta in {0, pi/N}
    {
        suite_check ck{"y_positive", samples, 0, std::numeric_limits<double>::infinity()};
        for (long i = 0; i < samples; ++i) {
            int n = rng.int_range(3, n_max);
            double a = rng.log_uniform(0.05, 20.0);
            double h = rng.log_uniform(1e-3, 10.0);
            twist th = rng.uniform() < 0.5 ? twist::zero() : twist::half_step();
            double y = kernel_yz(n, a, h, th).y;
            ck.worst = std::min(ck.worst, y);
            if (!(y > 0.0)) ++ck.violations;
        }
        report.checks.push_back(ck);
    }

    // (ii) z > y always
    {
        suite_check ck{"z_exceeds_y", samples, 0, std::numeric_limits<double>::infinity()};
        for (long i = 0; i < samples; ++i) {
            int n = rng.int_range(2, n_max);
            double a = rng.log_uniform(0.05, 20.0);
            double h = rng.log_uniform(1e-3, 10.0);
            twist th = rng.uniform() < 0.5 ? twist::zero() : twist::half_step();
            yz_values yz = kernel_yz(n, a, h, th);
            ck.worst = std::min(ck.worst, yz.z - yz.y);
            if (!(yz.z > yz.y)) ++ck.violations;
        }
        report.checks.push_back(ck);
    }

    // (iii) x > 0 with dual-formula agreement, swept over N
    {
        suite_check ck{"x_positive_dual_formula", 0, 0, 0.0};
        for (int n = 2; n <= 1000; ++n) {
            ++ck.samples;
            double xc = kernel_x(n);
            x_pair_sum xp = kernel_x_pair_sum(n);
            double rel = std::fabs(xp.re - xc) / std::max(1.0, std::fabs(xc));
            ck.worst = std::max(ck.worst, rel);
            if (!(xc > 0.0) || rel > 1e-14) ++ck.violations;
        }
        report.checks.push_back(ck);
    }

    // (iv) b = 1 sub-case: no h brings the size-ratio identity together with
    // the reduced conditions below the gap over a in [0.1, 0.95]
    {
        suite_check ck{"equal_mass_size_gap", 0, 0, std::numeric_limits<double>::infinity()};
        const int n = 5;
        const twist th = twist::half_step();
        const double x = kernel_x(n);
        for (int i = 0; i < 18; ++i) {
            double a = 0.1 + (0.95 - 0.1) * i / 17.0;
            ++ck.samples;
            auto joint = [&](double h) {
                yz_values yz = kernel_yz(n, a, h, th);
                double r1 = 1.0 * a * yz.y - (x - yz.z);
                double r2 = (1.0 / (a * a)) * x - 1.0 * a * yz.z - yz.y;
                double r45 = (x - a * yz.y) - (x / (a * a * a) - yz.y / a);
                return std::sqrt(r1 * r1 + r2 * r2 + r45 * r45);
            };
            double best = std::numeric_limits<double>::infinity();
            int best_i = 0;
            std::vector<double> hs(200);
            double ratio = std::pow(10.0 / 0.01, 1.0 / 200.0);
            for (int j = 0; j < 200; ++j) {
                hs[j] = 0.01 * std::pow(ratio, j + 1);
                double v = joint(hs[j]);
                if (v < best) {
                    best = v;
                    best_i = j;
                }
            }
            double refined = golden_min(joint, hs[best_i > 0 ? best_i - 1 : 0],
                                        hs[best_i + 1 < 200 ? best_i + 1 : 199], nullptr);
            best = std::min(best, refined);
            ck.worst = std::min(ck.worst, best);
            if (!(best > 1e-4)) ++ck.violations;
        }
        report.checks.push_back(ck);
    }

    report.pass = true;
    for (const auto& ck : report.checks)
        if (ck.violations > 0) report.pass = false;
    return report;
}

}  // namespace polycc
