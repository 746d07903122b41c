#include "polycc/conditions.hpp"

#include <cmath>
#include <stdexcept>

#include "polycc/angles.hpp"
#include "polycc/kahan.hpp"
#include "polycc/kernels.hpp"
#include "polycc/newtonian.hpp"

namespace polycc {

namespace {

void check_reduced_args(const twisted_polygon_params& p) {
    p.validate();
    if (!(p.h > 0.0)) throw std::invalid_argument("reduced conditions require h > 0");
    if (!p.theta.canonical)
        throw std::invalid_argument("reduced conditions require theta in {0, pi/N}");
    if (p.theta.numer != 0 && p.theta.numer != 1)
        throw std::invalid_argument("reduced conditions require theta in {0, pi/N}");
}

struct csum {
    kahan_sum re, im;
    void add(double r, double i) {
        re.add(r);
        im.add(i);
    }
    complex_pair value() const { return {re.value(), im.value()}; }
};

complex_pair cdiv_scale(complex_pair v, double s) { return {v.re / s, v.im / s}; }

complex_pair cmul(complex_pair a, complex_pair b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

complex_pair csub(complex_pair a, complex_pair b) { return {a.re - b.re, a.im - b.im}; }

}  // namespace

lemma32_result lemma32_residual(const twisted_polygon_params& p) {
    check_reduced_args(p);
    double x = kernel_x(p.n);
    yz_values yz = kernel_yz(p.n, p.a, p.h, p.theta);
    double r1 = p.b * p.a * yz.y - (x - yz.z);
    double r2 = (p.b / (p.a * p.a)) * x - p.b * p.a * yz.z - yz.y;
    return {r1, r2};
}

lemma34_result lemma34_residual(const twisted_polygon_params& p) {
    check_reduced_args(p);
    const int n = p.n;
    const double a = p.a;
    const double b = p.b;
    const double h = p.h;
    const int s = p.theta.numer;
    const complex_pair eit{cos_pi_frac(s, n), sin_pi_frac(s, n)};

    x_pair_sum xs = kernel_x_pair_sum(n);
    const complex_pair x_sum{xs.re, xs.im};

    csum s35, s37;
    kahan_sum s36;
    for (int k = 1; k <= n; ++k) {
        // ring-2 direction e^{i(theta_k + theta)} with exact angle reduction
        long long u = 2LL * k + s;
        double cu = cos_pi_frac(u, n);
        double su = sin_pi_frac(u, n);
        double wr = 1.0 - a * cu;
        double wi = -a * su;
        double d = wr * wr + wi * wi + h * h;
        double inv = 1.0 / (d * std::sqrt(d));
        s35.add(wr * inv, wi * inv);
        s36.add(inv);

        double ck = cos_pi_frac(2LL * k, n);
        double sk = sin_pi_frac(2LL * k, n);
        double ur = a * eit.re - ck;
        double ui = a * eit.im - sk;
        double e = ur * ur + ui * ui + h * h;
        double inve = 1.0 / (e * std::sqrt(e));
        s37.add(ur * inve, ui * inve);
    }

    complex_pair v35 = s35.value();
    v35 = {(x_sum.re + b * v35.re) / (1.0 + b), (x_sum.im + b * v35.im) / (1.0 + b)};
    complex_pair v36{s36.value(), 0.0};
    complex_pair inner = s37.value();
    complex_pair rot_x = cmul(eit, x_sum);
    inner.re += b * rot_x.re / (a * a);
    inner.im += b * rot_x.im / (a * a);
    complex_pair v37 = cdiv_scale(cmul(complex_pair{eit.re, -eit.im}, inner), a * (1.0 + b));

    lemma34_result out;
    out.values = {v35, v36, v37};
    out.residuals = {csub(v35, v36), complex_pair{0.0, 0.0}, csub(v37, v36)};
    return out;
}

condition_residual evaluate_conditions(const twisted_polygon_params& p) {
    lemma32_result l32 = lemma32_residual(p);
    lemma34_result l34 = lemma34_residual(p);
    condition_residual out;
    out.r32_1 = l32.r1;
    out.r32_2 = l32.r2;
    out.r34 = l34.residuals;
    double worst = std::max(std::fabs(l32.r1), std::fabs(l32.r2));
    for (const auto& r : l34.residuals)
        worst = std::max({worst, std::fabs(r.re), std::fabs(r.im)});
    out.norm = worst;
    return out;
}

double balance_identity_residual(const twisted_polygon_params& p) {
    check_reduced_args(p);
    double x = kernel_x(p.n);
    yz_values yz = kernel_yz(p.n, p.a, p.h, p.theta);
    return std::fabs(yz.y - (x - p.a * p.b * yz.z));
}

bool cross_validate(const twisted_polygon_params& p, double tol) {
    lemma32_result l32 = lemma32_residual(p);
    bool reduced_pass = std::max(std::fabs(l32.r1), std::fabs(l32.r2)) < tol;
    double full_tol = tol * p.m * p.m * std::max(1.0, p.b);
    cc_report full = cc_residual(build_configuration(p), full_tol);
    return reduced_pass == full.is_central;
}

}  // namespace polycc
