#include "isq/solutions.hpp"
#include "isq/branch.hpp"
#include "isq/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isq {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

ExtensionParams::ExtensionParams(double kappa_, double theta_)
    : kappa(kappa_), theta(theta_) {
    if (!(std::abs(kappa_) < 1.0))
        throw std::invalid_argument("ExtensionParams: requires |kappa| < 1");
}

double ExtensionParams::canonical_theta() const noexcept {
    double th = theta - pi * std::floor(theta / pi);
    if (th >= pi)
        th -= pi; // guards against floor rounding at the edge
    return th;
}

double q_potential(double kappa, double r) {
    return (kappa * kappa - 0.25) / (r * r);
}

SolutionEval eval_u(double kappa, cplx z, double r, const SeriesConfig& cfg) {
    if (!(r > 0.0))
        throw std::domain_error("eval_u: requires r > 0");
    const cplx zeta = r * r * z;
    const auto c = detail::chi_with_dzeta(kappa, zeta, cfg);
    const double rk = std::pow(r, 0.5 + kappa);
    const cplx value = rk * c.value;
    const cplx d_r = (0.5 + kappa) * (rk / r) * c.value + 2.0 * rk * r * z * c.dzeta;
    return {value, d_r};
}

namespace {

// Jets in kappa about 0 of A(kappa) = u^kappa(z|r): value and d_r rows,
// orders 0..5, assembled from the chi jets and powers of log r.
struct UJets {
    std::array<cplx, 6> value;
    std::array<cplx, 6> d_r;
};

UJets u_kappa_jets(cplx z, double r, const SeriesConfig& cfg) {
    const auto jets = detail::chi_kappa_jets(r * r * z, cfg);
    const auto& X = jets.chi_jet;
    const auto& Xd = jets.dchi_jet;
    const double sr = std::sqrt(r);
    const double lr = std::log(r);

    // P_j = jets of (1/2+kappa) r^{-1/2} chi + 2 r^{3/2} z chi'
    std::array<cplx, 6> P{};
    for (int j = 0; j < 6; ++j) {
        cplx pj = 0.5 * X[j] / sr + 2.0 * sr * r * z * Xd[j];
        if (j >= 1)
            pj += static_cast<double>(j) * X[j - 1] / sr;
        P[j] = pj;
    }

    // binomial mix with powers of log r (from the factor e^{kappa log r})
    static const int binom[6][6] = {{1, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0},
                                    {1, 2, 1, 0, 0, 0},  {1, 3, 3, 1, 0, 0},
                                    {1, 4, 6, 4, 1, 0},  {1, 5, 10, 10, 5, 1}};
    UJets out{};
    for (int m = 0; m < 6; ++m) {
        cplx av = 0.0, ad = 0.0;
        double lp = 1.0;
        for (int j = m; j >= 0; --j) { // lp = (log r)^{m-j}
            av += static_cast<double>(binom[m][j]) * lp * X[j];
            ad += static_cast<double>(binom[m][j]) * lp * P[j];
            lp *= lr;
        }
        out.value[m] = sr * av;
        out.d_r[m] = ad;
    }
    return out;
}

bool zeta_in_series_range(cplx z, double r, const SeriesConfig& cfg) {
    return r * std::sqrt(std::abs(z)) <= cfg.asymptotic_switch;
}

} // namespace

SolutionEval eval_v(double kappa, cplx z, double r, const SeriesConfig& cfg) {
    if (!(r > 0.0))
        throw std::domain_error("eval_v: requires r > 0");
    const cplx zh = cut_power(z, 0.5, BranchCut::lower_imaginary);
    const cplx x = r * zh;
    const auto h = hankel1_with_derivative(kappa, x, cfg);
    const double sr = std::sqrt(r);
    const cplx pref = cplx(0.0, 0.5 * pi) * std::exp(cplx(0.0, 0.5 * pi * kappa));
    return {pref * sr * h.value, pref * (0.5 * h.value / sr + sr * zh * h.dx)};
}

SolutionEval eval_w(double kappa, cplx z, double r, const SeriesConfig& cfg) {
    if (!(r > 0.0))
        throw std::domain_error("eval_w: requires r > 0");
    if (std::abs(kappa) >= kappa_blend) {
        const auto up = eval_u(kappa, z, r, cfg);
        const auto um = eval_u(-kappa, z, r, cfg);
        const double c = std::cos(pi * kappa), s = std::sin(pi * kappa);
        return {(up.value * c - um.value) / s, (up.d_r * c - um.d_r) / s};
    }

    if (zeta_in_series_range(z, r, cfg)) {
        // odd part of A(kappa) through fifth order, plus the analytic
        // -A(kappa) tan(pi kappa / 2) remainder
        const auto J = u_kappa_jets(z, r, cfg);
        const auto a = eval_u(kappa, z, r, cfg);
        const double k2 = kappa * kappa;
        const double inv_sinc = 1.0 / sinc_r(pi * kappa);
        const double tn = std::tan(0.5 * pi * kappa);
        auto mix = [&](const std::array<cplx, 6>& F) {
            return (2.0 / pi) * inv_sinc *
                   (F[1] + F[3] * (k2 / 6.0) + F[5] * (k2 * k2 / 120.0));
        };
        return {mix(J.value) - a.value * tn, mix(J.d_r) - a.d_r * tn};
    }

    // Large |r^2 z| inside the blend band: express w through v and u, both of
    // which have kappa-smooth evaluations there.
    const cplx lz = cut_log(z, BranchCut::lower_imaginary);
    const cplx ip(0.0, pi);
    const cplx s = 0.5 * kappa * (lz - ip);
    const cplx es = std::exp(s);
    const cplx bracket =
        (lz - ip) * detail::expm1_over(2.0 * s) / (pi * sinc_r(pi * kappa)) +
        std::tan(0.5 * pi * kappa);
    const auto v = eval_v(kappa, z, r, cfg);
    const auto u = eval_u(kappa, z, r, cfg);
    return {-(2.0 / pi) * es * v.value - u.value * bracket,
            -(2.0 / pi) * es * v.d_r - u.d_r * bracket};
}

SolutionEval eval_u_theta(const ExtensionParams& p, cplx z, double r,
                          const SeriesConfig& cfg) {
    const double d = p.theta - p.theta_kappa();
    const double c = std::cos(d), s = std::sin(d);
    const auto u = eval_u(p.kappa, z, r, cfg);
    const auto w = eval_w(p.kappa, z, r, cfg);
    return {u.value * c + w.value * s, u.d_r * c + w.d_r * s};
}

cplx wronskian_at(const SolutionEval& f, const SolutionEval& g) {
    return f.value * g.d_r - f.d_r * g.value;
}

double ode_residual(double kappa, cplx E,
                    const std::function<SolutionEval(double)>& f,
                    double r, double h) {
    if (!(r - 2.0 * h > 0.0))
        throw std::domain_error("ode_residual: requires r - 2h > 0");
    const cplx fm2 = f(r - 2.0 * h).value;
    const cplx fm1 = f(r - h).value;
    const cplx f0 = f(r).value;
    const cplx fp1 = f(r + h).value;
    const cplx fp2 = f(r + 2.0 * h).value;
    const cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    const cplx lhs = -d2 + q_potential(kappa, r) * f0 - E * f0;
    return std::abs(lhs) / (1.0 + std::abs(E * f0));
}

} // namespace isq
