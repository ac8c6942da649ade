#include "isq/measure.hpp"
#include "isq/branch.hpp"
#include "isq/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double boundary_tol = 1e-12;

enum class AtomWindow { absent, present, boundary };

AtomWindow atom_window(const ExtensionParams& p) {
    const double th = p.canonical_theta();
    const double b = std::abs(p.theta_kappa());
    // Distance (mod pi) to the window edges {b, pi - b}. The edge itself
    // belongs to the closed atomless set; an exact hit (<= 1e-14, i.e. theta
    // constructed from theta_kappa) is classified as such, while the fuzzy
    // annulus around it is surfaced as an error instead of guessing a side.
    double dist = std::min(std::abs(th - b), std::abs(th - (pi - b)));
    if (b < 0.5 * boundary_tol)
        dist = std::min(dist, std::min(th, pi - th));
    constexpr double exact_tol = 1e-14;
    if (dist <= exact_tol)
        return AtomWindow::absent;
    if (dist < boundary_tol)
        return AtomWindow::boundary;
    return (th > b && th < pi - b) ? AtomWindow::present : AtomWindow::absent;
}

// g(y) = y^{-1} log((1+y)/(1-y)) continued by g(0) = 2; even in y.
double g_log_ratio(double y) {
    if (std::abs(y) > 1e-3)
        return std::log((1.0 + y) / (1.0 - y)) / y;
    const double y2 = y * y;
    return 2.0 + 2.0 * y2 / 3.0 + 2.0 * y2 * y2 / 5.0;
}

// Shared pieces of the kappa-stable m-function / Wronskian forms.
struct StableParts {
    cplx lzip;     // log z - i pi
    cplx one_plus_q;
    cplx lz;
    cplx e1;       // (e^{kappa(log z - i pi)} - 1) / (kappa (log z - i pi))
};

StableParts stable_parts(double kappa, cplx z) {
    StableParts s;
    s.lz = cut_log(z, BranchCut::lower_imaginary);
    s.lzip = s.lz - cplx(0.0, pi);
    const cplx w = kappa * s.lzip;
    s.e1 = detail::expm1_over(w);
    s.one_plus_q = 1.0 + std::exp(w);
    return s;
}

} // namespace

double SpectralMeasure::density(double E) const { return isq::density(params, E); }

double phi(double kappa, double E) {
    if (!(E > 0.0))
        throw std::domain_error("phi: requires E > 0");
    const double le = std::log(E);
    return -(le / (pi * sinc_r(pi * kappa))) * sinhc(0.5 * kappa * le);
}

double density_t(const ExtensionParams& p, double E) {
    if (!(E > 0.0))
        throw std::domain_error("density: requires E > 0");
    const double f = phi(p.kappa, E);
    const double ek = std::pow(E, 0.5 * p.kappa);
    return 2.0 + f * f * (1.0 - std::cos(2.0 * p.theta) * std::cos(pi * p.kappa)) +
           f * (1.0 / ek + ek) * std::sin(2.0 * p.theta);
}

double density(const ExtensionParams& p, double E) {
    return 1.0 / density_t(p, E);
}

std::optional<double> bound_state_energy(const ExtensionParams& p) {
    switch (atom_window(p)) {
    case AtomWindow::absent:
        return std::nullopt;
    case AtomWindow::boundary:
        throw boundary_error("bound_state_energy: theta on the atom-window boundary");
    case AtomWindow::present:
        break;
    }
    const double th = p.canonical_theta();
    const double tk = p.theta_kappa();
    const double ct = std::cos(th) / std::sin(th);
    const double y = ct * std::tan(tk);
    const double expo = (pi * ct / (2.0 * std::cos(tk))) * sinc_r(tk) * g_log_ratio(y);
    // |E| runs from infinity to 0 across the window; close enough to the
    // edges it leaves double range and the atom cannot be represented
    if (std::abs(expo) > 700.0)
        throw std::domain_error(
            "bound_state_energy: atom energy overflows double precision this "
            "close to the window edge");
    return -std::exp(expo);
}

std::optional<double> atom_weight(const ExtensionParams& p) {
    const auto e = bound_state_energy(p); // shares the window / boundary logic
    if (!e)
        return std::nullopt;
    const double th = p.canonical_theta();
    const double tk = p.theta_kappa();
    return pi * pi * sinc_r(pi * p.kappa) * std::abs(*e) /
           (2.0 * std::sin(th + tk) * std::sin(th - tk));
}

SpectralMeasure build_measure(const ExtensionParams& p) {
    SpectralMeasure m{p, std::nullopt};
    if (const auto e = bound_state_energy(p))
        m.atom = Atom{*e, *atom_weight(p)};
    return m;
}

double v_kappa_density(double kappa, double E) {
    if (!(kappa > -1.0))
        throw std::domain_error("v_kappa_density: requires kappa > -1");
    if (E < 0.0)
        return 0.0;
    return 0.5 * std::pow(E, kappa);
}

cplx m_function(const ExtensionParams& p, cplx z) {
    if (atom_window(p) == AtomWindow::present) {
        const double e0 = *bound_state_energy(p);
        if (std::abs(z - cplx(e0, 0.0)) < 1e-12)
            throw pole_error("m_function: z within 1e-12 of the bound-state pole");
    }
    const auto s = stable_parts(p.kappa, z);
    const double tk = p.theta_kappa();
    const double ck = std::cos(tk);
    const double sk = 0.5 * pi * sinc_r(tk); // sin(theta_kappa)/kappa
    const double cth = std::cos(p.theta), sth = std::sin(p.theta);
    // numerator and denominator of Eq-form, each divided by kappa
    const cplx num = -cth * ck * s.lzip * s.e1 - sth * sk * s.one_plus_q;
    const cplx den = -sth * ck * s.lzip * s.e1 + cth * sk * s.one_plus_q;
    return 0.5 * num / den;
}

cplx wronskian_v_u_theta(const ExtensionParams& p, cplx z) {
    const auto s = stable_parts(p.kappa, z);
    const double tk = p.theta_kappa();
    const double cth = std::cos(p.theta), sth = std::sin(p.theta);
    const double inv_sc = 1.0 / sinc_r(pi * p.kappa);
    const cplx pref =
        std::exp(-0.5 * p.kappa * s.lz) * std::exp(cplx(0.0, 0.5 * pi * p.kappa));
    const cplx body = -sth * std::cos(tk) * s.lzip * s.e1 * (inv_sc / pi) +
                      0.5 * cth * sinc_r(tk) * s.one_plus_q * inv_sc;
    return pref * body;
}

cplx m_function_wronskian_path(const ExtensionParams& p, cplx z, double r_eval,
                               const SeriesConfig& cfg) {
    const auto v = eval_v(p.kappa, z, r_eval, cfg);
    const auto ut = eval_u_theta(p, z, r_eval, cfg);
    const ExtensionParams shifted(p.kappa, p.theta - 0.5 * pi);
    const auto uts = eval_u_theta(shifted, z, r_eval, cfg);
    return -0.5 * wronskian_at(v, uts) / wronskian_at(v, ut);
}

MLimitResult m_limit_check(const ExtensionParams& p, double E,
                           const std::vector<double>& etas) {
    if (etas.size() < 3)
        throw std::invalid_argument("m_limit_check: need at least 3 eta values");
    if (!(etas.back() >= 1e-6))
        throw std::invalid_argument("m_limit_check: etas must stay >= 1e-6");
    for (size_t i = 0; i + 1 < etas.size(); ++i)
        if (!(etas[i] > etas[i + 1]))
            throw std::invalid_argument("m_limit_check: etas must decrease");

    std::vector<double> f(etas.size());
    for (size_t i = 0; i < etas.size(); ++i)
        f[i] = m_function(p, cplx(E, etas[i])).imag();

    const size_t n = etas.size();
    const double d0 = f[n - 3] - f[n - 2];
    const double d1 = f[n - 2] - f[n - 1];
    const double scale = 1.0 + std::abs(f[n - 1]);
    if (std::abs(d0) < 1e-14 * scale && std::abs(d1) < 1e-14 * scale)
        return {f[n - 1], std::abs(d1), true};
    if (d0 * d1 <= 0.0 || std::abs(d1) >= std::abs(d0))
        return {f[n - 1], std::abs(d1), false}; // non-monotone: no safe extrapolation

    const double rho0 = etas[n - 3] / etas[n - 2];
    const double rho1 = etas[n - 2] / etas[n - 1];
    double order = std::log(d0 / d1) / std::log(rho0);
    order = std::min(std::max(order, 0.25), 8.0);
    const double la = f[n - 2] - d0 / (std::pow(rho0, order) - 1.0);
    const double lb = f[n - 1] - d1 / (std::pow(rho1, order) - 1.0);
    return {lb, std::abs(lb - la), true};
}

} // namespace isq
