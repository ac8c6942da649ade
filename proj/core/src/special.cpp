#include "isq/special.hpp"
#include "isq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <numbers>

namespace isq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double euler_gamma = 0.57721566490153286060651209008240;
constexpr double zeta2 = 1.64493406684822643647241516664603; // pi^2/6
constexpr double zeta3 = 1.20205690315959428539973816151145;
constexpr double zeta4 = 1.08232323371113819151600369654116; // pi^4/90
constexpr double zeta5 = 1.03692775514336992633136548645703;

using cld = std::complex<long double>;

cld widen(cplx z) { return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())}; }
cplx narrow(cld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

} // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0) || max_terms < 1 || !(asymptotic_switch > 0.0))
        throw std::invalid_argument(
            "SeriesConfig: requires rel_tol > 0, max_terms >= 1, asymptotic_switch > 0");
}

// ---------------------------------------------------------------------------
// gamma / digamma
// ---------------------------------------------------------------------------

cplx gamma_fn(cplx z) {
    // Lanczos, g = 7, 9 coefficients.
    static const double lanczos[9] = {
        0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

    if (z.imag() == 0.0) {
        double re = z.real();
        if (re <= 0.0 && re == std::floor(re))
            throw std::domain_error("gamma_fn: pole at nonpositive integer");
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
    }
    cplx zz = z - 1.0;
    cplx x = lanczos[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos[i] / (zz + static_cast<double>(i));
    cplx t = zz + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, zz + 0.5) * std::exp(-t) * x;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series with even Bernoulli numbers
    const double inv = 1.0 / x, inv2 = inv * inv;
    double tail = inv2 * (1.0 / 12.0 -
                  inv2 * (1.0 / 120.0 -
                  inv2 * (1.0 / 252.0 -
                  inv2 * (1.0 / 240.0 -
                  inv2 * (1.0 / 132.0 -
                  inv2 * (691.0 / 32760.0 -
                  inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

// ---------------------------------------------------------------------------
// sinc family
// ---------------------------------------------------------------------------

cplx sinc_c(cplx zeta) {
    if (std::abs(zeta) < 1e-2) {
        cplx z2 = zeta * zeta;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(zeta) / zeta;
}

double sinc_r(double x) {
    if (std::abs(x) < 1e-2) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sinhc(double y) {
    if (std::abs(y) < 1e-2) {
        double y2 = y * y;
        return 1.0 + y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sinh(y) / y;
}

namespace detail {

cplx expm1_over(cplx w) {
    if (std::abs(w) < 0.5) {
        cplx term = 1.0, sum = 1.0;
        for (int k = 1; k < 24; ++k) {
            term *= w / static_cast<double>(k + 1);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum))
                break;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

} // namespace detail

// ---------------------------------------------------------------------------
// chi series and asymptotics
// ---------------------------------------------------------------------------

namespace {

struct ChiBoth {
    cplx value;
    cplx dzeta;
};

// Direct summation of the entire-function series. Accumulation is done in
// extended precision: the series is alternating and the partial sums cancel
// down from a peak of order exp(|zeta|^{1/2}) near the switch radius.
ChiBoth chi_series(cplx kappa, cplx zeta, const SeriesConfig& cfg) {
    const cplx t0 = std::exp(-ln2 * kappa) / gamma_fn(kappa + 1.0);
    if (zeta == cplx(0.0, 0.0))
        return {t0, -t0 / (4.0 * (kappa + 1.0))};

    const cld z = widen(zeta);
    const cld k = widen(kappa);
    cld t = widen(t0);
    cld sum = t, nsum = 0.0L;
    long double max_term = std::abs(t);
    int small_streak = 0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        t *= -z / (4.0L * static_cast<long double>(n) * (k + static_cast<long double>(n)));
        sum += t;
        nsum += static_cast<long double>(n) * t;
        const long double tm = std::abs(t);
        max_term = std::max(max_term, tm);
        if (tm < cfg.rel_tol * std::abs(sum) || tm < 1e-19L * max_term) {
            if (++small_streak >= 2)
                return {narrow(sum), narrow(nsum / z)};
        } else {
            small_streak = 0;
        }
    }
    throw series_error("chi: series did not converge within max_terms",
                       static_cast<double>(std::abs(t)));
}

// One-sided Hankel asymptotic expansion:
//   H^(sigma)_kappa(x) ~ sqrt(2/(pi x)) e^{sigma i (x - kappa pi/2 - pi/4)}
//                        * sum_k (sigma i)^k a_k(kappa) / x^k
// with optional term-by-term kappa-derivative of the sum.
struct AsymptoticSums {
    cplx s;       // sum
    cplx s_dx;    // d/dx of the sum
    cplx s_dk;    // d/dkappa of the sum
};

AsymptoticSums hankel_asymptotic_sums(cplx kappa, cplx x, int sigma, bool want_dk) {
    const cplx si(0.0, static_cast<double>(sigma));
    const cplx fk2 = 4.0 * kappa * kappa;
    cplx t = 1.0, td = 0.0;
    cplx s = t, s_dx = 0.0, s_dk = 0.0;
    double prev = 1.0;
    for (int k = 0; k < 40; ++k) {
        const cplx c = fk2 - static_cast<double>((2 * k + 1) * (2 * k + 1));
        const cplx f = si / (8.0 * static_cast<double>(k + 1) * x);
        const cplx tn = t * c * f;
        if (std::abs(tn) > prev)
            break; // past the optimal truncation point
        if (want_dk)
            td = (td * c + t * 8.0 * kappa) * f;
        t = tn;
        prev = std::abs(t);
        s += t;
        s_dx += -static_cast<double>(k + 1) * t / x;
        if (want_dk)
            s_dk += td;
        if (prev < 1e-17 * std::abs(s))
            break;
    }
    return {s, s_dx, s_dk};
}

struct HankelSided {
    cplx value;
    cplx dx;
    cplx dkappa;
};

HankelSided hankel_one_sided(cplx kappa, cplx x, int sigma, bool want_dk = false) {
    const cplx si(0.0, static_cast<double>(sigma));
    const auto sums = hankel_asymptotic_sums(kappa, x, sigma, want_dk);
    const cplx amp = std::sqrt(2.0 / (pi * x));
    const cplx phase = std::exp(si * (x - kappa * pi / 2.0 - pi / 4.0));
    const cplx ap = amp * phase;
    HankelSided out;
    out.value = ap * sums.s;
    out.dx = ap * (sums.s * (si - 0.5 / x) + sums.s_dx);
    out.dkappa = want_dk ? ap * (sums.s * (-si * pi / 2.0) + sums.s_dk) : cplx(0.0);
    return out;
}

ChiBoth chi_asymptotic(cplx kappa, cplx zeta) {
    const cplx lz = std::log(zeta); // principal branch; chi is entire, any branch pair works
    const cplx x = std::exp(0.5 * lz);
    const cplx pref = std::exp(-0.5 * kappa * lz);
    const auto h1 = hankel_one_sided(kappa, x, +1);
    const auto h2 = hankel_one_sided(kappa, x, -1);
    const cplx j = 0.5 * (h1.value + h2.value);
    const cplx jdx = 0.5 * (h1.dx + h2.dx);
    return {pref * j, pref * (-(kappa / (2.0 * zeta)) * j + jdx / (2.0 * x))};
}

bool use_series(cplx zeta, const SeriesConfig& cfg) {
    return std::sqrt(std::abs(zeta)) <= cfg.asymptotic_switch;
}

} // namespace

namespace detail {

ChiPair chi_with_dzeta(cplx kappa, cplx zeta, const SeriesConfig& cfg) {
    const ChiBoth b = use_series(zeta, cfg) ? chi_series(kappa, zeta, cfg)
                                            : chi_asymptotic(kappa, zeta);
    return {b.value, b.dzeta};
}

BesselEval bessel_j_asymptotic(cplx kappa, cplx x) {
    const auto h1 = hankel_one_sided(kappa, x, +1);
    const auto h2 = hankel_one_sided(kappa, x, -1);
    return {0.5 * (h1.value + h2.value), 0.5 * (h1.dx + h2.dx)};
}

Hankel1Eval hankel1_asymptotic(cplx kappa, cplx x) {
    const auto h = hankel_one_sided(kappa, x, +1);
    return {h.value, h.dx};
}

} // namespace detail

cplx chi(cplx kappa, cplx zeta, const SeriesConfig& cfg) {
    cfg.validate();
    return use_series(zeta, cfg) ? chi_series(kappa, zeta, cfg).value
                                 : chi_asymptotic(kappa, zeta).value;
}

cplx chi_dzeta(cplx kappa, cplx zeta, const SeriesConfig& cfg) {
    cfg.validate();
    return use_series(zeta, cfg) ? chi_series(kappa, zeta, cfg).dzeta
                                 : chi_asymptotic(kappa, zeta).dzeta;
}

cplx chi_dkappa(double kappa, cplx zeta, const SeriesConfig& cfg) {
    cfg.validate();
    if (!use_series(zeta, cfg)) {
        const cplx lz = std::log(zeta);
        const cplx x = std::exp(0.5 * lz);
        const cplx pref = std::exp(-0.5 * kappa * lz);
        const auto h1 = hankel_one_sided(kappa, x, +1, true);
        const auto h2 = hankel_one_sided(kappa, x, -1, true);
        const cplx j = 0.5 * (h1.value + h2.value);
        const cplx jdk = 0.5 * (h1.dkappa + h2.dkappa);
        return pref * (-0.5 * lz * j + jdk);
    }

    const cplx t0 = std::exp(-ln2 * kappa) / gamma_fn(kappa + 1.0);
    double psi = digamma(kappa + 1.0); // psi(kappa+n+1), advanced by recurrence
    if (zeta == cplx(0.0, 0.0))
        return -(ln2 + psi) * t0;

    const cld z = widen(zeta);
    cld t = widen(t0);
    cld sum = t * static_cast<long double>(-(ln2 + psi));
    long double max_term = std::abs(t);
    int small_streak = 0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        psi += 1.0 / (kappa + n); // psi(kappa+n+1) from psi(kappa+n)
        t *= -z / (4.0L * static_cast<long double>(n) *
                   (static_cast<long double>(kappa) + static_cast<long double>(n)));
        sum += t * static_cast<long double>(-(ln2 + psi));
        const long double tm = std::abs(t) * std::abs(static_cast<long double>(ln2 + psi));
        max_term = std::max(max_term, tm);
        if (tm < cfg.rel_tol * std::abs(sum) || tm < 1e-19L * max_term) {
            if (++small_streak >= 2)
                return narrow(sum);
        } else {
            small_streak = 0;
        }
    }
    throw series_error("chi_dkappa: series did not converge within max_terms",
                       static_cast<double>(std::abs(t)));
}

cplx script_y(cplx zeta, const SeriesConfig& cfg) {
    cfg.validate();
    if (zeta == cplx(0.0, 0.0))
        return 0.0;
    if (!use_series(zeta, cfg)) {
        // pi Y_0(x) = 2 (gamma + log(x/2)) J_0(x) - 2 scripty(x^2)
        const cplx x = std::exp(0.5 * std::log(zeta));
        const auto h1 = hankel_one_sided(0.0, x, +1);
        const auto h2 = hankel_one_sided(0.0, x, -1);
        const cplx j0 = 0.5 * (h1.value + h2.value);
        const cplx y0 = (h1.value - h2.value) / cplx(0.0, 2.0);
        return (euler_gamma + std::log(x) - ln2) * j0 - 0.5 * pi * y0;
    }
    const cld z = widen(zeta);
    cld t = 1.0L; // t_n = (-1)^n zeta^n / ((n!)^2 4^n); t_0 = 1 (not summed)
    cld sum = 0.0L;
    long double cn = 0.0L;
    long double max_term = 0.0L;
    int small_streak = 0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        t *= -z / (4.0L * static_cast<long double>(n) * static_cast<long double>(n));
        cn += 1.0L / static_cast<long double>(n);
        sum += cn * t;
        const long double tm = std::abs(t) * cn;
        max_term = std::max(max_term, tm);
        if (tm < cfg.rel_tol * std::abs(sum) || tm < 1e-19L * max_term) {
            if (++small_streak >= 2)
                return narrow(sum);
        } else {
            small_streak = 0;
        }
    }
    throw series_error("script_y: series did not converge within max_terms",
                       static_cast<double>(std::abs(t)));
}

// ---------------------------------------------------------------------------
// kappa-jets of the chi series at kappa = 0
// ---------------------------------------------------------------------------

namespace detail {

ChiJets chi_kappa_jets(cplx zeta, const SeriesConfig& cfg) {
    ChiJets jets{};
    // Derivatives of exp(h(kappa)) at 0 via Bell polynomials, where
    // h(kappa) = -kappa log2 - log Gamma(kappa+n+1) + log Gamma(n+1), so
    // h1 = -(log2 + psi(n+1)), h_m = -psi^(m-1)(n+1) for m >= 2.
    auto bell = [](const std::array<long double, 6>& h, std::array<long double, 6>& e) {
        const long double h1 = h[1], h2 = h[2], h3 = h[3], h4 = h[4], h5 = h[5];
        e[0] = 1.0L;
        e[1] = h1;
        e[2] = h2 + h1 * h1;
        e[3] = h3 + 3.0L * h1 * h2 + h1 * h1 * h1;
        e[4] = h4 + 4.0L * h1 * h3 + 3.0L * h2 * h2 + 6.0L * h1 * h1 * h2 +
               h1 * h1 * h1 * h1;
        e[5] = h5 + 5.0L * h1 * h4 + 10.0L * h2 * h3 + 10.0L * h1 * h1 * h3 +
               15.0L * h1 * h2 * h2 + 10.0L * h1 * h1 * h1 * h2 +
               h1 * h1 * h1 * h1 * h1;
    };

    long double hs1 = 0.0L, hs2 = 0.0L, hs3 = 0.0L, hs4 = 0.0L, hs5 = 0.0L;
    std::array<long double, 6> h{}, e{};
    auto fill_h = [&] {
        // h_m = d^m/dkappa^m of -kappa log2 - log Gamma(kappa+n+1) at 0,
        // from polygamma values at integers via zeta constants
        h[1] = -(static_cast<long double>(ln2) + (-static_cast<long double>(euler_gamma) + hs1));
        h[2] = -(static_cast<long double>(zeta2) - hs2);
        h[3] = 2.0L * (static_cast<long double>(zeta3) - hs3);
        h[4] = -6.0L * (static_cast<long double>(zeta4) - hs4);
        h[5] = 24.0L * (static_cast<long double>(zeta5) - hs5);
    };

    std::array<cld, 6> chi_acc{}, dchi_acc{};
    const bool zeta_zero = (zeta == cplx(0.0, 0.0));
    const cld z = widen(zeta);
    cld t = 1.0L; // kappa = 0 term: (-1)^n zeta^n / ((n!)^2 4^n)
    fill_h();
    bell(h, e);
    for (int m = 0; m < 6; ++m)
        chi_acc[m] += t * e[m];

    long double max_term = 1.0L;
    int small_streak = 0;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        const long double nd = static_cast<long double>(n);
        t *= zeta_zero ? cld(0.0L) : -z / (4.0L * nd * nd);
        if (n == 1 && zeta_zero)
            t = -0.25L; // keep the n = 1 term so dchi/dzeta at zeta = 0 is exact
        hs1 += 1.0L / nd;
        hs2 += 1.0L / (nd * nd);
        hs3 += 1.0L / (nd * nd * nd);
        hs4 += 1.0L / (nd * nd * nd * nd);
        hs5 += 1.0L / (nd * nd * nd * nd * nd);
        fill_h();
        bell(h, e);
        long double emax = 1.0L;
        for (int m = 1; m < 6; ++m)
            emax = std::max(emax, std::abs(e[m]));
        const cld tn_over_zeta = zeta_zero ? (n == 1 ? cld(-0.25L) : cld(0.0L)) : nd * t / z;
        for (int m = 0; m < 6; ++m) {
            if (!zeta_zero)
                chi_acc[m] += t * e[m];
            dchi_acc[m] += tn_over_zeta * e[m];
        }
        if (zeta_zero && n >= 2)
            break;
        const long double tm = std::abs(t) * emax;
        max_term = std::max(max_term, tm);
        if (tm < cfg.rel_tol * std::abs(chi_acc[0]) || tm < 1e-19L * max_term) {
            if (++small_streak >= 2)
                break;
        } else {
            small_streak = 0;
        }
        if (n == cfg.max_terms)
            throw series_error("chi_kappa_jets: series did not converge within max_terms",
                               static_cast<double>(std::abs(t)));
    }
    for (int m = 0; m < 6; ++m) {
        jets.chi_jet[m] = narrow(chi_acc[m]);
        jets.dchi_jet[m] = narrow(dchi_acc[m]);
    }
    return jets;
}

// Temme/Thompson-Barnett CF2 for K_mu, K_{mu+1}; |mu| <= 1/2, Re xi > 0.
BesselKPair bessel_k_cf2(double nu, cplx xi) {
    const double anu = std::abs(nu);
    const double mu = anu <= 0.5 ? anu : anu - 1.0;

    const double mu2 = mu * mu;
    const cplx a1 = 0.25 - mu2;
    cplx b = 2.0 * (xi + 1.0);
    cplx d = 1.0 / b;
    cplx h = d, delh = d;
    cplx q1 = 0.0, q2 = 1.0;
    cplx q = a1, c = a1;
    cplx a = -a1;
    cplx s = 1.0 + q * delh;
    bool converged = false;
    for (int i = 2; i <= 20000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / static_cast<double>(i);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (a * d + b);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < 1e-16 * std::abs(s)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw series_error("bessel_k_cf2: continued fraction did not converge", std::abs(s));
    h = a1 * h;
    const cplx k_mu = std::sqrt(pi / (2.0 * xi)) * std::exp(-xi) / s;
    const cplx k_mup1 = k_mu * (mu + 0.5 + xi - h) / xi;

    cplx k_lo, k_hi; // K_anu, K_{anu+1}
    if (anu <= 0.5) {
        k_lo = k_mu;
        k_hi = k_mup1;
    } else {
        k_lo = k_mup1; // K_{mu+1} = K_anu
        k_hi = k_mu + (2.0 * (mu + 1.0) / xi) * k_mup1;
    }
    if (nu >= 0.0)
        return {k_lo, k_hi};
    // K_{nu} = K_{anu}; K_{nu+1} = K_{anu-1} = K_{anu+1} - (2 anu / xi) K_anu
    return {k_lo, k_hi - (2.0 * anu / xi) * k_lo};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Hankel function of the first kind
// ---------------------------------------------------------------------------

namespace {

Hankel1Eval hankel1_from_j_pair(double kappa, cplx x, const SeriesConfig& cfg) {
    // H^(1)_kappa = i (e^{-i pi kappa} J_kappa - J_{-kappa}) / sin(pi kappa)
    const cplx lx = std::log(x);
    const cplx x2 = x * x;
    const cplx ep = std::exp(kappa * lx), em = std::exp(-kappa * lx);
    const ChiBoth cp = use_series(x2, cfg) ? chi_series(kappa, x2, cfg)
                                           : chi_asymptotic(kappa, x2);
    const ChiBoth cm = use_series(x2, cfg) ? chi_series(-kappa, x2, cfg)
                                           : chi_asymptotic(-kappa, x2);
    const cplx jp = ep * cp.value;
    const cplx jm = em * cm.value;
    const cplx jp_dx = ep * ((kappa / x) * cp.value + 2.0 * x * cp.dzeta);
    const cplx jm_dx = em * ((-kappa / x) * cm.value + 2.0 * x * cm.dzeta);
    const cplx rot = std::exp(cplx(0.0, -pi * kappa));
    const double s = std::sin(pi * kappa);
    const cplx i1(0.0, 1.0);
    return {i1 * (rot * jp - jm) / s, i1 * (rot * jp_dx - jm_dx) / s};
}

Hankel1Eval hankel1_from_jets(double kappa, cplx x, const SeriesConfig& cfg) {
    const auto jets = detail::chi_kappa_jets(x * x, cfg);
    const auto& X = jets.chi_jet;
    const auto& Xd = jets.dchi_jet;
    const cplx ct = std::log(x) - cplx(0.0, 0.5 * pi);

    std::array<cplx, 6> G{};
    G[0] = 2.0 * x * Xd[0];
    for (int j = 1; j < 6; ++j)
        G[j] = (static_cast<double>(j) / x) * X[j - 1] + 2.0 * x * Xd[j];

    auto odd_mix = [&ct](const std::array<cplx, 6>& F, int order) {
        // sum_j C(order, j) ct^{order-j} F_j for odd orders 1, 3, 5
        if (order == 1)
            return ct * F[0] + F[1];
        if (order == 3)
            return ct * ct * ct * F[0] + 3.0 * ct * ct * F[1] + 3.0 * ct * F[2] + F[3];
        const cplx c2 = ct * ct;
        return c2 * c2 * ct * F[0] + 5.0 * c2 * c2 * F[1] + 10.0 * c2 * ct * F[2] +
               10.0 * c2 * F[3] + 5.0 * ct * F[4] + F[5];
    };

    const double k2 = kappa * kappa;
    const cplx polyv = odd_mix(X, 1) + odd_mix(X, 3) * (k2 / 6.0) + odd_mix(X, 5) * (k2 * k2 / 120.0);
    const cplx polyd = odd_mix(G, 1) + odd_mix(G, 3) * (k2 / 6.0) + odd_mix(G, 5) * (k2 * k2 / 120.0);
    const cplx pref = cplx(0.0, 2.0 / pi) * std::exp(cplx(0.0, -0.5 * pi * kappa)) / sinc_r(pi * kappa);
    return {pref * polyv, pref * polyd};
}

Hankel1Eval hankel1_from_k(double kappa, cplx x) {
    // H^(1)_kappa(x) = -(2i/pi) e^{-i pi kappa/2} K_kappa(-i x)
    const cplx xi(x.imag(), -x.real());
    const auto kk = detail::bessel_k_cf2(kappa, xi);
    const cplx dk = -kk.k_nup1 + (kappa / xi) * kk.k_nu; // dK_kappa/dxi
    const cplx pref = cplx(0.0, -2.0 / pi) * std::exp(cplx(0.0, -0.5 * pi * kappa));
    return {pref * kk.k_nu, pref * dk * cplx(0.0, -1.0)};
}

} // namespace

Hankel1Eval hankel1_with_derivative(double kappa, cplx x, const SeriesConfig& cfg) {
    cfg.validate();
    if (x == cplx(0.0, 0.0))
        throw std::domain_error("hankel1: x = 0");
    const double argx = std::arg(x);
    if (std::abs(argx - pi) < 1e-12 || std::abs(argx + pi) < 1e-12)
        throw branch_error("hankel1: x on the negative real axis");
    const double ax = std::abs(x);
    if (ax >= cfg.asymptotic_switch) {
        const auto h = hankel_one_sided(kappa, x, +1);
        return {h.value, h.dx};
    }
    // The J_{+-kappa} combination loses exp(2 Im x) digits when H^(1) decays;
    // switch to the K-Bessel continued fraction there.
    if (x.imag() > 2.0 && ax >= 3.0)
        return hankel1_from_k(kappa, x);
    if (std::abs(kappa) >= kappa_blend)
        return hankel1_from_j_pair(kappa, x, cfg);
    return hankel1_from_jets(kappa, x, cfg);
}

cplx hankel1(double kappa, cplx x, const SeriesConfig& cfg) {
    return hankel1_with_derivative(kappa, x, cfg).value;
}

} // namespace isq
