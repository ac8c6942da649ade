#ifndef ISQ_SPECIAL_HPP
#define ISQ_SPECIAL_HPP

#include <array>
#include <complex>

#include "isq/branch.hpp"

namespace isq {

/// Truncation and branch-switch policy for the entire-function series.
/// The switch radius is tuned so that both branches hold better than 1e-12
/// on either side of it: the alternating series cancels exp(|zeta|^(1/2))
/// down to O(1) and degrades past ~18 even with extended-precision
/// accumulation, while the large-argument expansion is already at machine
/// precision from ~14 up.
struct SeriesConfig {
    double rel_tol = 1e-14;       // term/partial-sum stopping ratio
    int max_terms = 500;          // term budget before series_error
    double asymptotic_switch = 16.0; // on |zeta|^(1/2): beyond -> asymptotics

    void validate() const;
};

/// Width of the band around kappa = 0 inside which singular kappa-quotients
/// are evaluated through their Taylor jets instead of the direct formulas.
inline constexpr double kappa_blend = 1e-2;

/// chi_kappa(zeta) = 2^-kappa * sum_n (-1)^n zeta^n / (Gamma(kappa+n+1) n! 4^n),
/// the entire function with chi_kappa(zeta) = zeta^(-kappa/2) J_kappa(zeta^(1/2)).
/// kappa must not be a negative integer.
cplx chi(cplx kappa, cplx zeta, const SeriesConfig& cfg = {});

/// d/dzeta of chi_kappa(zeta).
cplx chi_dzeta(cplx kappa, cplx zeta, const SeriesConfig& cfg = {});

/// d/dkappa of chi_kappa(zeta), term-by-term: each series term picks up the
/// factor -(log 2 + psi(kappa+n+1)).
cplx chi_dkappa(double kappa, cplx zeta, const SeriesConfig& cfg = {});

/// scripty(zeta) = sum_{n>=1} (-1)^n c_n / ((n!)^2 4^n) zeta^n with
/// c_n the n-th harmonic number. Appears in the kappa = 0 logarithmic
/// solution and in Y_0.
cplx script_y(cplx zeta, const SeriesConfig& cfg = {});

/// First Hankel function H^(1)_kappa(x) for real order |kappa| < 2.
/// x must be off the negative real axis; all internal call sites pass
/// x = r z^(1/2) with z in the cut plane, so arg x in (-pi/4, 3*pi/4].
cplx hankel1(double kappa, cplx x, const SeriesConfig& cfg = {});

struct Hankel1Eval {
    cplx value;
    cplx dx; // derivative with respect to x
};
Hankel1Eval hankel1_with_derivative(double kappa, cplx x, const SeriesConfig& cfg = {});

/// sinc(zeta) = sin(zeta)/zeta, analytic with sinc(0) = 1.
cplx sinc_c(cplx zeta);
double sinc_r(double x);

/// sinh(y)/y = sinc(i y), real and analytic with value 1 at y = 0.
double sinhc(double y);

/// Digamma for real x > 0.
double digamma(double x);

/// Complex gamma function (Lanczos with reflection). Throws
/// std::domain_error at nonpositive integers.
cplx gamma_fn(cplx z);

namespace detail {

/// chi and d/dzeta chi in one evaluation (shared series pass).
struct ChiPair {
    cplx value;
    cplx dzeta;
};
ChiPair chi_with_dzeta(cplx kappa, cplx zeta, const SeriesConfig& cfg = {});

/// Taylor coefficients in kappa about kappa = 0 of the chi series:
/// chi_jet[m]  = d^m/dkappa^m chi_kappa(zeta)        at kappa = 0,
/// dchi_jet[m] = d^m/dkappa^m (d/dzeta chi_kappa)(zeta) at kappa = 0,
/// for m = 0..5. Direct-series evaluation; requires |zeta|^(1/2) within the
/// asymptotic switch. These jets feed the stable odd-part formulas for
/// w^kappa, v^kappa and H^(1)_kappa across kappa = 0.
struct ChiJets {
    std::array<cplx, 6> chi_jet;
    std::array<cplx, 6> dchi_jet;
};
ChiJets chi_kappa_jets(cplx zeta, const SeriesConfig& cfg = {});

/// J_kappa(x) and its x-derivative by the large-argument Hankel asymptotics.
struct BesselEval {
    cplx value;
    cplx dx;
};
BesselEval bessel_j_asymptotic(cplx kappa, cplx x);
Hankel1Eval hankel1_asymptotic(cplx kappa, cplx x);

/// Modified Bessel K_nu(xi) and K_{nu+1}(xi) by the Temme/Thompson-Barnett
/// continued fraction; requires Re xi > 0 and is accurate for |xi| >~ 2.
struct BesselKPair {
    cplx k_nu;
    cplx k_nup1;
};
BesselKPair bessel_k_cf2(double nu, cplx xi);

/// (e^w - 1)/w, stable at w = 0.
cplx expm1_over(cplx w);

} // namespace detail

} // namespace isq

#endif
