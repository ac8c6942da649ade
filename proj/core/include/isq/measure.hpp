#ifndef ISQ_MEASURE_HPP
#define ISQ_MEASURE_HPP

#include <optional>
#include <vector>

#include "isq/solutions.hpp"

namespace isq {

/// Point mass of the spectral measure: location E < 0, weight > 0.
struct Atom {
    double energy;
    double weight;
};

/// Spectral measure of h_{kappa,theta}: absolutely continuous density on
/// (0, infinity) plus at most one atom on (-infinity, 0).
struct SpectralMeasure {
    ExtensionParams params;
    std::optional<Atom> atom;
    double density(double E) const; // E > 0
};

/// A sampled value of the singular Titchmarsh-Weyl m-function.
struct MFunctionValue {
    cplx z;
    cplx m;
};

/// The m-function of h_{kappa,theta} on the cut plane (arg z != 3*pi/2),
/// evaluated in a form that is smooth in kappa across 0. Throws pole_error
/// within 1e-12 of the bound-state energy.
cplx m_function(const ExtensionParams& p, cplx z);

/// Same function computed from its defining Wronskian ratio
/// -(1/2) W(v, u_{theta - pi/2}) / W(v, u_theta) with the Wronskians
/// evaluated numerically at radius r_eval. Independent cross-check path.
cplx m_function_wronskian_path(const ExtensionParams& p, cplx z, double r_eval = 1.0,
                               const SeriesConfig& cfg = {});

/// Closed form of W(v^kappa(z), u^kappa_theta(z)), stable through kappa = 0.
cplx wronskian_v_u_theta(const ExtensionParams& p, cplx z);

/// Phi(kappa, E) = -(log E / (pi sinc(pi kappa))) * sinc((i kappa/2) log E),
/// real for E > 0.
double phi(double kappa, double E);

/// t_{kappa,theta}(E), the reciprocal of the spectral density on E > 0.
double density_t(const ExtensionParams& p, double E);

/// Spectral density of h_{kappa,theta} at E > 0: 1 / t_{kappa,theta}(E).
double density(const ExtensionParams& p, double E);

/// Bound-state energy E_{kappa,theta} < 0 when theta mod pi lies strictly
/// inside (|theta_kappa|, pi - |theta_kappa|); absent otherwise. Throws
/// boundary_error within 1e-12 of the window edge.
std::optional<double> bound_state_energy(const ExtensionParams& p);

/// Weight of the spectral atom; present exactly when the energy is.
std::optional<double> atom_weight(const ExtensionParams& p);

/// Assemble the full measure (density + optional atom).
SpectralMeasure build_measure(const ExtensionParams& p);

/// d V_kappa / dE = (1/2) Theta(E) E^kappa, the theta-free Hankel measure.
double v_kappa_density(double kappa, double E);

/// Richardson-extrapolated boundary limit of Im m(E + i eta) over a
/// decreasing eta sequence.
struct MLimitResult {
    double limit;
    double error;
    bool converged;
};
MLimitResult m_limit_check(const ExtensionParams& p, double E,
                           const std::vector<double>& etas = {1e-2, 1e-3, 1e-4});

} // namespace isq

#endif
