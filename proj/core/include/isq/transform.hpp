#ifndef ISQ_TRANSFORM_HPP
#define ISQ_TRANSFORM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "isq/measure.hpp"
#include "isq/quadrature.hpp"
#include "isq/solutions.hpp"

namespace isq {

/// A function sampled on a compact interval (a, b) in r together with a
/// quadrature rule. The rule integrates constants exactly:
/// sum(weights) = b - a to rounding.
struct GridFunction {
    double a = 0.0, b = 0.0;
    std::vector<double> nodes, weights, values;
    void validate() const;
    double norm2() const; // integral of value^2 under the rule
};

/// Closed-form test function with exact first and second derivatives.
struct SmoothFunction {
    double a = 0.0, b = 0.0;
    std::function<double(double)> f, df, d2f;
};

/// L2-normalized C^2 bump ((r-a)(b-r))^3 on [a, b] with analytic derivatives.
SmoothFunction make_bump(double a, double b);

/// Composite Gauss sampling of a callable on [a, b]. Panels are kept no
/// wider than half the shortest kernel oscillation wavelength 2*pi/sqrt(e_max).
GridFunction sample_grid(double a, double b, const std::function<double(double)>& f,
                         double e_max, int order = 16, int min_panels = 4);
GridFunction sample_grid(const SmoothFunction& s, double e_max, int order = 16,
                         int min_panels = 4);

/// Quadrature grid in E on (e_min, e_max], built uniformly in k = sqrt(E) so
/// panels track the kernel oscillation exp(i k r) up to radius r_max.
struct EnergyGrid {
    std::vector<double> nodes, weights;
};
EnergyGrid make_energy_grid(double e_max, double r_max, double e_min = 0.0,
                            int order = 16, int min_panels = 4);

/// Spectral-side samples: values on an E > 0 grid plus the coefficient at
/// the bound-state atom when the measure has one.
struct SpectralFunction {
    std::vector<double> e_nodes, e_weights, values;
    std::optional<double> atom_coeff;
};

/// (U_{kappa,theta} psi)(E) = integral of u^kappa_theta(E|r) psi(r) dr over
/// the support of psi, evaluated with psi's quadrature rule at each grid
/// energy; the atom channel is filled at E_{kappa,theta} when present.
SpectralFunction forward(const ExtensionParams& p, const GridFunction& psi,
                         const EnergyGrid& eg);

/// theta-free Hankel path (U_kappa psi)(E) with kernel u^kappa; valid for
/// any kappa > -1, including kappa >= 1.
SpectralFunction forward_u(double kappa, const GridFunction& psi, const EnergyGrid& eg);

/// (U^{-1} phi)(r) = integral of u(E|r) phi(E) density(E) dE plus the atom
/// term weight * atom_coeff * u(E_atom|r).
std::vector<double> inverse(const ExtensionParams& p, const SpectralFunction& phi,
                            const std::vector<double>& r_grid);

/// -psi'' + q_kappa psi at the given nodes, using the exact derivatives.
std::vector<double> apply_hamiltonian(double kappa, const SmoothFunction& psi,
                                      const std::vector<double>& nodes);

/// Relative Parseval defect |  ||psi||^2 - integral |U psi|^2 dV  | / ||psi||^2
/// with the E-integral truncated at e_max. tail_estimate extrapolates the
/// truncated mass from the last two dyadic shells; the result is flagged
/// inconclusive (not failed) when that estimate exceeds tail_tol.
struct ParsevalResult {
    double defect;
    double tail_estimate;
    bool conclusive;
};
ParsevalResult parseval_defect(const ExtensionParams& p, const GridFunction& psi,
                               double e_max, double tail_tol = 1e-4);

/// max over e_points of |U(h psi)(E) - E (U psi)(E)| / (1 + |E (U psi)(E)|).
double diag_defect(const ExtensionParams& p, const SmoothFunction& psi,
                   const std::vector<double>& e_points);

} // namespace isq

#endif
