#ifndef ISQ_SOLUTIONS_HPP
#define ISQ_SOLUTIONS_HPP

#include <complex>
#include <functional>

#include "isq/special.hpp"

namespace isq {

/// Parameters (kappa, theta) selecting the self-adjoint extension h_{kappa,theta}.
/// theta labels the extension modulo pi; theta_kappa = pi*kappa/2 is the
/// offset at which the expansion reduces to the Hankel transform.
struct ExtensionParams {
    double kappa = 0.0;
    double theta = 0.0;

    ExtensionParams() = default;
    ExtensionParams(double kappa_, double theta_);

    double theta_kappa() const noexcept { return 0.5 * 3.14159265358979323846 * kappa; }
    /// Representative of theta in [0, pi).
    double canonical_theta() const noexcept;
};

/// Value and r-derivative of a solution at fixed (z, r).
struct SolutionEval {
    cplx value;
    cplx d_r;
};

/// u^kappa(z|r) = r^(1/2+kappa) chi_kappa(r^2 z). Solves the spectral
/// equation for every kappa (negative integers excluded); kappa >= 1 is
/// allowed here even though extensions only exist for |kappa| < 1.
SolutionEval eval_u(double kappa, cplx z, double r, const SeriesConfig& cfg = {});

/// w^kappa(z) = (u^kappa cos(pi kappa) - u^{-kappa}) / sin(pi kappa),
/// continued analytically through kappa = 0 (logarithmic solution there).
SolutionEval eval_w(double kappa, cplx z, double r, const SeriesConfig& cfg = {});

/// u^kappa_theta(z) = u^kappa(z) cos(theta - theta_kappa)
///                  + w^kappa(z) sin(theta - theta_kappa).
SolutionEval eval_u_theta(const ExtensionParams& p, cplx z, double r,
                          const SeriesConfig& cfg = {});

/// v^kappa(z|r) = (i pi / 2) e^{i pi kappa / 2} r^(1/2) H^(1)_kappa(r z^(1/2)),
/// the solution square-integrable at infinity for Im z > 0. z must be off the
/// ray arg z = 3*pi/2.
SolutionEval eval_v(double kappa, cplx z, double r, const SeriesConfig& cfg = {});

/// W_r(f, g) = f g' - f' g evaluated from two SolutionEvals at the same r.
cplx wronskian_at(const SolutionEval& f, const SolutionEval& g);

/// (kappa^2 - 1/4) / r^2
double q_potential(double kappa, double r);

/// Relative defect of -f'' + q_kappa f = E f at radius r, with f'' taken by
/// a 5-point central difference of step h. Requires r - 2h > 0.
double ode_residual(double kappa, cplx E,
                    const std::function<SolutionEval(double)>& f,
                    double r, double h);

} // namespace isq

#endif
