#ifndef ISQ_BRANCH_HPP
#define ISQ_BRANCH_HPP

#include <complex>

namespace isq {

using cplx = std::complex<double>;

/// The two branch-cut conventions used throughout the library.
///
/// lower_imaginary cuts along the ray arg = 3*pi/2 (the negative imaginary
/// axis) and reduces arguments to the open range (-pi/2, 3*pi/2); it is the
/// cut in which the spectral parameter z lives. negative_real cuts along
/// arg = pi and reduces arguments to (-pi, pi); it is the principal cut used
/// for radial powers.
enum class BranchCut {
    lower_imaginary, // cut angle 3*pi/2
    negative_real    // cut angle pi
};

/// Cut angle in radians: 3*pi/2 or pi.
double cut_angle(BranchCut cut) noexcept;

/// log z with the argument reduced per the BranchCut convention and
/// log 1 = 0. Throws branch_error if z lies within 1e-12 radians of the cut
/// ray, std::domain_error if z == 0.
cplx cut_log(cplx z, BranchCut cut);

/// z^rho = exp(rho * cut_log(z, cut)).
cplx cut_power(cplx z, cplx rho, BranchCut cut);

} // namespace isq

#endif
